//! The smash product of two complexes through the butterfly `D_N`.
//!
//! Both inputs are cut into crowns, the left crown is made cofibrant by
//! replacing each `zeta_n` with the mapping cylinder of `beta_n -> zeta_n`,
//! the crowns are tensored over `C_N × C_N` and pushed to `D_N` along `pr`.
//! Restricting along `i : C_N -> D_N` gives a crown again, and `Q` of it is
//! compared with `C ⊗ C̃`.

use serde::Serialize;
use serde_json::{json, Value};

use super::crown::{crown_decompose, q_unvalidated, LObject, QResult};
use crate::complexes::{
    crown_data, derived_tensor, flat_replacement, mapping_cylinder, ChainMap, CrownData, CyclicComplex, Cylinder,
    TensorComplex,
};
use crate::derived::{augmentation, cohomology_diagram, derived_lkan_all, hocolim_cx};
use crate::diagrams::{diagram_tensor, is_reedy_cofibrant, strict_colim, strict_lkan, CxDiagram, Diagram, Lkan, TensorDiagram};
use crate::error::{Error, Result};
use crate::palgebra::lattice::solve;
use crate::palgebra::{tensor_maps, DirectSum, FpModule, Matrix, ModuleMap, PScalar, Tensor};
use crate::posets::{crown_inclusion, pr};

fn sign(k: usize) -> PScalar {
    if k.is_multiple_of(2) {
        PScalar::one()
    } else {
        PScalar::from_int(-1)
    }
}

/// One verified statement with the invariants that witness it.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub anchor: String,
    #[serde(rename = "status", serialize_with = "status")]
    pub passed: bool,
    pub witness: Value,
}

fn status<S: serde::Serializer>(passed: &bool, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(if *passed { "pass" } else { "fail" })
}

impl Check {
    fn new(anchor: &str, passed: bool, witness: Value) -> Check {
        Check { anchor: anchor.to_string(), passed, witness }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct PipelineOptions {
    /// replace non-flat inputs by their flat models instead of failing
    pub auto_flat: bool,
    /// also compute `L_k LKan_pr` of the cohomology diagrams
    pub butterfly_e2: bool,
    /// also compare `hocolim` over `D_N` with `hocolim` over `C_N`
    pub restriction: bool,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        PipelineOptions { auto_flat: true, butterfly_e2: true, restriction: true }
    }
}

/// Everything the pipeline builds.
#[derive(Clone, Debug)]
pub struct Artifacts {
    pub left: CyclicComplex,
    pub right: CyclicComplex,
    /// left crown with cylinders at the `zeta` vertices
    pub left_crown: LObject,
    pub right_crown: LObject,
    pub cylinders: Vec<Cylinder>,
    pub tensor: TensorDiagram<CyclicComplex>,
    pub e: Lkan<CyclicComplex>,
    pub restricted: LObject,
    pub q: QResult,
    pub product: TensorComplex,
    left_data: Vec<CrownData>,
    right_data: Vec<CrownData>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PipelineReport {
    pub notes: Vec<String>,
    pub checks: Vec<Check>,
    pub q_objects: Vec<FpModule>,
    pub tensor_objects: Vec<FpModule>,
    pub q_cohomology: Vec<FpModule>,
    pub oracle_cohomology: Vec<FpModule>,
    #[serde(skip)]
    pub artifacts: Option<Box<Artifacts>>,
}

impl PipelineReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, anchor: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.anchor == anchor)
    }
}

/// `A'`: `zeta_n` replaced by `Cyl(beta_n -> zeta_n)`, with the `beta_{n+1}`
/// leg going through the bottom of the cylinder.
pub fn cylinder_crown(a: &LObject) -> (LObject, Vec<Cylinder>) {
    let n = a.period;
    let cyls: Vec<Cylinder> = (0..n).map(|k| mapping_cylinder(a.diagram.map(a.beta(k), a.zeta(k)))).collect();
    let mut objects: Vec<CyclicComplex> = (0..n).map(|k| a.diagram.object(k).clone()).collect();
    objects.extend(cyls.iter().map(|c| c.complex.clone()));
    let diagram = Diagram::from_fn(a.diagram.shape().clone(), objects, |x, y| {
        let z = y - n;
        if x == z {
            cyls[z].top.clone()
        } else {
            cyls[z].bottom.compose_unchecked(a.diagram.map(x, y))
        }
    })
    .expect("cylinder legs commute");
    (LObject { diagram, period: n }, cyls)
}

fn product_vertex(period: usize, a: usize, b: usize) -> usize {
    a * 2 * period + b
}

/// Run the construction up to `Q(i^* E)`.
pub fn build(c: &CyclicComplex, ct: &CyclicComplex) -> Result<Artifacts> {
    if c.p() != ct.p() {
        return Err(Error::PrimeMismatch(c.p(), ct.p()));
    }
    c.check_flat()?;
    ct.check_flat()?;
    let p = c.p();
    let n = c.period();
    let (left_crown, cylinders) = cylinder_crown(&crown_decompose(c));
    let right_crown = crown_decompose(ct);
    let tensor = diagram_tensor(&left_crown.diagram, &right_crown.diagram)?;
    let e = strict_lkan(&pr(n), &tensor.diagram, &CyclicComplex::zero(p))?;
    let restricted = LObject::new(e.diagram.pullback(&crown_inclusion(n))?)?;
    let q = q_unvalidated(&restricted)?;
    let product = TensorComplex::new(c, ct)?;
    Ok(Artifacts {
        left: c.clone(),
        right: ct.clone(),
        left_crown,
        right_crown,
        cylinders,
        tensor,
        e,
        restricted,
        q,
        product,
        left_data: crown_data(c),
        right_data: crown_data(ct),
    })
}

impl Artifacts {
    pub fn period(&self) -> usize {
        self.left.period()
    }

    fn p(&self) -> u64 {
        self.left.p()
    }

    /// `E` as a diagram over `D_N`.
    pub fn e_diagram(&self) -> &CxDiagram {
        &self.e.diagram
    }

    /// Coordinates of `x` of `C^s` in the cylinder at `zeta_s`.
    fn in_cylinder(&self, s: usize, x: &[PScalar]) -> Vec<PScalar> {
        self.cylinders[s].layouts[s].embed(2, x)
    }

    /// Cocone image in `E_d^{s+t}` of `x ⊗ y` at the vertex `(a, b)`, with
    /// `x` in degree `s` of the left crown at `a` and `y` in degree `t` of
    /// the right crown at `b`.
    fn push(&self, (a, b): (usize, usize), s: usize, t: usize, x: &[PScalar], y: &[PScalar], d: usize) -> Vec<PScalar> {
        let per = self.period();
        let deg = (s + t) % per;
        let c = product_vertex(per, a, b);
        let v = self.tensor.layouts[c].elementary(deg, s, x, y);
        let leg = self.e.cocone(d, c).comp(deg);
        leg.matrix().mul(&Matrix::column_vector(&v)).column(0)
    }

    /// Matrix of `x_i ⊗ y_j` over the columns of `xs` and `ys`, columns in
    /// the generator order of `layout`.
    fn tensor_block(
        &self,
        vertex: (usize, usize),
        (s, t): (usize, usize),
        xs: &[Vec<PScalar>],
        ys: &[Vec<PScalar>],
        layout: &Tensor,
        d: usize,
    ) -> Matrix {
        let rows = self.e.diagram.object(d).module(s + t).ngens();
        let mut out = Matrix::zeros(rows, layout.module.ngens());
        for (i, x) in xs.iter().enumerate() {
            for (j, y) in ys.iter().enumerate() {
                for (r, a) in self.push(vertex, s, t, x, y, d).into_iter().enumerate() {
                    out.set(r, layout.pos[i][j], a);
                }
            }
        }
        out
    }

    /// Columns of `m`, mapped into the cylinder at `zeta_s` when `cyl`.
    fn columns(&self, m: &Matrix, cyl: Option<usize>) -> Vec<Vec<PScalar>> {
        (0..m.cols()).map(|j| m.column(j)).map(|c| if let Some(s) = cyl { self.in_cylinder(s, &c) } else { c }).collect()
    }

    /// Cocycle `(v, w)` of `cone(E_{gamma_{n+1}} -> E_{zeta_n})` over each
    /// column `w`, as cone coordinates.
    fn complete_to_cocycle(&self, n: usize, w: &Matrix) -> Result<Matrix> {
        let per = self.period();
        let a = &self.restricted;
        let x = a.diagram.object(a.beta(n + 1));
        let y = a.diagram.object(a.zeta(n));
        let f = a.diagram.map(a.beta(n + 1), a.zeta(n)).comp(n + 1).matrix();
        let dx = x.diff(n + 1).matrix();
        let ry = y.module(n + 1).relations();
        let rx = x.module(n + 2).relations();
        let top = f.hstack(&ry).hstack(&Matrix::zeros(f.rows(), rx.cols()));
        let bottom = dx.hstack(&Matrix::zeros(dx.rows(), ry.cols())).hstack(&rx);
        let lhs = top.vstack(&bottom);
        let rhs = y.diff(n).matrix().mul(w).neg().vstack(&Matrix::zeros(dx.rows(), w.cols()));
        let sol = solve(&lhs, &rhs, self.p())
            .ok_or_else(|| Error::InvalidInput(format!("no cone cocycle over the degree {n} tensor classes")))?;
        let v = sol.row_range(0, f.cols());
        let layout = &self.q.cones[n % per].layouts[n % per];
        let mut out = Matrix::zeros(layout.module.ngens(), w.cols());
        for j in 0..w.cols() {
            for (i, &r) in layout.pos[0].iter().enumerate() {
                out.set(r, j, v.get(i, j).clone());
            }
            for (i, &r) in layout.pos[1].iter().enumerate() {
                out.set(r, j, w.get(i, j).clone());
            }
        }
        Ok(out)
    }

    /// `ψ^n : (C ⊗ C̃)^n -> Q(i^* E)^n`, `x ⊗ y -> (-1)^n [(v, x ⊗ y)]`.
    pub fn comparison(&self) -> Result<Vec<ModuleMap>> {
        let per = self.period();
        (0..per)
            .map(|n| {
                let layout = &self.product.layouts[n];
                let rows = self.e.diagram.object(2 * per + n).module(n).ngens();
                let mut w = Matrix::zeros(rows, layout.module.ngens());
                for s in 0..per {
                    let t = (n + per - s) % per;
                    let piece = &self.product.pieces[n][s];
                    let xs = self.columns(&Matrix::identity(self.left.module(s).ngens()), Some(s));
                    let ys = self.columns(&Matrix::identity(self.right.module(t).ngens()), None);
                    let block = self.tensor_block((per + s, per + t), (s, t), &xs, &ys, piece, 2 * per + n);
                    for (k, &col) in layout.pos[s].iter().enumerate() {
                        for r in 0..rows {
                            w.set(r, col, block.get(r, k).clone());
                        }
                    }
                }
                let cocycles = self.complete_to_cocycle(n, &w)?.scale(&sign(n));
                let m = self.q.classes[n].class(&cocycles);
                ModuleMap::new(layout.module.clone(), self.q.complex.module(n).clone(), m)
            })
            .collect()
    }
}

/// The two rows of short exact sequences at `zeta_n` and `gamma_n` and the
/// vertical map between them.
///
/// Top: `0 -> ⊕ Z^s ⊗ Z̃^t -> H^n(E_{zeta_n}) -> ⊕ B^s ⊗ B̃^{t+1} -> 0`.
/// Bottom: the pushout `⊕ Z^s ⊗ B̃^t ∪_{B^s ⊗ B̃^t} B^s ⊗ Z̃^t` in place of
/// the cocycle tensors and `H^n(E_{gamma_n})` in the middle.
#[derive(Clone, Debug, Serialize)]
pub struct BzReport {
    pub degree: usize,
    pub cocycle_tensors: FpModule,
    pub zeta_cohomology: FpModule,
    pub coboundary_tensors: FpModule,
    pub top_left_exact: bool,
    pub top_cokernel_matches: bool,
    pub pushout: FpModule,
    pub gamma_cohomology: FpModule,
    pub bottom_left_exact: bool,
    pub bottom_cokernel_matches: bool,
    /// `H^n(E_{gamma_n} -> E_{zeta_n})` is injective
    pub vertical_injective: bool,
    /// its kernel, and `⊕_{s+t=n} Tor(H^s, H̃^t)` for comparison
    pub vertical_kernel: FpModule,
    pub tor_terms: FpModule,
}

impl BzReport {
    /// Both rows are short exact.
    pub fn rows_exact(&self) -> bool {
        self.top_left_exact && self.top_cokernel_matches && self.bottom_left_exact && self.bottom_cokernel_matches
    }

    /// The failure of injectivity is exactly the Tor term.
    pub fn kernel_is_tor(&self) -> bool {
        self.vertical_kernel == self.tor_terms
    }
}

/// Blocks of columns placed by `pos` into the columns of a sum.
fn place(rows: usize, sum: &DirectSum, blocks: &[Matrix]) -> Matrix {
    let mut out = Matrix::zeros(rows, sum.module.ngens());
    for (i, block) in blocks.iter().enumerate() {
        for (k, &col) in sum.pos[i].iter().enumerate() {
            for r in 0..rows {
                out.set(r, col, block.get(r, k).clone());
            }
        }
    }
    out
}

pub fn verify_bz(art: &Artifacts, n: usize) -> Result<BzReport> {
    let per = art.period();
    let p = art.p();
    let n = n % per;
    let (zeta, gamma) = (2 * per + n, per + n);
    let hz = art.e.diagram.object(zeta).cohomology_data(n);
    let hg = art.e.diagram.object(gamma).cohomology_data(n);
    let unit = |m: &FpModule| art.columns(&Matrix::identity(m.ngens()), None);

    let mut zz_parts = Vec::new();
    let mut zz_blocks = Vec::new();
    let mut po_parts = Vec::new();
    let mut po_blocks = Vec::new();
    let mut rel_blocks = Vec::new();
    let mut b_parts = Vec::new();
    let mut tor_parts = Vec::new();
    for s in 0..per {
        let t = (n + per - s) % per;
        let (l, r) = (&art.left_data[s], &art.right_data[t]);
        let zz = Tensor::new(&l.cocycles, &r.cocycles)?;
        let zx = art.columns(l.cocycle_mono.matrix(), Some(s));
        let zy = art.columns(r.cocycle_mono.matrix(), None);
        zz_blocks.push(art.tensor_block((per + s, per + t), (s, t), &zx, &zy, &zz, zeta));
        zz_parts.push(zz.module.clone());

        let zb = Tensor::new(&l.cocycles, &r.coboundaries)?;
        let bz = Tensor::new(&l.coboundaries, &r.cocycles)?;
        po_blocks.push(art.tensor_block((per + s, t), (s, t), &zx, &unit(&r.coboundaries), &zb, gamma));
        po_blocks.push(art.tensor_block((s, per + t), (s, t), &unit(&l.coboundaries), &zy, &bz, gamma));
        po_parts.push(zb.module.clone());
        po_parts.push(bz.module.clone());
        let (il, ir) = (l.boundary_in_cocycles(), r.boundary_in_cocycles());
        rel_blocks.push(tensor_maps(&il, &ModuleMap::identity(&r.coboundaries))?);
        rel_blocks.push(tensor_maps(&ModuleMap::identity(&l.coboundaries), &ir)?.neg());

        let t1 = (n + 1 + per - s) % per;
        b_parts.push(Tensor::new(&l.coboundaries, &art.right_data[t1].coboundaries)?.module);
        tor_parts.push(crate::palgebra::tor(&art.left.cohomology(s), &art.right.cohomology(t))?);
    }
    let coboundary_tensors = DirectSum::new(p, &b_parts).module;

    // top row
    let zz_sum = DirectSum::new(p, &zz_parts);
    let alpha = ModuleMap::new(zz_sum.module.clone(), hz.module.clone(), hz.class(&place(hz.reps.rows(), &zz_sum, &zz_blocks)))?;
    let (top_coker, _) = alpha.cokernel();

    // bottom row: the pushout as a cokernel of ⊕ B ⊗ B̃
    let po_sum = DirectSum::new(p, &po_parts);
    let bb_parts: Vec<FpModule> = rel_blocks.chunks(2).map(|c| c[0].source().clone()).collect();
    let bb_sum = DirectSum::new(p, &bb_parts);
    let mut rel = Matrix::zeros(po_sum.module.ngens(), bb_sum.module.ngens());
    for (k, m) in rel_blocks.iter().enumerate() {
        let s = k / 2;
        for (i, &row) in po_sum.pos[k].iter().enumerate() {
            for (j, &col) in bb_sum.pos[s].iter().enumerate() {
                rel.set(row, col, m.matrix().get(i, j).clone());
            }
        }
    }
    let rel = ModuleMap::new(bb_sum.module.clone(), po_sum.module.clone(), rel)?;
    let (pushout, po_epi) = rel.cokernel();
    let lifted = ModuleMap::new(po_sum.module.clone(), hg.module.clone(), hg.class(&place(hg.reps.rows(), &po_sum, &po_blocks)))?;
    let beta = ModuleMap::descend_through_epi(&po_epi, &lifted)?;
    let (bottom_coker, _) = beta.cokernel();

    let vertical = art.e.diagram.map(gamma, zeta).on_cohomology(n);
    let (vertical_kernel, _) = vertical.kernel();
    Ok(BzReport {
        degree: n,
        cocycle_tensors: zz_sum.module,
        zeta_cohomology: hz.module,
        top_left_exact: alpha.is_mono(),
        top_cokernel_matches: top_coker == coboundary_tensors,
        pushout,
        gamma_cohomology: hg.module,
        bottom_left_exact: beta.is_mono(),
        bottom_cokernel_matches: bottom_coker == coboundary_tensors,
        coboundary_tensors,
        vertical_injective: vertical.is_mono(),
        vertical_kernel,
        tor_terms: DirectSum::new(p, &tor_parts).module,
    })
}

/// `E_2^{-k,t} = L_k LKan_pr H^t(A' ⊗ Ã)` over the butterfly.
#[derive(Clone, Debug, Serialize)]
pub struct ButterflyE2 {
    /// `columns[t][k]`: the `L_k` modules at every vertex of `D_N`
    pub columns: Vec<Vec<Vec<FpModule>>>,
    /// nothing outside `k = 0, 1`
    pub two_columns: bool,
}

pub fn butterfly_e2(art: &Artifacts) -> Result<ButterflyE2> {
    let per = art.period();
    let p = art.p();
    let f = pr(per);
    let columns: Vec<Vec<Vec<FpModule>>> = (0..per)
        .map(|t| {
            let ls = derived_lkan_all(&f, &cohomology_diagram(&art.tensor.diagram, t, p)?, p)?;
            Ok(ls.iter().map(|d| d.objects().to_vec()).collect())
        })
        .collect::<Result<_>>()?;
    let two_columns = columns.iter().all(|col| col.iter().skip(2).all(|ms| ms.iter().all(FpModule::is_zero)));
    Ok(ButterflyE2 { columns, two_columns })
}

/// `hocolim_{C_N} i^* E -> colim_{C_N} i^* E -> colim_{D_N} E`, with `E`
/// Reedy cofibrant so that the target computes `hocolim_{D_N} E`.
#[derive(Clone, Debug, Serialize)]
pub struct RestrictionReport {
    pub e_reedy_cofibrant: bool,
    pub quasi_iso: bool,
    pub crown_cohomology: Vec<FpModule>,
    pub butterfly_cohomology: Vec<FpModule>,
}

impl RestrictionReport {
    pub fn passed(&self) -> bool {
        self.e_reedy_cofibrant && self.quasi_iso && self.crown_cohomology == self.butterfly_cohomology
    }
}

pub fn restriction_check(art: &Artifacts) -> Result<RestrictionReport> {
    let p = art.p();
    let zero = CyclicComplex::zero(p);
    let e = &art.e.diagram;
    let ie = &art.restricted.diagram;
    let tot = hocolim_cx(ie, p);
    let (small, eps) = augmentation(ie, &tot, p);
    let big = strict_colim(e, &zero);
    let i = crown_inclusion(art.period());
    let legs: Vec<ChainMap> = (0..ie.shape().len()).map(|c| big.cocone[i.apply(c)].clone()).collect();
    let to_big = small.induced(&legs)?;
    let total = to_big.compose_unchecked(&eps);
    Ok(RestrictionReport {
        e_reedy_cofibrant: is_reedy_cofibrant(e, &zero)?,
        quasi_iso: total.is_quasi_iso(),
        crown_cohomology: tot.complex.cohomology_table(),
        butterfly_cohomology: big.object.cohomology_table(),
    })
}

fn modules_json(ms: &[FpModule]) -> Value {
    Value::Array(ms.iter().map(|m| Value::String(m.to_string())).collect())
}

/// The full pipeline with default options.
pub fn smash_pipeline(c: &CyclicComplex, ct: &CyclicComplex) -> Result<PipelineReport> {
    smash_pipeline_with(c, ct, &PipelineOptions::default())
}

pub fn smash_pipeline_with(c: &CyclicComplex, ct: &CyclicComplex, opts: &PipelineOptions) -> Result<PipelineReport> {
    if c.p() != ct.p() {
        return Err(Error::PrimeMismatch(c.p(), ct.p()));
    }
    let mut notes = Vec::new();
    let mut flat = |x: &CyclicComplex, side: &str| -> Result<CyclicComplex> {
        if x.is_flat() {
            return Ok(x.clone());
        }
        if !opts.auto_flat {
            x.check_flat()?;
        }
        notes.push(format!("{side} input has torsion and was replaced by its flat model"));
        Ok(flat_replacement(x).complex)
    };
    let (fc, fct) = (flat(c, "left")?, flat(ct, "right")?);
    let oracle = if c.is_flat() && ct.is_flat() {
        crate::complexes::tensor_cyclic(c, ct)?.cohomology_table()
    } else {
        derived_tensor(c, ct)?.cohomology_table()
    };
    let art = build(&fc, &fct)?;
    let per = art.period();
    let mut checks = Vec::new();

    let reedy = is_reedy_cofibrant(&art.tensor.diagram, &CyclicComplex::zero(c.p()))?;
    checks.push(Check::new("tensor-reedy-cofibrant", reedy, json!({ "vertices": art.tensor.diagram.shape().len() })));

    let l = art.restricted.check();
    checks.push(Check::new("lobject-membership", l.passed(), to_json(&l)));

    let q_objects = art.q.complex.modules().to_vec();
    let tensor_objects = art.product.complex.modules().to_vec();
    checks.push(Check::new(
        "object-identification",
        q_objects == tensor_objects,
        json!({ "q": modules_json(&q_objects), "tensor": modules_json(&tensor_objects) }),
    ));

    let bz: Vec<BzReport> = (0..per).map(|n| verify_bz(&art, n)).collect::<Result<_>>()?;
    checks.push(Check::new("bz-sequence", bz.iter().all(BzReport::rows_exact), to_json(&bz)));
    checks.push(Check::new(
        "injectivity-defect-is-tor",
        bz.iter().all(BzReport::kernel_is_tor),
        json!(bz.iter().map(|b| json!({ "n": b.degree, "kernel": b.vertical_kernel.to_string(), "tor": b.tor_terms.to_string() })).collect::<Vec<_>>()),
    ));

    let q_cohomology = art.q.complex.cohomology_table();
    checks.push(Check::new(
        "cohomology-comparison",
        q_cohomology == oracle,
        json!({ "q": modules_json(&q_cohomology), "oracle": modules_json(&oracle) }),
    ));

    let psi = art.comparison()?;
    let psi_iso = psi.iter().all(ModuleMap::is_iso);
    let psi_chain = (0..per).all(|n| {
        psi[(n + 1) % per].compose_unchecked(art.product.complex.diff(n)) == art.q.complex.diff(n).compose_unchecked(&psi[n])
    });
    checks.push(Check::new("comparison-map", psi_iso && psi_chain, json!({ "iso": psi_iso, "chain_map": psi_chain })));

    if opts.restriction {
        let r = restriction_check(&art)?;
        checks.push(Check::new("restriction-comparison", r.passed(), to_json(&r)));
    }
    if opts.butterfly_e2 {
        let e2 = butterfly_e2(&art)?;
        let nonzero: Vec<(usize, usize)> = e2
            .columns
            .iter()
            .enumerate()
            .flat_map(|(t, col)| col.iter().enumerate().filter(|(_, ms)| ms.iter().any(|m| !m.is_zero())).map(move |(k, _)| (t, k)))
            .collect();
        checks.push(Check::new("butterfly-e2-columns", e2.two_columns, json!({ "nonzero_t_k": nonzero })));
    }

    Ok(PipelineReport {
        notes,
        checks,
        q_objects,
        tensor_objects,
        q_cohomology,
        oracle_cohomology: oracle,
        artifacts: Some(Box::new(art)),
    })
}

fn to_json<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}
