//! Cones and pushout products as homotopy colimits.

use std::sync::Arc;

use super::tot::{holkan_cx, hocolim_cx, tot_map, Tot};
use crate::complexes::{mapping_cone, ChainMap, ComplexSum, Cone, CyclicComplex};
use crate::diagrams::{diagram_tensor, CxDiagram, Diagram, DiagramMap};
use crate::error::{Error, Result};
use crate::palgebra::{DirectSum, Matrix, PScalar};
use crate::posets::{interval, p_v, square, v_poset, FinPoset, PosetMap};

fn sign(k: usize) -> PScalar {
    if k.is_multiple_of(2) {
        PScalar::one()
    } else {
        PScalar::from_int(-1)
    }
}

/// Diagram over `V` with the given objects at `(1,0), (0,0), (0,1)` and
/// edges out of `(0,0)`.
pub fn v_diagram(left: &CyclicComplex, mid: &CyclicComplex, right: &CyclicComplex, to_left: &ChainMap, to_right: &ChainMap) -> Result<CxDiagram> {
    let v = v_poset();
    let objects = vec![left.clone(), mid.clone(), right.clone()];
    Diagram::from_fn(v, objects, |_, b| if b == 0 { to_left.clone() } else { to_right.clone() })
}

/// The `V`-diagram `0 <- X -> Y` of `f`.
pub fn cone_diagram(f: &ChainMap) -> Result<CxDiagram> {
    let zero = CyclicComplex::zero(f.source().p());
    v_diagram(&zero, f.source(), f.target(), &ChainMap::zero(f.source(), &zero), f)
}

/// Block matrix placing `blocks` into the parts of a layout.
fn blocks_into(tgt: &DirectSum, src: &DirectSum, blocks: &[(usize, usize, Matrix)]) -> Matrix {
    let refs: Vec<(usize, usize, &Matrix)> = blocks.iter().map(|(a, b, m)| (*a, *b, m)).collect();
    DirectSum::block_matrix(tgt, src, &refs)
}

/// `hocolim_V (0 <- X -> Y)` with its comparison to the mapping cone.
#[derive(Clone, Debug)]
pub struct DiagramCone {
    pub tot: Tot,
    pub cone: Cone,
    /// `(x, y, a, b) -> ((-1)^n b, y)`
    pub comparison: ChainMap,
}

impl DiagramCone {
    pub fn complex(&self) -> &CyclicComplex {
        &self.tot.complex
    }

    pub fn comparison_is_quasi_iso(&self) -> bool {
        self.comparison.is_quasi_iso()
    }
}

pub fn diagram_cone(f: &ChainMap) -> Result<DiagramCone> {
    let p = f.source().p();
    let x = cone_diagram(f)?;
    let tot = hocolim_cx(&x, p);
    let cone = mapping_cone(f);
    let n = tot.layouts.len();
    let b = tot.position(&[1, 2]).expect("chain (0,0) < (0,1)");
    let y = tot.position(&[2]).expect("chain (0,1)");
    let mats = (0..n)
        .map(|deg| {
            let xb = Matrix::identity(f.source().module(deg + 1).ngens()).scale(&sign(deg));
            let yy = Matrix::identity(f.target().module(deg).ngens());
            blocks_into(&cone.layouts[deg], &tot.layouts[deg], &[(0, b, xb), (1, y, yy)])
        })
        .collect();
    let comparison = ChainMap::new(
        tot.complex.clone(),
        cone.complex.clone(),
        mats_to_comps(&tot.complex, &cone.complex, mats),
    )?;
    Ok(DiagramCone { tot, cone, comparison })
}

fn mats_to_comps(src: &CyclicComplex, tgt: &CyclicComplex, mats: Vec<Matrix>) -> Vec<crate::palgebra::ModuleMap> {
    mats.into_iter()
        .enumerate()
        .map(|(k, m)| crate::palgebra::ModuleMap::new(src.module(k).clone(), tgt.module(k).clone(), m).expect("well-defined block map"))
        .collect()
}

/// The `(0,1) < (1,1)` edge of `holkan` of the cone diagram along `V ⊂ I × I`.
#[derive(Clone, Debug)]
pub struct ConeMap {
    pub edge: ChainMap,
    /// `Y -> (holkan)_{(0,1)}` at the chain `(0,1)`
    pub unit: ChainMap,
    pub diagram_cone: DiagramCone,
}

impl ConeMap {
    /// `unit` is a quasi-isomorphism and `comparison ∘ edge ∘ unit` is the
    /// mapping cone inclusion on the nose.
    pub fn agrees_with_mapping_cone(&self) -> bool {
        let composite = self.diagram_cone.comparison.compose_unchecked(&self.edge.compose_unchecked(&self.unit));
        self.unit.is_quasi_iso() && composite.equal(&self.diagram_cone.cone.incl)
    }
}

#[allow(non_snake_case)]
pub fn Cone_map(f: &ChainMap) -> Result<ConeMap> {
    cone_map(f)
}

pub fn cone_map(f: &ChainMap) -> Result<ConeMap> {
    let p = f.source().p();
    let x = cone_diagram(f)?;
    let sq = square();
    let j = PosetMap::from_names(x.shape().clone(), sq.clone(), |s| s.to_string())?;
    let hl = holkan_cx(&j, &x, p)?;
    let a = sq.index_of("(0,1)")?;
    let b = sq.index_of("(1,1)")?;
    let edge = hl.diagram.map(a, b).clone();
    let dc = diagram_cone(f)?;
    if hl.tots[b].chains != dc.tot.chains {
        return Err(Error::InvalidInput("totalization over V is not the full chain set".into()));
    }
    let small = &hl.tots[a];
    let pos = small.position(&[2]).expect("chain (0,1)");
    let mats = (0..small.layouts.len())
        .map(|deg| {
            let id = Matrix::identity(f.target().module(deg).ngens());
            let one = DirectSum::new(p, &[f.target().module(deg).clone()]);
            blocks_into(&small.layouts[deg], &one, &[(pos, 0, id)])
        })
        .collect();
    let unit = ChainMap::new(f.target().clone(), small.complex.clone(), mats_to_comps(f.target(), &small.complex, mats))?;
    Ok(ConeMap { edge, unit, diagram_cone: dc })
}

/// `f □ g`: the `0 < 1` edge of `holkan_{p_V}` of the square `f ⊗ g`.
#[derive(Clone, Debug)]
pub struct BoxProduct {
    pub map: ChainMap,
    pub square: CxDiagram,
}

pub fn derived_box(f: &ChainMap, g: &ChainMap) -> Result<BoxProduct> {
    if f.source().p() != g.source().p() {
        return Err(Error::PrimeMismatch(f.source().p(), g.source().p()));
    }
    let p = f.source().p();
    let i = interval();
    let df = Diagram::new(i.clone(), vec![f.source().clone(), f.target().clone()], vec![f.clone()])?;
    let dg = Diagram::new(i, vec![g.source().clone(), g.target().clone()], vec![g.clone()])?;
    let sq = diagram_tensor(&df, &dg)?.diagram;
    let pv = p_v();
    let sq = relabel(&sq, pv.source())?;
    let hl = holkan_cx(&pv, &sq, p)?;
    Ok(BoxProduct { map: hl.diagram.map(0, 1).clone(), square: sq })
}

/// The same diagram over an equal poset object.
fn relabel(x: &CxDiagram, shape: &Arc<FinPoset>) -> Result<CxDiagram> {
    if **x.shape() != **shape {
        return Err(Error::ShapeMismatch("square shapes differ".into()));
    }
    Diagram::new(shape.clone(), x.objects().to_vec(), x.edges().into_iter().cloned().collect())
}

/// `H(cone(f □ g))` against `H(cone f ⊗ cone g)`.
pub fn box_cone_check(f: &ChainMap, g: &ChainMap) -> Result<bool> {
    let bx = derived_box(f, g)?;
    let lhs = mapping_cone(&bx.map).complex.cohomology_table();
    let cf = mapping_cone(f).complex;
    let cg = mapping_cone(g).complex;
    let rhs = crate::complexes::tensor_cyclic(&cf, &cg)?.cohomology_table();
    Ok(lhs == rhs)
}

/// Cone inclusion of the equatorial embedding `X -> ΣX` against the
/// diagonal `ΣX -> ΣX ⊕ ΣX`.
///
/// The embedding is `hocolim_V` of `(X = X = X) -> (0 <- X -> 0)`. Its target
/// is identified with `ΣX` by `(x, a, b) -> (-1)^n a`, the cone with
/// `ΣX ⊕ ΣX` through the two end vertices, the `(0,1)` end with the opposite
/// orientation.
#[derive(Clone, Debug)]
pub struct EquatorialReport {
    pub identifications_are_quasi_isos: bool,
    pub equals_diagonal: bool,
}

impl EquatorialReport {
    pub fn passed(&self) -> bool {
        self.identifications_are_quasi_isos && self.equals_diagonal
    }
}

pub fn equatorial_check(x: &CyclicComplex) -> Result<EquatorialReport> {
    let p = x.p();
    let zero = CyclicComplex::zero(p);
    let id = ChainMap::identity(x);
    let to0 = ChainMap::zero(x, &zero);
    let z0 = v_diagram(x, x, x, &id, &id)?;
    let z1 = v_diagram(&zero, x, &zero, &to0, &to0)?;
    let phi = DiagramMap::new(z0.clone(), z1.clone(), vec![ChainMap::zero(x, &zero), id.clone(), ChainMap::zero(x, &zero)])?;
    let t0 = hocolim_cx(&z0, p);
    let t1 = hocolim_cx(&z1, p);
    let e = tot_map(&phi, &t0, &t1);
    let cone = mapping_cone(&e);
    let sx = x.shift(1);
    let n = t1.layouts.len();

    // π : Tot(Z_1) -> ΣX
    let a = t1.position(&[1, 0]).expect("chain (0,0) < (1,0)");
    let one = |deg: usize| DirectSum::new(p, &[sx.module(deg).clone()]);
    let pi_mats = (0..n)
        .map(|deg| {
            let m = Matrix::identity(x.module(deg + 1).ngens()).scale(&sign(deg));
            blocks_into(&one(deg), &t1.layouts[deg], &[(0, a, m)])
        })
        .collect();
    let pi = ChainMap::new(t1.complex.clone(), sx.clone(), mats_to_comps(&t1.complex, &sx, pi_mats))?;

    // ι : ΣX ⊕ ΣX -> cone, through the end vertices of Tot(Z_0)
    let pair = ComplexSum::new(p, &[sx.clone(), sx.clone()]);
    let ends = [t0.position(&[0]).expect("chain (1,0)"), t0.position(&[2]).expect("chain (0,1)")];
    let iota_mats = (0..n)
        .map(|deg| {
            let m0 = Matrix::identity(x.module(deg + 1).ngens());
            let m1 = m0.neg();
            // t0 part in cone degree deg is Tot(Z_0)^{deg+1}
            let inner = blocks_into(&t0.layouts[(deg + 1) % n], &pair.layouts[deg], &[(ends[0], 0, m0), (ends[1], 1, m1)]);
            let mut full = Matrix::zeros(cone.layouts[deg].module.ngens(), pair.layouts[deg].module.ngens());
            for (r, &slot) in cone.layouts[deg].pos[0].iter().enumerate() {
                for c in 0..inner.cols() {
                    full.set(slot, c, inner.get(r, c).clone());
                }
            }
            full
        })
        .collect();
    let iota = ChainMap::new(pair.complex.clone(), cone.complex.clone(), mats_to_comps(&pair.complex, &cone.complex, iota_mats))?;

    let isos = pi.is_quasi_iso() && iota.is_quasi_iso();
    // incl = ι ∘ diag ∘ π on cohomology
    let diag = pair.injection(0).add(&pair.injection(1))?;
    let rhs = iota.compose_unchecked(&diag).compose_unchecked(&pi);
    let equal = (0..n).all(|k| cone.incl.on_cohomology(k) == rhs.on_cohomology(k));
    Ok(EquatorialReport { identifications_are_quasi_isos: isos, equals_diagonal: equal })
}
