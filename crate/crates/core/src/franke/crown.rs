//! Crown diagrams, the membership test for `L`, and the functor `Q`.

use std::sync::Arc;

use crate::complexes::{crown_data, mapping_cone, ChainMap, Cohomology, Cone, CyclicComplex};
use crate::diagrams::{is_reedy_cofibrant, strict_colim, CxDiagram, Diagram};
use crate::error::{Error, Result};
use crate::palgebra::{DirectSum, FpModule, Matrix, ModuleMap, PScalar};
use crate::posets::{crown, FinPoset};

fn sign(k: usize) -> PScalar {
    if k.is_multiple_of(2) {
        PScalar::one()
    } else {
        PScalar::from_int(-1)
    }
}

/// Chain map that is `f` in degree `deg` and zero elsewhere.
pub(crate) fn single_degree_map(src: &CyclicComplex, tgt: &CyclicComplex, deg: usize, f: &ModuleMap) -> ChainMap {
    let n = src.period();
    let comps = (0..n)
        .map(|k| if k == deg % n { f.clone() } else { ModuleMap::zero(src.module(k), tgt.module(k)) })
        .collect();
    ChainMap::new(src.clone(), tgt.clone(), comps).expect("single-degree map commutes")
}

/// A diagram over the crown `C_N` meant to lie in `L`.
#[derive(Clone, Debug)]
pub struct LObject {
    pub diagram: CxDiagram,
    pub period: usize,
}

/// Outcome of the membership test.
#[derive(Clone, Debug, Default, serde::Serialize)]
pub struct LReport {
    /// `(vertex, degree)` with unexpected cohomology
    pub stray_cohomology: Vec<(String, usize)>,
    /// `n` where `H^n(beta_n -> zeta_n)` is not injective
    pub non_injective: Vec<usize>,
}

impl LReport {
    pub fn passed(&self) -> bool {
        self.stray_cohomology.is_empty() && self.non_injective.is_empty()
    }
}

impl LObject {
    pub fn new(diagram: CxDiagram) -> Result<LObject> {
        let period = diagram.shape().len() / 2;
        let expected = crown(period);
        if **diagram.shape() != *expected || period == 0 {
            return Err(Error::ShapeMismatch("an L-object lives over the crown C_N".into()));
        }
        if let Some(c) = diagram.objects().first() {
            if c.period() != period {
                return Err(Error::ShapeMismatch(format!("crown C_{period} for complexes of period {}", c.period())));
            }
        }
        Ok(LObject { diagram, period })
    }

    pub fn beta(&self, n: usize) -> usize {
        n % self.period
    }

    pub fn zeta(&self, n: usize) -> usize {
        self.period + n % self.period
    }

    pub fn check(&self) -> LReport {
        let n = self.period;
        let mut rep = LReport::default();
        for k in 0..n {
            for v in [self.beta(k), self.zeta(k)] {
                let c = self.diagram.object(v);
                for m in 0..n {
                    if m != k && !c.cohomology(m).is_zero() {
                        rep.stray_cohomology.push((self.diagram.shape().name(v).to_string(), m));
                    }
                }
            }
            if !self.diagram.map(self.beta(k), self.zeta(k)).on_cohomology(k).is_mono() {
                rep.non_injective.push(k);
            }
        }
        rep
    }

    pub fn validate(&self) -> Result<()> {
        let rep = self.check();
        if rep.passed() {
            Ok(())
        } else {
            Err(Error::NotInL(format!("{rep:?}")))
        }
    }
}

/// `beta_n = B^n` in degree `n`, `zeta_n = (C^n ->> B^{n+1})` in degrees
/// `n, n+1`, vertical edges `B^n -> C^n`, diagonal edges the identity of
/// `B^{n+1}`.
pub fn crown_decompose(c: &CyclicComplex) -> LObject {
    let n = c.period();
    let data = crown_data(c);
    let betas: Vec<CyclicComplex> = (0..n).map(|k| CyclicComplex::concentrated(&data[k].coboundaries, k as i64)).collect();
    let zetas: Vec<CyclicComplex> =
        (0..n).map(|k| CyclicComplex::two_term(&data[(k + 1) % n].coboundary_epi, k as i64)).collect();
    let mut objects = betas.clone();
    objects.extend(zetas.iter().cloned());
    let shape: Arc<FinPoset> = crown(n);
    let diagram = Diagram::from_fn(shape, objects, |a, b| {
        let z = b - n;
        if a == z {
            single_degree_map(&betas[a], &zetas[z], a, &data[a].coboundary_mono)
        } else {
            single_degree_map(&betas[a], &zetas[z], a, &ModuleMap::identity(&data[a].coboundaries))
        }
    })
    .expect("the crown of a complex is a diagram");
    LObject { diagram, period: n }
}

/// The complex glued from a crown.
///
/// For a Reedy cofibrant crown the strict colimit is used; when the cocone
/// from each `zeta_n` is an isomorphism in degree `n`, the result is
/// transported to the `zeta_n` bases, so a decomposed complex comes back
/// on the nose. Otherwise the totalization is returned.
pub fn crown_assemble(a: &LObject) -> Result<CyclicComplex> {
    let p = a.diagram.object(0).p();
    let n = a.period;
    let zero = CyclicComplex::zero(p);
    if !is_reedy_cofibrant(&a.diagram, &zero)? {
        return Ok(crate::derived::hocolim_cx(&a.diagram, p).complex);
    }
    let colim = strict_colim(&a.diagram, &zero);
    let legs: Vec<&ModuleMap> = (0..n).map(|k| colim.cocone[a.zeta(k)].comp(k)).collect();
    if !legs.iter().all(|l| l.is_iso()) {
        return Ok(colim.object);
    }
    let invs: Vec<ModuleMap> = legs.iter().map(|l| l.inverse()).collect::<Result<_>>()?;
    let modules: Vec<FpModule> = (0..n).map(|k| a.diagram.object(a.zeta(k)).module(k).clone()).collect();
    let diffs = (0..n)
        .map(|k| invs[(k + 1) % n].compose_unchecked(&colim.object.diff(k).compose_unchecked(legs[k])))
        .collect();
    CyclicComplex::new(p, modules, diffs)
}

/// `Q(A)` with the data used to build it.
#[derive(Clone, Debug)]
pub struct QResult {
    pub complex: CyclicComplex,
    /// `cones[n] = cone(A_{beta_{n+1}} -> A_{zeta_n})`
    pub cones: Vec<Cone>,
    /// `H^n(cones[n])`
    pub classes: Vec<Cohomology>,
}

/// `Q^n = H^n(cone(A_{beta_{n+1}} -> A_{zeta_n}))` with `d^n` the composite
/// of the cone projection, the vertical edge into `zeta_{n+1}` and the cone
/// inclusion, all on cohomology.
#[allow(non_snake_case)]
pub fn Q(a: &LObject) -> Result<QResult> {
    a.validate()?;
    q_unvalidated(a)
}

/// The same construction without the membership test.
pub fn q_unvalidated(a: &LObject) -> Result<QResult> {
    let n = a.period;
    let p = a.diagram.object(0).p();
    let cones: Vec<Cone> = (0..n).map(|k| mapping_cone(a.diagram.map(a.beta(k + 1), a.zeta(k)))).collect();
    let classes: Vec<Cohomology> = (0..n).map(|k| cones[k].complex.cohomology_data(k)).collect();
    let diffs = (0..n)
        .map(|k| {
            let k1 = (k + 1) % n;
            let proj = cones[k].proj.comp(k).matrix();
            let edge = a.diagram.map(a.beta(k1), a.zeta(k1)).comp(k1).matrix();
            let incl = cones[k1].incl.comp(k1).matrix();
            let g = incl.mul(&edge.mul(proj));
            let m = classes[k1].class(&g.mul(&classes[k].reps));
            Ok(ModuleMap::from_lift(classes[k].module.clone(), classes[k1].module.clone(), m))
        })
        .collect::<Result<Vec<_>>>()?;
    let complex = CyclicComplex::new(p, classes.iter().map(|c| c.module.clone()).collect(), diffs)?;
    Ok(QResult { complex, cones, classes })
}

/// `Q(crown_decompose(C))` against `C` through `φ^n(c) = (-1)^n [(-dc, c)]`.
#[derive(Clone, Debug, serde::Serialize)]
pub struct RoundTrip {
    pub objects_equal: bool,
    pub phi_iso: bool,
    pub differentials_equal: bool,
    pub assemble_exact: bool,
}

impl RoundTrip {
    pub fn exact(&self) -> bool {
        self.objects_equal && self.phi_iso && self.differentials_equal && self.assemble_exact
    }
}

pub fn roundtrip(c: &CyclicComplex) -> Result<RoundTrip> {
    let n = c.period();
    let a = crown_decompose(c);
    let q = Q(&a)?;
    let data = crown_data(c);
    let objects_equal = (0..n).all(|k| q.complex.module(k) == c.module(k));
    let phis: Vec<ModuleMap> = (0..n)
        .map(|k| {
            let layout: &DirectSum = &q.cones[k].layouts[k];
            let epi = data[(k + 1) % n].coboundary_epi.matrix().neg();
            let id = Matrix::identity(c.module(k).ngens());
            let src = DirectSum::new(c.p(), &[c.module(k).clone()]);
            let v = DirectSum::block_matrix(layout, &src, &[(0, 0, &epi), (1, 0, &id)]).scale(&sign(k));
            ModuleMap::from_lift(c.module(k).clone(), q.complex.module(k).clone(), q.classes[k].class(&v))
        })
        .collect();
    let phi_iso = objects_equal && phis.iter().all(|f| f.is_iso());
    let differentials_equal = (0..n).all(|k| {
        let l = phis[(k + 1) % n].compose_unchecked(c.diff(k));
        let r = q.complex.diff(k).compose_unchecked(&phis[k]);
        l == r
    });
    let assemble_exact = crown_assemble(&a)? == *c;
    Ok(RoundTrip { objects_equal, phi_iso, differentials_equal, assemble_exact })
}
