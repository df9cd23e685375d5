use std::fmt;

use super::complex::CyclicComplex;
use crate::error::{Error, Result};
use crate::palgebra::{Matrix, ModuleMap, PScalar};

/// A cochain map between cyclic complexes.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ChainMap {
    source: CyclicComplex,
    target: CyclicComplex,
    comps: Vec<ModuleMap>,
}

impl ChainMap {
    pub fn new(source: CyclicComplex, target: CyclicComplex, comps: Vec<ModuleMap>) -> Result<Self> {
        if source.p() != target.p() {
            return Err(Error::PrimeMismatch(source.p(), target.p()));
        }
        let n = source.period();
        if comps.len() != n {
            return Err(Error::ShapeMismatch(format!("{} components for period {n}", comps.len())));
        }
        for (k, f) in comps.iter().enumerate() {
            if f.source() != source.module(k) || f.target() != target.module(k) {
                return Err(Error::ShapeMismatch(format!("component {k} has the wrong source or target")));
            }
        }
        let f = ChainMap { source, target, comps };
        if let Some(k) = f.commutation_failure() {
            return Err(Error::InvalidInput(format!("not a chain map: square {k} does not commute")));
        }
        Ok(f)
    }

    pub(crate) fn from_parts_unchecked(source: CyclicComplex, target: CyclicComplex, comps: Vec<ModuleMap>) -> Self {
        let f = ChainMap { source, target, comps };
        debug_assert!(f.commutation_failure().is_none(), "chain map squares do not commute: {f:?}");
        f
    }

    /// Build from lifted component matrices.
    pub(crate) fn from_matrices(source: &CyclicComplex, target: &CyclicComplex, mats: Vec<Matrix>) -> Self {
        let comps = mats
            .into_iter()
            .enumerate()
            .map(|(k, m)| ModuleMap::from_lift(source.module(k).clone(), target.module(k).clone(), m))
            .collect();
        Self::from_parts_unchecked(source.clone(), target.clone(), comps)
    }

    fn commutation_failure(&self) -> Option<usize> {
        (0..self.source.period()).find(|&k| {
            let a = self.target.diff(k).compose_unchecked(&self.comps[k]);
            let b = self.comps[(k + 1) % self.comps.len()].compose_unchecked(self.source.diff(k));
            a != b
        })
    }

    pub fn identity(c: &CyclicComplex) -> Self {
        let comps = c.modules().iter().map(ModuleMap::identity).collect();
        ChainMap { source: c.clone(), target: c.clone(), comps }
    }

    pub fn zero(source: &CyclicComplex, target: &CyclicComplex) -> Self {
        let comps = (0..source.period()).map(|k| ModuleMap::zero(source.module(k), target.module(k))).collect();
        ChainMap { source: source.clone(), target: target.clone(), comps }
    }

    pub fn source(&self) -> &CyclicComplex {
        &self.source
    }

    pub fn target(&self) -> &CyclicComplex {
        &self.target
    }

    pub fn comp(&self, n: usize) -> &ModuleMap {
        &self.comps[n % self.comps.len()]
    }

    pub fn comps(&self) -> &[ModuleMap] {
        &self.comps
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|f| f.is_zero())
    }

    /// `self ∘ first`
    pub fn compose(&self, first: &ChainMap) -> Result<ChainMap> {
        if first.target != self.source {
            return Err(Error::CompositionError("chain maps are not composable".into()));
        }
        Ok(self.compose_unchecked(first))
    }

    pub(crate) fn compose_unchecked(&self, first: &ChainMap) -> ChainMap {
        let comps = self.comps.iter().zip(&first.comps).map(|(g, f)| g.compose_unchecked(f)).collect();
        ChainMap { source: first.source.clone(), target: self.target.clone(), comps }
    }

    pub fn add(&self, other: &ChainMap) -> Result<ChainMap> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::CompositionError("chain maps are not parallel".into()));
        }
        let comps = self.comps.iter().zip(&other.comps).map(|(f, g)| f.add(g)).collect::<Result<_>>()?;
        Ok(ChainMap { source: self.source.clone(), target: self.target.clone(), comps })
    }

    pub fn neg(&self) -> ChainMap {
        self.scale(&PScalar::from_int(-1))
    }

    pub fn scale(&self, c: &PScalar) -> ChainMap {
        let comps = self.comps.iter().map(|f| f.scale(c)).collect();
        ChainMap { source: self.source.clone(), target: self.target.clone(), comps }
    }

    pub fn equal(&self, other: &ChainMap) -> bool {
        self == other
    }

    /// The induced map `H^n(f)`.
    pub fn on_cohomology(&self, n: usize) -> ModuleMap {
        let hx = self.source.cohomology_data(n);
        let hy = self.target.cohomology_data(n);
        let m = hy.coords.mul(self.comp(n).matrix()).mul(&hx.reps);
        ModuleMap::from_lift(hx.module, hy.module, m)
    }

    pub fn is_quasi_iso(&self) -> bool {
        (0..self.source.period()).all(|n| self.on_cohomology(n).is_iso())
    }

    pub fn is_iso(&self) -> bool {
        self.comps.iter().all(|f| f.is_iso())
    }

    /// Inverse of a degreewise isomorphism.
    pub fn inverse(&self) -> Result<ChainMap> {
        let comps = self.comps.iter().map(|f| f.inverse()).collect::<Result<_>>()?;
        Ok(ChainMap { source: self.target.clone(), target: self.source.clone(), comps })
    }

    /// `Σ^k f`
    pub fn shift(&self, k: i64) -> ChainMap {
        let n = self.comps.len();
        let comps = (0..n).map(|i| self.comps[self.source.idx(i as i64 + k)].clone()).collect();
        ChainMap { source: self.source.shift(k), target: self.target.shift(k), comps }
    }
}

impl fmt::Debug for ChainMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ChainMap")?;
        for (k, c) in self.comps.iter().enumerate() {
            writeln!(f, "  f^{k}: {c:?}")?;
        }
        Ok(())
    }
}
