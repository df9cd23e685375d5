use std::fmt;
use std::sync::Arc;

use super::poset::FinPoset;
use crate::error::{Error, Result};

/// A monotone map of finite posets.
#[derive(Clone)]
pub struct PosetMap {
    source: Arc<FinPoset>,
    target: Arc<FinPoset>,
    map: Vec<usize>,
}

/// The slice `C -> d = {c | f(c) <= d}` with its inclusion into `C`.
#[derive(Clone, Debug)]
pub struct Slice {
    pub poset: Arc<FinPoset>,
    pub elements: Vec<usize>,
    pub inclusion: PosetMap,
}

impl PosetMap {
    pub fn new(source: Arc<FinPoset>, target: Arc<FinPoset>, map: Vec<usize>) -> Result<PosetMap> {
        if map.len() != source.len() {
            return Err(Error::ShapeMismatch(format!("{} images for {} elements", map.len(), source.len())));
        }
        if let Some(&bad) = map.iter().find(|&&v| v >= target.len()) {
            return Err(Error::ElementNotFound(format!("target index {bad}")));
        }
        for &(a, b) in source.hasse() {
            if !target.leq(map[a], map[b]) {
                return Err(Error::NotMonotone(format!(
                    "{} <= {} but {} is not <= {}",
                    source.name(a),
                    source.name(b),
                    target.name(map[a]),
                    target.name(map[b])
                )));
            }
        }
        Ok(PosetMap { source, target, map })
    }

    /// Build from name pairs; every source element must be assigned.
    pub fn from_names(source: Arc<FinPoset>, target: Arc<FinPoset>, assign: impl Fn(&str) -> String) -> Result<PosetMap> {
        let map = source.names().iter().map(|s| target.index_of(&assign(s))).collect::<Result<Vec<_>>>()?;
        Self::new(source, target, map)
    }

    pub fn identity(p: &Arc<FinPoset>) -> PosetMap {
        PosetMap { source: p.clone(), target: p.clone(), map: (0..p.len()).collect() }
    }

    pub fn constant(source: &Arc<FinPoset>, target: &Arc<FinPoset>, d: usize) -> PosetMap {
        PosetMap { source: source.clone(), target: target.clone(), map: vec![d; source.len()] }
    }

    /// Inclusion of the induced subposet on `elems`.
    pub fn inclusion(big: &Arc<FinPoset>, elems: &[usize]) -> PosetMap {
        let sub = Arc::new(big.subposet(elems));
        PosetMap { source: sub, target: big.clone(), map: elems.to_vec() }
    }

    pub fn source(&self) -> &Arc<FinPoset> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FinPoset> {
        &self.target
    }

    pub fn apply(&self, c: usize) -> usize {
        self.map[c]
    }

    pub fn images(&self) -> &[usize] {
        &self.map
    }

    pub fn is_monotone(&self) -> bool {
        self.source.hasse().iter().all(|&(a, b)| self.target.leq(self.map[a], self.map[b]))
    }

    /// `self ∘ first`
    pub fn compose(&self, first: &PosetMap) -> Result<PosetMap> {
        if *first.target != *self.source {
            return Err(Error::CompositionError("poset maps are not composable".into()));
        }
        let map = first.map.iter().map(|&c| self.map[c]).collect();
        Ok(PosetMap { source: first.source.clone(), target: self.target.clone(), map })
    }

    /// Elements of the slice `C -> d`, in source order.
    pub fn slice_elements(&self, d: usize) -> Vec<usize> {
        (0..self.source.len()).filter(|&c| self.target.leq(self.map[c], d)).collect()
    }

    pub fn slice_to(&self, d: usize) -> Result<Slice> {
        if d >= self.target.len() {
            return Err(Error::ElementNotFound(format!("index {d}")));
        }
        let elements = self.slice_elements(d);
        let inclusion = PosetMap::inclusion(&self.source, &elements);
        Ok(Slice { poset: inclusion.source.clone(), elements, inclusion })
    }

    pub fn slice_to_name(&self, d: &str) -> Result<Slice> {
        self.slice_to(self.target.index_of(d)?)
    }

    /// Every fibre `{c | d <= f(c)}` is nonempty and connected.
    pub fn is_cofinal(&self) -> bool {
        (0..self.target.len()).all(|d| {
            let up: Vec<usize> = (0..self.source.len()).filter(|&c| self.target.leq(d, self.map[c])).collect();
            self.source.is_connected_on(&up)
        })
    }
}

impl PartialEq for PosetMap {
    fn eq(&self, other: &Self) -> bool {
        self.map == other.map && *self.source == *other.source && *self.target == *other.target
    }
}

impl fmt::Debug for PosetMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<String> = self
            .map
            .iter()
            .enumerate()
            .map(|(c, &d)| format!("{}->{}", self.source.name(c), self.target.name(d)))
            .collect();
        write!(f, "PosetMap[{}]", pairs.join(", "))
    }
}

pub fn is_cofinal(f: &PosetMap) -> bool {
    f.is_cofinal()
}
