use super::diagram::{Diagram, DiagramMap};
use super::object::Object;
use crate::error::Result;
use crate::posets::PosetMap;

/// A strict colimit with its cocone.
#[derive(Clone, Debug)]
pub struct Colimit<O: Object> {
    pub object: O,
    pub cocone: Vec<O::Map>,
    /// `⊕_c X_c -> colim`
    pub epi: O::Map,
    pub sum: O::Sum,
}

impl<O: Object> Colimit<O> {
    /// The map `colim -> T` induced by a compatible family `X_c -> T`.
    pub fn induced(&self, maps: &[O::Map]) -> Result<O::Map> {
        let blocks: Vec<_> = maps.iter().enumerate().map(|(c, f)| (0usize, c, f)).collect();
        let tgt = O::target(&maps[0]).clone();
        let tsum = O::sum(tgt.p(), &[tgt]);
        let total = O::assemble(&tsum, &self.sum, &blocks);
        let g = O::compose(&O::projection(&tsum, 0), &total);
        O::descend(&self.epi, &g)
    }
}

/// `colim X = coker(⊕_{a<b Hasse} X_a -> ⊕_c X_c)` via `ι_a - ι_b X(a<b)`.
pub fn strict_colim<O: Object>(x: &Diagram<O>, like: &O) -> Colimit<O> {
    let shape = x.shape();
    let p = like.p();
    let vsum = O::sum(p, x.objects());
    let hasse = shape.hasse();
    let esum = O::sum(p, &hasse.iter().map(|&(a, _)| x.object(a).clone()).collect::<Vec<_>>());
    let negs: Vec<O::Map> = hasse.iter().map(|&(a, b)| O::neg(x.map(a, b))).collect();
    let ids: Vec<O::Map> = hasse.iter().map(|&(a, _)| x.object(a).identity()).collect();
    let mut blocks = Vec::with_capacity(2 * hasse.len());
    for (e, &(a, b)) in hasse.iter().enumerate() {
        blocks.push((a, e, &ids[e]));
        blocks.push((b, e, &negs[e]));
    }
    let rel = O::assemble(&vsum, &esum, &blocks);
    let (object, epi) = O::cokernel(&rel);
    let cocone = (0..shape.len()).map(|c| O::compose(&epi, &O::injection(&vsum, c))).collect();
    Colimit { object, cocone, epi, sum: vsum }
}

/// Strict left Kan extension with the colimit data of each slice.
#[derive(Clone, Debug)]
pub struct Lkan<O: Object> {
    pub diagram: Diagram<O>,
    /// `slices[d]`: elements of `C -> d` in source order
    pub slices: Vec<Vec<usize>>,
    pub colims: Vec<Colimit<O>>,
}

impl<O: Object> Lkan<O> {
    /// Cocone component `X_c -> (LKan X)_d` for `f(c) <= d`.
    pub fn cocone(&self, d: usize, c: usize) -> &O::Map {
        let pos = self.slices[d].iter().position(|&e| e == c).expect("c lies in the slice");
        &self.colims[d].cocone[pos]
    }

    /// Unit `X -> f^* LKan_f X`.
    pub fn unit(&self, x: &Diagram<O>, f: &PosetMap) -> Result<DiagramMap<O>> {
        let pulled = self.diagram.pullback(f)?;
        let comps = (0..x.shape().len()).map(|c| self.cocone(f.apply(c), c).clone()).collect();
        DiagramMap::new(x.clone(), pulled, comps)
    }
}

pub fn strict_lkan<O: Object>(f: &PosetMap, x: &Diagram<O>, like: &O) -> Result<Lkan<O>> {
    let target = f.target().clone();
    let slices: Vec<Vec<usize>> = (0..target.len()).map(|d| f.slice_elements(d)).collect();
    let colims: Vec<Colimit<O>> = slices.iter().map(|s| strict_colim(&x.restrict(s), like)).collect();
    let objects = colims.iter().map(|c| c.object.clone()).collect();
    let mut edges = Vec::with_capacity(target.hasse().len());
    for &(d, d2) in target.hasse() {
        let maps: Vec<O::Map> = slices[d]
            .iter()
            .map(|&c| {
                let pos = slices[d2].iter().position(|&e| e == c).unwrap();
                colims[d2].cocone[pos].clone()
            })
            .collect();
        edges.push(if maps.is_empty() { O::zero_map(&colims[d].object, &colims[d2].object) } else { colims[d].induced(&maps)? });
    }
    let diagram = Diagram::new(target, objects, edges)?;
    Ok(Lkan { diagram, slices, colims })
}

/// The latching map `colim_{c' < c} X_{c'} -> X_c`.
pub fn latching_map<O: Object>(x: &Diagram<O>, c: usize, like: &O) -> Result<O::Map> {
    let below = x.shape().strict_down_set(c);
    if below.is_empty() {
        return Ok(O::zero_map(&like.zero_like(), x.object(c)));
    }
    let colim = strict_colim(&x.restrict(&below), like);
    let maps: Vec<O::Map> = below.iter().map(|&b| x.map(b, c).clone()).collect();
    colim.induced(&maps)
}

/// Every latching map is a monomorphism (degreewise for complexes).
pub fn is_reedy_cofibrant<O: Object>(x: &Diagram<O>, like: &O) -> Result<bool> {
    for c in 0..x.shape().len() {
        if !O::is_mono(&latching_map(x, c, like)?) {
            return Ok(false);
        }
    }
    Ok(true)
}
