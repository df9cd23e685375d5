use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use super::object::{Object, TensorObject};
use crate::error::{Error, Result};
use crate::posets::{FinPoset, PosetMap};

/// A functor from a finite poset into `O`, given on Hasse edges.
///
/// All composites `X(a <= b)` are computed once at construction, which is
/// also where functoriality is checked.
#[derive(Clone)]
pub struct Diagram<O: Object> {
    shape: Arc<FinPoset>,
    objects: Vec<O>,
    maps: HashMap<(usize, usize), O::Map>,
}

pub type ModDiagram = Diagram<crate::palgebra::FpModule>;
pub type CxDiagram = Diagram<crate::complexes::CyclicComplex>;

impl<O: Object> Diagram<O> {
    /// `edges[i]` is the map on `shape.hasse()[i]`.
    pub fn new(shape: Arc<FinPoset>, objects: Vec<O>, edges: Vec<O::Map>) -> Result<Self> {
        if objects.len() != shape.len() || edges.len() != shape.hasse().len() {
            return Err(Error::ShapeMismatch(format!(
                "{} objects and {} edges for a poset with {} elements and {} edges",
                objects.len(),
                edges.len(),
                shape.len(),
                shape.hasse().len()
            )));
        }
        for (i, &(a, b)) in shape.hasse().iter().enumerate() {
            if O::source(&edges[i]) != &objects[a] || O::target(&edges[i]) != &objects[b] {
                return Err(Error::ShapeMismatch(format!(
                    "edge {} -> {} has the wrong source or target",
                    shape.name(a),
                    shape.name(b)
                )));
            }
        }
        let edge_map: HashMap<(usize, usize), O::Map> = shape.hasse().iter().copied().zip(edges).collect();
        Self::build(shape, objects, &edge_map)
    }

    /// Build from a function on Hasse edges.
    pub fn from_fn(shape: Arc<FinPoset>, objects: Vec<O>, edge: impl Fn(usize, usize) -> O::Map) -> Result<Self> {
        let edges = shape.hasse().iter().map(|&(a, b)| edge(a, b)).collect();
        Self::new(shape, objects, edges)
    }

    fn build(shape: Arc<FinPoset>, objects: Vec<O>, edges: &HashMap<(usize, usize), O::Map>) -> Result<Self> {
        let mut maps = HashMap::new();
        let topo = shape.topological_order().to_vec();
        for &x in &topo {
            maps.insert((x, x), objects[x].identity());
            for &y in &topo {
                if !shape.lt(x, y) {
                    continue;
                }
                let mut found: Option<O::Map> = None;
                for &c in shape.covers_down(y) {
                    if !shape.leq(x, c) {
                        continue;
                    }
                    let comp = O::compose(&edges[&(c, y)], &maps[&(x, c)]);
                    match &found {
                        None => found = Some(comp),
                        Some(f) if *f == comp => {}
                        Some(_) => {
                            return Err(Error::NotFunctorial(format!(
                                "paths from {} to {} disagree",
                                shape.name(x),
                                shape.name(y)
                            )))
                        }
                    }
                }
                maps.insert((x, y), found.expect("a lower cover above x exists"));
            }
        }
        Ok(Diagram { shape, objects, maps })
    }

    /// The diagram with every vertex `obj` and identity edges.
    pub fn constant(shape: Arc<FinPoset>, obj: &O) -> Self {
        let objects = vec![obj.clone(); shape.len()];
        Self::from_fn(shape, objects, |_, _| obj.identity()).expect("constant diagrams are functorial")
    }

    pub fn zero(shape: Arc<FinPoset>, like: &O) -> Self {
        Self::constant(shape, &like.zero_like())
    }

    pub fn shape(&self) -> &Arc<FinPoset> {
        &self.shape
    }

    pub fn p(&self) -> Option<u64> {
        self.objects.first().map(|o| o.p())
    }

    pub fn object(&self, c: usize) -> &O {
        &self.objects[c]
    }

    pub fn objects(&self) -> &[O] {
        &self.objects
    }

    pub fn object_named(&self, name: &str) -> Result<&O> {
        Ok(&self.objects[self.shape.index_of(name)?])
    }

    /// `X(a <= b)`.
    pub fn map(&self, a: usize, b: usize) -> &O::Map {
        self.maps.get(&(a, b)).unwrap_or_else(|| panic!("{} is not <= {}", self.shape.name(a), self.shape.name(b)))
    }

    pub fn edges(&self) -> Vec<&O::Map> {
        self.shape.hasse().iter().map(|&(a, b)| self.map(a, b)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.objects.iter().all(|o| o.is_zero_object())
    }

    /// `f^* X` with `(f^* X)_c = X_{f(c)}`.
    pub fn pullback(&self, f: &PosetMap) -> Result<Self> {
        if **f.target() != *self.shape {
            return Err(Error::ShapeMismatch("pullback along a map into a different poset".into()));
        }
        let objects = (0..f.source().len()).map(|c| self.objects[f.apply(c)].clone()).collect();
        let src = f.source().clone();
        let maps = f
            .source()
            .hasse()
            .iter()
            .map(|&(a, b)| self.map(f.apply(a), f.apply(b)).clone())
            .collect();
        Self::new(src, objects, maps)
    }

    /// Restriction to the induced subposet on `elems`.
    pub fn restrict(&self, elems: &[usize]) -> Self {
        self.pullback(&PosetMap::inclusion(&self.shape, elems)).expect("restriction is a pullback")
    }

    /// Apply a functor vertexwise and edgewise.
    pub fn map_objects<P: Object>(&self, obj: impl Fn(&O) -> P, mor: impl Fn(&O::Map, &P, &P) -> P::Map) -> Result<Diagram<P>> {
        let objects: Vec<P> = self.objects.iter().map(&obj).collect();
        let edges = self
            .shape
            .hasse()
            .iter()
            .map(|&(a, b)| mor(self.map(a, b), &objects[a], &objects[b]))
            .collect();
        Diagram::new(self.shape.clone(), objects, edges)
    }
}

impl<O: Object> PartialEq for Diagram<O> {
    fn eq(&self, other: &Self) -> bool {
        *self.shape == *other.shape && self.objects == other.objects && self.edges() == other.edges()
    }
}

impl<O: Object> fmt::Debug for Diagram<O> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Diagram over {:?}", self.shape)?;
        for (i, o) in self.objects.iter().enumerate() {
            writeln!(f, "  {}: {:?}", self.shape.name(i), o)?;
        }
        Ok(())
    }
}

/// A natural transformation between diagrams of the same shape.
#[derive(Clone, Debug)]
pub struct DiagramMap<O: Object> {
    pub source: Diagram<O>,
    pub target: Diagram<O>,
    pub comps: Vec<O::Map>,
}

impl<O: Object> DiagramMap<O> {
    pub fn new(source: Diagram<O>, target: Diagram<O>, comps: Vec<O::Map>) -> Result<Self> {
        if *source.shape != *target.shape || comps.len() != source.shape.len() {
            return Err(Error::ShapeMismatch("diagram map between different shapes".into()));
        }
        for (c, f) in comps.iter().enumerate() {
            if O::source(f) != source.object(c) || O::target(f) != target.object(c) {
                return Err(Error::ShapeMismatch(format!("component at {} has the wrong type", source.shape.name(c))));
            }
        }
        for &(a, b) in source.shape.hasse() {
            let l = O::compose(target.map(a, b), &comps[a]);
            let r = O::compose(&comps[b], source.map(a, b));
            if l != r {
                return Err(Error::NotFunctorial(format!(
                    "square at {} -> {} does not commute",
                    source.shape.name(a),
                    source.shape.name(b)
                )));
            }
        }
        Ok(DiagramMap { source, target, comps })
    }

    pub fn identity(x: &Diagram<O>) -> Self {
        let comps = x.objects.iter().map(|o| o.identity()).collect();
        DiagramMap { source: x.clone(), target: x.clone(), comps }
    }

    pub fn compose(&self, first: &DiagramMap<O>) -> DiagramMap<O> {
        let comps = self.comps.iter().zip(&first.comps).map(|(g, f)| O::compose(g, f)).collect();
        DiagramMap { source: first.source.clone(), target: self.target.clone(), comps }
    }

    pub fn is_mono(&self) -> bool {
        self.comps.iter().all(O::is_mono)
    }

    pub fn is_epi(&self) -> bool {
        self.comps.iter().all(O::is_epi)
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(O::map_is_zero)
    }

    /// Vertexwise cokernel with induced edges.
    pub fn cokernel(&self) -> Result<(Diagram<O>, DiagramMap<O>)> {
        let parts: Vec<(O, O::Map)> = self.comps.iter().map(O::cokernel).collect();
        let objects: Vec<O> = parts.iter().map(|(o, _)| o.clone()).collect();
        let shape = self.source.shape.clone();
        let edges = shape
            .hasse()
            .iter()
            .map(|&(a, b)| O::descend(&parts[a].1, &O::compose(&parts[b].1, self.target.map(a, b))))
            .collect::<Result<Vec<_>>>()?;
        let q = Diagram::new(shape, objects, edges)?;
        let epi = DiagramMap { source: self.target.clone(), target: q.clone(), comps: parts.into_iter().map(|(_, e)| e).collect() };
        Ok((q, epi))
    }

    /// Vertexwise kernel with restricted edges.
    pub fn kernel(&self) -> Result<(Diagram<O>, DiagramMap<O>)> {
        let parts: Vec<(O, O::Map)> = self.comps.iter().map(O::kernel).collect();
        let objects: Vec<O> = parts.iter().map(|(o, _)| o.clone()).collect();
        let shape = self.source.shape.clone();
        let edges = shape
            .hasse()
            .iter()
            .map(|&(a, b)| O::lift(&parts[b].1, &O::compose(self.source.map(a, b), &parts[a].1)))
            .collect::<Result<Vec<_>>>()?;
        let k = Diagram::new(shape, objects, edges)?;
        let mono = DiagramMap { source: k.clone(), target: self.source.clone(), comps: parts.into_iter().map(|(_, m)| m).collect() };
        Ok((k, mono))
    }
}

/// `X ⊗ U` over `C × D` with `(X ⊗ U)_{(a,b)} = X_a ⊗ U_b`.
#[derive(Clone, Debug)]
pub struct TensorDiagram<O: TensorObject> {
    pub diagram: Diagram<O>,
    pub layouts: Vec<O::Layout>,
}

pub fn diagram_tensor<O: TensorObject>(x: &Diagram<O>, u: &Diagram<O>) -> Result<TensorDiagram<O>> {
    let shape = Arc::new(x.shape.product(&u.shape));
    let m = u.shape.len();
    let layouts: Vec<O::Layout> = (0..shape.len())
        .map(|i| O::tensor(x.object(i / m), u.object(i % m)))
        .collect::<Result<_>>()?;
    let objects: Vec<O> = layouts.iter().map(|l| O::layout_object(l).clone()).collect();
    let edges = shape
        .hasse()
        .iter()
        .map(|&(i, j)| {
            let f = x.map(i / m, j / m);
            let g = u.map(i % m, j % m);
            O::tensor_maps(&layouts[i], &layouts[j], f, g)
        })
        .collect();
    let diagram = Diagram::new(shape, objects, edges)?;
    Ok(TensorDiagram { diagram, layouts })
}
