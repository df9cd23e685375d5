//! The additive structure diagrams need from their vertex category.

use std::fmt::Debug;

use crate::complexes::{ChainMap, ComplexSum, CyclicComplex, TensorComplex};
use crate::error::Result;
use crate::palgebra::tensor::{tensor_maps_on, Tensor};
use crate::palgebra::{DirectSum, FpModule, Matrix, ModuleMap};

pub trait Object: Clone + PartialEq + Debug + Send + Sync {
    type Map: Clone + PartialEq + Debug + Send + Sync;
    type Sum: Clone + Debug + Send + Sync;

    fn p(&self) -> u64;
    fn zero_like(&self) -> Self;
    fn is_zero_object(&self) -> bool;

    fn identity(&self) -> Self::Map;
    fn zero_map(src: &Self, tgt: &Self) -> Self::Map;
    fn source(f: &Self::Map) -> &Self;
    fn target(f: &Self::Map) -> &Self;
    /// `g ∘ f`
    fn compose(g: &Self::Map, f: &Self::Map) -> Self::Map;
    fn add(f: &Self::Map, g: &Self::Map) -> Self::Map;
    fn neg(f: &Self::Map) -> Self::Map;
    fn map_is_zero(f: &Self::Map) -> bool;

    fn sum(p: u64, parts: &[Self]) -> Self::Sum;
    fn sum_object(s: &Self::Sum) -> &Self;
    fn injection(s: &Self::Sum, i: usize) -> Self::Map;
    fn projection(s: &Self::Sum, i: usize) -> Self::Map;
    /// Map between sums from blocks `(target part, source part, map)`.
    fn assemble(tgt: &Self::Sum, src: &Self::Sum, blocks: &[(usize, usize, &Self::Map)]) -> Self::Map;

    fn cokernel(f: &Self::Map) -> (Self, Self::Map);
    fn kernel(f: &Self::Map) -> (Self, Self::Map);
    fn is_mono(f: &Self::Map) -> bool;
    fn is_epi(f: &Self::Map) -> bool;
    /// `h` with `h ∘ epi = g`.
    fn descend(epi: &Self::Map, g: &Self::Map) -> Result<Self::Map>;
    /// `h` with `mono ∘ h = g`.
    fn lift(mono: &Self::Map, g: &Self::Map) -> Result<Self::Map>;
}

/// Objects with a tensor product.
pub trait TensorObject: Object {
    type Layout: Clone + Debug + Send + Sync;
    fn tensor(a: &Self, b: &Self) -> Result<Self::Layout>;
    fn layout_object(l: &Self::Layout) -> &Self;
    fn tensor_maps(src: &Self::Layout, tgt: &Self::Layout, f: &Self::Map, g: &Self::Map) -> Self::Map;
}

impl Object for FpModule {
    type Map = ModuleMap;
    type Sum = DirectSum;

    fn p(&self) -> u64 {
        FpModule::p(self)
    }

    fn zero_like(&self) -> Self {
        FpModule::zero(FpModule::p(self))
    }

    fn is_zero_object(&self) -> bool {
        self.is_zero()
    }

    fn identity(&self) -> ModuleMap {
        ModuleMap::identity(self)
    }

    fn zero_map(src: &Self, tgt: &Self) -> ModuleMap {
        ModuleMap::zero(src, tgt)
    }

    fn source(f: &ModuleMap) -> &Self {
        f.source()
    }

    fn target(f: &ModuleMap) -> &Self {
        f.target()
    }

    fn compose(g: &ModuleMap, f: &ModuleMap) -> ModuleMap {
        debug_assert_eq!(g.source(), f.target());
        g.compose_unchecked(f)
    }

    fn add(f: &ModuleMap, g: &ModuleMap) -> ModuleMap {
        f.add(g).expect("parallel maps")
    }

    fn neg(f: &ModuleMap) -> ModuleMap {
        f.neg()
    }

    fn map_is_zero(f: &ModuleMap) -> bool {
        f.is_zero()
    }

    fn sum(p: u64, parts: &[Self]) -> DirectSum {
        DirectSum::new(p, parts)
    }

    fn sum_object(s: &DirectSum) -> &Self {
        &s.module
    }

    fn injection(s: &DirectSum, i: usize) -> ModuleMap {
        s.injection(i)
    }

    fn projection(s: &DirectSum, i: usize) -> ModuleMap {
        s.projection(i)
    }

    fn assemble(tgt: &DirectSum, src: &DirectSum, blocks: &[(usize, usize, &ModuleMap)]) -> ModuleMap {
        let mats: Vec<(usize, usize, &Matrix)> = blocks.iter().map(|&(i, j, f)| (i, j, f.matrix())).collect();
        let m = DirectSum::block_matrix(tgt, src, &mats);
        ModuleMap::from_lift(src.module.clone(), tgt.module.clone(), m)
    }

    fn cokernel(f: &ModuleMap) -> (Self, ModuleMap) {
        f.cokernel()
    }

    fn kernel(f: &ModuleMap) -> (Self, ModuleMap) {
        f.kernel()
    }

    fn is_mono(f: &ModuleMap) -> bool {
        f.is_mono()
    }

    fn is_epi(f: &ModuleMap) -> bool {
        f.is_epi()
    }

    fn descend(epi: &ModuleMap, g: &ModuleMap) -> Result<ModuleMap> {
        ModuleMap::descend_through_epi(epi, g)
    }

    fn lift(mono: &ModuleMap, g: &ModuleMap) -> Result<ModuleMap> {
        ModuleMap::lift_through_mono(mono, g)
    }
}

impl TensorObject for FpModule {
    type Layout = Tensor;

    fn tensor(a: &Self, b: &Self) -> Result<Tensor> {
        Tensor::new(a, b)
    }

    fn layout_object(l: &Tensor) -> &Self {
        &l.module
    }

    fn tensor_maps(src: &Tensor, tgt: &Tensor, f: &ModuleMap, g: &ModuleMap) -> ModuleMap {
        tensor_maps_on(src, tgt, f, g)
    }
}

impl Object for CyclicComplex {
    type Map = ChainMap;
    type Sum = ComplexSum;

    fn p(&self) -> u64 {
        CyclicComplex::p(self)
    }

    fn zero_like(&self) -> Self {
        CyclicComplex::zero(CyclicComplex::p(self))
    }

    fn is_zero_object(&self) -> bool {
        self.is_zero()
    }

    fn identity(&self) -> ChainMap {
        ChainMap::identity(self)
    }

    fn zero_map(src: &Self, tgt: &Self) -> ChainMap {
        ChainMap::zero(src, tgt)
    }

    fn source(f: &ChainMap) -> &Self {
        f.source()
    }

    fn target(f: &ChainMap) -> &Self {
        f.target()
    }

    fn compose(g: &ChainMap, f: &ChainMap) -> ChainMap {
        debug_assert_eq!(g.source(), f.target());
        g.compose_unchecked(f)
    }

    fn add(f: &ChainMap, g: &ChainMap) -> ChainMap {
        f.add(g).expect("parallel maps")
    }

    fn neg(f: &ChainMap) -> ChainMap {
        f.neg()
    }

    fn map_is_zero(f: &ChainMap) -> bool {
        f.is_zero()
    }

    fn sum(p: u64, parts: &[Self]) -> ComplexSum {
        ComplexSum::new(p, parts)
    }

    fn sum_object(s: &ComplexSum) -> &Self {
        &s.complex
    }

    fn injection(s: &ComplexSum, i: usize) -> ChainMap {
        s.injection(i)
    }

    fn projection(s: &ComplexSum, i: usize) -> ChainMap {
        s.projection(i)
    }

    fn assemble(tgt: &ComplexSum, src: &ComplexSum, blocks: &[(usize, usize, &ChainMap)]) -> ChainMap {
        let n = src.complex.period();
        let mats = (0..n)
            .map(|k| {
                let mats: Vec<(usize, usize, &Matrix)> =
                    blocks.iter().map(|&(i, j, f)| (i, j, f.comp(k).matrix())).collect();
                DirectSum::block_matrix(&tgt.layouts[k], &src.layouts[k], &mats)
            })
            .collect();
        ChainMap::from_matrices(&src.complex, &tgt.complex, mats)
    }

    /// Degreewise cokernel with the induced differential.
    fn cokernel(f: &ChainMap) -> (Self, ChainMap) {
        let y = f.target();
        let n = y.period();
        let parts: Vec<(FpModule, ModuleMap)> = f.comps().iter().map(|c| c.cokernel()).collect();
        let diffs = (0..n)
            .map(|k| {
                let g = parts[(k + 1) % n].1.compose_unchecked(y.diff(k));
                ModuleMap::descend_through_epi(&parts[k].1, &g).expect("differential descends to the cokernel")
            })
            .collect();
        let q = CyclicComplex::from_parts_unchecked(y.p(), parts.iter().map(|(m, _)| m.clone()).collect(), diffs);
        let epi = ChainMap::from_parts_unchecked(y.clone(), q.clone(), parts.into_iter().map(|(_, e)| e).collect());
        (q, epi)
    }

    /// Degreewise kernel with the restricted differential.
    fn kernel(f: &ChainMap) -> (Self, ChainMap) {
        let x = f.source();
        let n = x.period();
        let parts: Vec<(FpModule, ModuleMap)> = f.comps().iter().map(|c| c.kernel()).collect();
        let diffs = (0..n)
            .map(|k| {
                let g = x.diff(k).compose_unchecked(&parts[k].1);
                ModuleMap::lift_through_mono(&parts[(k + 1) % n].1, &g).expect("differential restricts to the kernel")
            })
            .collect();
        let kc = CyclicComplex::from_parts_unchecked(x.p(), parts.iter().map(|(m, _)| m.clone()).collect(), diffs);
        let mono = ChainMap::from_parts_unchecked(kc.clone(), x.clone(), parts.into_iter().map(|(_, m)| m).collect());
        (kc, mono)
    }

    fn is_mono(f: &ChainMap) -> bool {
        f.comps().iter().all(|c| c.is_mono())
    }

    fn is_epi(f: &ChainMap) -> bool {
        f.comps().iter().all(|c| c.is_epi())
    }

    fn descend(epi: &ChainMap, g: &ChainMap) -> Result<ChainMap> {
        let comps = epi
            .comps()
            .iter()
            .zip(g.comps())
            .map(|(e, h)| ModuleMap::descend_through_epi(e, h))
            .collect::<Result<_>>()?;
        ChainMap::new(epi.target().clone(), g.target().clone(), comps)
    }

    fn lift(mono: &ChainMap, g: &ChainMap) -> Result<ChainMap> {
        let comps = mono
            .comps()
            .iter()
            .zip(g.comps())
            .map(|(m, h)| ModuleMap::lift_through_mono(m, h))
            .collect::<Result<_>>()?;
        ChainMap::new(g.source().clone(), mono.source().clone(), comps)
    }
}

impl TensorObject for CyclicComplex {
    type Layout = TensorComplex;

    fn tensor(a: &Self, b: &Self) -> Result<TensorComplex> {
        TensorComplex::new(a, b)
    }

    fn layout_object(l: &TensorComplex) -> &Self {
        &l.complex
    }

    fn tensor_maps(src: &TensorComplex, tgt: &TensorComplex, f: &ChainMap, g: &ChainMap) -> ChainMap {
        crate::complexes::tensor_chain_maps(src, tgt, f, g)
    }
}
