use super::chain::ChainMap;
use super::complex::CyclicComplex;
use crate::error::{Error, Result};
use crate::palgebra::tensor::Tensor;
use crate::palgebra::{DirectSum, FpModule, Matrix, ModuleMap, PScalar};

fn sign(k: usize) -> PScalar {
    if k.is_multiple_of(2) {
        PScalar::one()
    } else {
        PScalar::from_int(-1)
    }
}

/// Degreewise biproduct of complexes.
#[derive(Clone, Debug)]
pub struct ComplexSum {
    pub complex: CyclicComplex,
    pub parts: Vec<CyclicComplex>,
    pub layouts: Vec<DirectSum>,
}

impl ComplexSum {
    pub fn new(p: u64, parts: &[CyclicComplex]) -> ComplexSum {
        let n = super::complex::period(p);
        let layouts: Vec<DirectSum> = (0..n)
            .map(|k| DirectSum::new(p, &parts.iter().map(|c| c.module(k).clone()).collect::<Vec<_>>()))
            .collect();
        let mats = (0..n)
            .map(|k| {
                let blocks: Vec<_> = parts.iter().enumerate().map(|(i, c)| (i, i, c.diff(k).matrix())).collect();
                DirectSum::block_matrix(&layouts[(k + 1) % n], &layouts[k], &blocks)
            })
            .collect();
        let modules = layouts.iter().map(|l| l.module.clone()).collect();
        let complex = CyclicComplex::from_matrices(p, modules, mats);
        ComplexSum { complex, parts: parts.to_vec(), layouts }
    }

    pub fn injection(&self, i: usize) -> ChainMap {
        let comps = self.layouts.iter().map(|l| l.injection(i)).collect();
        ChainMap::from_parts_unchecked(self.parts[i].clone(), self.complex.clone(), comps)
    }

    pub fn projection(&self, i: usize) -> ChainMap {
        let comps = self.layouts.iter().map(|l| l.projection(i)).collect();
        ChainMap::from_parts_unchecked(self.complex.clone(), self.parts[i].clone(), comps)
    }

    /// Map out of the sum given by one map per part.
    pub fn copair(&self, maps: &[ChainMap]) -> ChainMap {
        let target = maps[0].target().clone();
        let mats = (0..self.complex.period())
            .map(|k| {
                let mut m = Matrix::zeros(target.module(k).ngens(), self.layouts[k].module.ngens());
                for (i, f) in maps.iter().enumerate() {
                    m = m.add(&f.comp(k).matrix().mul(self.layouts[k].projection(i).matrix()));
                }
                m
            })
            .collect();
        ChainMap::from_matrices(&self.complex, &target, mats)
    }
}

pub fn direct_sum(parts: &[CyclicComplex]) -> Result<ComplexSum> {
    let p = parts.first().map(|c| c.p()).ok_or_else(|| Error::InvalidInput("empty direct sum".into()))?;
    if let Some(c) = parts.iter().find(|c| c.p() != p) {
        return Err(Error::PrimeMismatch(p, c.p()));
    }
    Ok(ComplexSum::new(p, parts))
}

/// Mapping cone with `cone^n = X^{n+1} ⊕ Y^n` and `d = [[-d, 0], [f, d]]`.
#[derive(Clone, Debug)]
pub struct Cone {
    pub complex: CyclicComplex,
    pub incl: ChainMap,
    pub proj: ChainMap,
    pub layouts: Vec<DirectSum>,
}

pub fn mapping_cone(f: &ChainMap) -> Cone {
    let x = f.source();
    let y = f.target();
    let p = x.p();
    let n = x.period();
    let layouts: Vec<DirectSum> =
        (0..n).map(|k| DirectSum::new(p, &[x.module(k + 1).clone(), y.module(k).clone()])).collect();
    let mats = (0..n)
        .map(|k| {
            let mdx = x.diff(k + 1).matrix().neg();
            DirectSum::block_matrix(
                &layouts[(k + 1) % n],
                &layouts[k],
                &[(0, 0, &mdx), (1, 0, f.comp(k + 1).matrix()), (1, 1, y.diff(k).matrix())],
            )
        })
        .collect();
    let modules = layouts.iter().map(|l| l.module.clone()).collect();
    let complex = CyclicComplex::from_matrices(p, modules, mats);
    let incl = ChainMap::from_parts_unchecked(y.clone(), complex.clone(), layouts.iter().map(|l| l.injection(1)).collect());
    let proj =
        ChainMap::from_parts_unchecked(complex.clone(), x.shift(1), layouts.iter().map(|l| l.projection(0)).collect());
    Cone { complex, incl, proj, layouts }
}

/// `C ⊗ D` with `(C ⊗ D)^n = ⊕_s C^s ⊗ D^{n-s}` and Koszul sign `(-1)^s`.
///
/// `layouts[n]` has one part per `s` in `0..N`, and `pieces[n][s]` is the
/// generator layout of `C^s ⊗ D^{n-s}`.
#[derive(Clone, Debug)]
pub struct TensorComplex {
    pub complex: CyclicComplex,
    pub left: CyclicComplex,
    pub right: CyclicComplex,
    pub layouts: Vec<DirectSum>,
    pub pieces: Vec<Vec<Tensor>>,
}

impl TensorComplex {
    pub fn new(c: &CyclicComplex, d: &CyclicComplex) -> Result<TensorComplex> {
        if c.p() != d.p() {
            return Err(Error::PrimeMismatch(c.p(), d.p()));
        }
        let p = c.p();
        let n = c.period();
        let pieces: Vec<Vec<Tensor>> = (0..n)
            .map(|k| (0..n).map(|s| Tensor::new(c.module(s), d.module((k + n - s) % n))).collect::<Result<_>>())
            .collect::<Result<_>>()?;
        let layouts: Vec<DirectSum> = pieces
            .iter()
            .map(|row| DirectSum::new(p, &row.iter().map(|t| t.module.clone()).collect::<Vec<_>>()))
            .collect();
        let mut mats = Vec::with_capacity(n);
        for k in 0..n {
            let k1 = (k + 1) % n;
            let mut blocks = Vec::new();
            for s in 0..n {
                let t = (k + n - s) % n;
                let src = &pieces[k][s];
                let s1 = (s + 1) % n;
                let a = Tensor::map_matrix(src, &pieces[k1][s1], c.diff(s).matrix(), &Matrix::identity(d.module(t).ngens()));
                let b = Tensor::map_matrix(src, &pieces[k1][s], &Matrix::identity(c.module(s).ngens()), d.diff(t).matrix())
                    .scale(&sign(s));
                blocks.push((s1, s, a));
                blocks.push((s, s, b));
            }
            let refs: Vec<_> = blocks.iter().map(|(i, j, m)| (*i, *j, m)).collect();
            mats.push(DirectSum::block_matrix(&layouts[k1], &layouts[k], &refs));
        }
        let modules = layouts.iter().map(|l| l.module.clone()).collect();
        let complex = CyclicComplex::from_matrices(p, modules, mats);
        Ok(TensorComplex { complex, left: c.clone(), right: d.clone(), layouts, pieces })
    }

    /// Coordinates in degree `n` of `x ⊗ y` with `x ∈ C^s`.
    pub fn elementary(&self, n: usize, s: usize, x: &[PScalar], y: &[PScalar]) -> Vec<PScalar> {
        let v = self.pieces[n][s].elementary(x, y);
        self.layouts[n].embed(s, &v)
    }

    /// Lifted matrix of `x ⊗ -` from `D^t` into degree `s + t`, for column `x` of `C^s`.
    pub fn left_multiplication(&self, s: usize, t: usize, x: &Matrix) -> Matrix {
        let n = self.complex.period();
        let k = (s + t) % n;
        let piece = &self.pieces[k][s];
        let mut out = Matrix::zeros(self.layouts[k].module.ngens(), piece.right.ngens());
        for j in 0..piece.right.ngens() {
            for i in 0..piece.left.ngens() {
                let a = x.get(i, 0);
                if !a.is_zero() {
                    out.set(self.layouts[k].pos[s][piece.pos[i][j]], j, a.clone());
                }
            }
        }
        out
    }
}

pub fn tensor_cyclic(c: &CyclicComplex, d: &CyclicComplex) -> Result<CyclicComplex> {
    Ok(TensorComplex::new(c, d)?.complex)
}

/// `f ⊗ g` between tensor complexes built on the standard layouts.
pub fn tensor_chain_maps(src: &TensorComplex, tgt: &TensorComplex, f: &ChainMap, g: &ChainMap) -> ChainMap {
    let n = src.complex.period();
    let mats = (0..n)
        .map(|k| {
            let blocks: Vec<Matrix> = (0..n)
                .map(|s| {
                    let t = (k + n - s) % n;
                    Tensor::map_matrix(&src.pieces[k][s], &tgt.pieces[k][s], f.comp(s).matrix(), g.comp(t).matrix())
                })
                .collect();
            let refs: Vec<_> = blocks.iter().enumerate().map(|(s, m)| (s, s, m)).collect();
            DirectSum::block_matrix(&tgt.layouts[k], &src.layouts[k], &refs)
        })
        .collect();
    ChainMap::from_matrices(&src.complex, &tgt.complex, mats)
}

/// Cocycles and coboundaries of one degree as submodules.
#[derive(Clone, Debug)]
pub struct CrownData {
    pub cocycles: FpModule,
    pub cocycle_mono: ModuleMap,
    pub coboundaries: FpModule,
    pub coboundary_mono: ModuleMap,
    /// `d^{n-1}` corestricted onto `B^n`.
    pub coboundary_epi: ModuleMap,
}

impl CrownData {
    pub fn new(c: &CyclicComplex, n: usize) -> CrownData {
        let per = c.period();
        let (cocycles, cocycle_mono) = c.diff(n).kernel();
        let (coboundaries, coboundary_mono, coboundary_epi) = c.diff(n + per - 1).image();
        CrownData { cocycles, cocycle_mono, coboundaries, coboundary_mono, coboundary_epi }
    }

    /// `B^n -> Z^n`
    pub fn boundary_in_cocycles(&self) -> ModuleMap {
        ModuleMap::lift_through_mono(&self.cocycle_mono, &self.coboundary_mono).expect("coboundaries are cocycles")
    }
}

pub fn crown_data(c: &CyclicComplex) -> Vec<CrownData> {
    (0..c.period()).map(|n| CrownData::new(c, n)).collect()
}

/// Mapping cylinder `Cyl^m = X^m ⊕ X^{m+1} ⊕ Y^m` with
/// `d(x, x', y) = (dx + x', -dx', dy - f x')`.
#[derive(Clone, Debug)]
pub struct Cylinder {
    pub complex: CyclicComplex,
    /// `x -> (x, 0, 0)`, degreewise split with free cokernel for free `X`, `Y`
    pub top: ChainMap,
    /// `y -> (0, 0, y)`
    pub bottom: ChainMap,
    /// `(x, x', y) -> f x + y`, a homotopy equivalence
    pub proj: ChainMap,
    pub layouts: Vec<DirectSum>,
}

pub fn mapping_cylinder(f: &ChainMap) -> Cylinder {
    let x = f.source();
    let y = f.target();
    let p = x.p();
    let n = x.period();
    let layouts: Vec<DirectSum> = (0..n)
        .map(|k| DirectSum::new(p, &[x.module(k).clone(), x.module(k + 1).clone(), y.module(k).clone()]))
        .collect();
    let mats = (0..n)
        .map(|k| {
            let id = Matrix::identity(x.module(k + 1).ngens());
            let mdx = x.diff(k + 1).matrix().neg();
            let mf = f.comp(k + 1).matrix().neg();
            DirectSum::block_matrix(
                &layouts[(k + 1) % n],
                &layouts[k],
                &[(0, 0, x.diff(k).matrix()), (0, 1, &id), (1, 1, &mdx), (2, 1, &mf), (2, 2, y.diff(k).matrix())],
            )
        })
        .collect();
    let complex = CyclicComplex::from_matrices(p, layouts.iter().map(|l| l.module.clone()).collect(), mats);
    let top = ChainMap::from_parts_unchecked(x.clone(), complex.clone(), layouts.iter().map(|l| l.injection(0)).collect());
    let bottom = ChainMap::from_parts_unchecked(y.clone(), complex.clone(), layouts.iter().map(|l| l.injection(2)).collect());
    let proj_mats = (0..n)
        .map(|k| {
            let tgt = DirectSum::new(p, &[y.module(k).clone()]);
            let id = Matrix::identity(y.module(k).ngens());
            DirectSum::block_matrix(&tgt, &layouts[k], &[(0, 0, f.comp(k).matrix()), (0, 2, &id)])
        })
        .collect();
    let proj = ChainMap::from_matrices(&complex, y, proj_mats);
    Cylinder { complex, top, bottom, proj, layouts }
}
