//! Tensor products and Tor over Z_(p).

use super::map::ModuleMap;
use super::matrix::Matrix;
use super::module::{DirectSum, FpModule};
use super::scalar::PScalar;
use crate::error::Result;

/// `M ⊗ N` with its generator layout: `pos[i][j]` is the canonical position
/// of `m_i ⊗ n_j`, and `gens[k] = (i, j)` inverts it.
#[derive(Clone, Debug)]
pub struct Tensor {
    pub module: FpModule,
    pub left: FpModule,
    pub right: FpModule,
    pub pos: Vec<Vec<usize>>,
    pub gens: Vec<(usize, usize)>,
}

fn pair_order(a: Option<u32>, b: Option<u32>) -> Option<u32> {
    match (a, b) {
        (None, None) => None,
        (Some(x), None) | (None, Some(x)) => Some(x),
        (Some(x), Some(y)) => Some(x.min(y)),
    }
}

impl Tensor {
    pub fn new(m: &FpModule, n: &FpModule) -> Result<Tensor> {
        m.check_prime(n)?;
        let p = m.p();
        let mut parts = Vec::with_capacity(m.ngens() * n.ngens());
        for i in 0..m.ngens() {
            for j in 0..n.ngens() {
                parts.push(match pair_order(m.order(i), n.order(j)) {
                    None => FpModule::free(p, 1),
                    Some(e) => FpModule::cyclic(p, e),
                });
            }
        }
        let sum = DirectSum::new(p, &parts);
        let mut pos = vec![vec![0; n.ngens()]; m.ngens()];
        let mut gens = vec![(0, 0); sum.module.ngens()];
        for i in 0..m.ngens() {
            for j in 0..n.ngens() {
                let slot = sum.pos[i * n.ngens() + j][0];
                pos[i][j] = slot;
                gens[slot] = (i, j);
            }
        }
        Ok(Tensor { module: sum.module, left: m.clone(), right: n.clone(), pos, gens })
    }

    /// Matrix of `f ⊗ g` between two layouts, unreduced.
    pub(crate) fn map_matrix(src: &Tensor, tgt: &Tensor, f: &Matrix, g: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(tgt.module.ngens(), src.module.ngens());
        for (col, &(a, b)) in src.gens.iter().enumerate() {
            for c in 0..f.rows() {
                let x = f.get(c, a);
                if x.is_zero() {
                    continue;
                }
                for d in 0..g.rows() {
                    let y = g.get(d, b);
                    if y.is_zero() {
                        continue;
                    }
                    out.set(tgt.pos[c][d], col, x * y);
                }
            }
        }
        out
    }

    /// Coordinates of the elementary tensor `x ⊗ y`.
    pub fn elementary(&self, x: &[PScalar], y: &[PScalar]) -> Vec<PScalar> {
        let mut out = vec![PScalar::zero(); self.module.ngens()];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if !b.is_zero() {
                    out[self.pos[i][j]] = a * b;
                }
            }
        }
        out
    }
}

pub fn tensor_modules(m: &FpModule, n: &FpModule) -> Result<FpModule> {
    Ok(Tensor::new(m, n)?.module)
}

/// `f ⊗ g` on the standard layouts.
pub fn tensor_maps(f: &ModuleMap, g: &ModuleMap) -> Result<ModuleMap> {
    let src = Tensor::new(f.source(), g.source())?;
    let tgt = Tensor::new(f.target(), g.target())?;
    Ok(tensor_maps_on(&src, &tgt, f, g))
}

pub(crate) fn tensor_maps_on(src: &Tensor, tgt: &Tensor, f: &ModuleMap, g: &ModuleMap) -> ModuleMap {
    let m = Tensor::map_matrix(src, tgt, f.matrix(), g.matrix());
    ModuleMap::from_lift(src.module.clone(), tgt.module.clone(), m)
}

/// `Tor_1(M, N)`: one `Z/p^min(a,b)` for each pair of torsion generators.
pub fn tor(m: &FpModule, n: &FpModule) -> Result<FpModule> {
    m.check_prime(n)?;
    let mut t = Vec::new();
    for &a in m.torsion() {
        for &b in n.torsion() {
            t.push(a.min(b));
        }
    }
    Ok(FpModule::new(m.p(), 0, t))
}

pub fn tensor_and_tor(m: &FpModule, n: &FpModule) -> Result<(FpModule, FpModule)> {
    Ok((tensor_modules(m, n)?, tor(m, n)?))
}

/// Kronecker product `a ⊗ b` with row index `i * b.rows() + k`.
pub fn kronecker(a: &Matrix, b: &Matrix) -> Matrix {
    let mut out = Matrix::zeros(a.rows() * b.rows(), a.cols() * b.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let x = a.get(i, j);
            if x.is_zero() {
                continue;
            }
            for k in 0..b.rows() {
                for l in 0..b.cols() {
                    let y = b.get(k, l);
                    if !y.is_zero() {
                        out.set(i * b.rows() + k, j * b.cols() + l, x * y);
                    }
                }
            }
        }
    }
    out
}

/// `M ⊗ N` computed from free presentations as `coker[R_M ⊗ 1 | 1 ⊗ R_N]`.
pub fn tensor_by_presentation(m: &FpModule, n: &FpModule) -> Result<FpModule> {
    m.check_prime(n)?;
    let rel = kronecker(&m.relations(), &Matrix::identity(n.ngens()))
        .hstack(&kronecker(&Matrix::identity(m.ngens()), &n.relations()));
    FpModule::canonical_form(m.ngens() * n.ngens(), &rel, m.p())
}

/// `Tor_1(M, N)` as the kernel of `R_M ⊗ N : N^k -> N^m`.
pub fn tor_by_presentation(m: &FpModule, n: &FpModule) -> Result<FpModule> {
    m.check_prime(n)?;
    let p = m.p();
    let k = m.ntorsion();
    let src = DirectSum::new(p, &vec![n.clone(); k]);
    let tgt = DirectSum::new(p, &vec![n.clone(); m.ngens()]);
    let mut mat = Matrix::zeros(tgt.module.ngens(), src.module.ngens());
    let rel = m.relations();
    for r in 0..k {
        for g in 0..m.ngens() {
            let c = rel.get(g, r);
            if c.is_zero() {
                continue;
            }
            for j in 0..n.ngens() {
                mat.set(tgt.pos[g][j], src.pos[r][j], c.clone());
            }
        }
    }
    let f = ModuleMap::new(src.module, tgt.module, mat)?;
    Ok(f.kernel().0)
}
