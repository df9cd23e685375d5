use super::chain::ChainMap;
use super::complex::CyclicComplex;
use super::constructions::{tensor_cyclic, ComplexSum};
use crate::error::{Error, Result};
use crate::palgebra::{tensor_and_tor, FpModule, Matrix, ModuleMap, PScalar};

/// A torsion-free complex `P` with a quasi-isomorphism `q : P -> C`.
#[derive(Clone, Debug)]
pub struct FlatReplacement {
    pub complex: CyclicComplex,
    pub map: ChainMap,
}

/// Minimal flat model: `P^n = G^n ⊕ K^n` with `G^n` free on the generators
/// of `H^n`, `K^n` free on the torsion generators of `H^{n+1}`, and
/// `d : K^n -> G^{n+1}` the diagonal of their orders.
pub fn flat_replacement(c: &CyclicComplex) -> FlatReplacement {
    let p = c.p();
    let n = c.period();
    let h: Vec<_> = (0..n).map(|k| c.cohomology_data(k)).collect();
    let g: Vec<usize> = h.iter().map(|x| x.module.ngens()).collect();
    let kk: Vec<usize> = (0..n).map(|k| h[(k + 1) % n].module.ntorsion()).collect();
    let modules: Vec<FpModule> = (0..n).map(|k| FpModule::free(p, g[k] + kk[k])).collect();
    let mut diffs = Vec::with_capacity(n);
    let mut qs = Vec::with_capacity(n);
    for k in 0..n {
        let k1 = (k + 1) % n;
        let mut d = Matrix::zeros(g[k1] + kk[k1], g[k] + kk[k]);
        let mut q = Matrix::zeros(c.module(k).ngens(), g[k] + kk[k]);
        q.put_block(0, 0, &h[k].reps);
        for (j, &e) in h[k1].module.torsion().iter().enumerate() {
            let pe = PScalar::p_power(p, e as i32);
            d.set(j, g[k] + j, pe.clone());
            let z = h[k1].reps.col_range(j, j + 1).scale(&pe);
            let cj = c.solve_boundary(k, &z).expect("torsion class times its order is a coboundary");
            q.put_block(0, g[k] + j, &cj);
        }
        diffs.push(d);
        qs.push(q);
    }
    let complex = CyclicComplex::from_matrices(p, modules, diffs);
    let map = ChainMap::from_matrices(&complex, c, qs);
    FlatReplacement { complex, map }
}

/// The minimal model plus the contractible disks `F^n --id--> F^n` on the
/// free cover `F^n` of each `C^n`, mapped by the projection and `d` after it.
pub fn flat_replacement_with_disks(c: &CyclicComplex) -> FlatReplacement {
    let p = c.p();
    let n = c.period();
    let minimal = flat_replacement(c);
    let mut parts = vec![minimal.complex.clone()];
    for k in 0..n {
        let f = FpModule::free(p, c.module(k).ngens());
        parts.push(CyclicComplex::two_term(&ModuleMap::identity(&f), k as i64));
    }
    let sum = ComplexSum::new(p, &parts);
    let mut maps = vec![minimal.map.clone()];
    for k in 0..n {
        let disk = &parts[k + 1];
        let k1 = (k + 1) % n;
        let mats = (0..n)
            .map(|j| {
                let rows = c.module(j).ngens();
                let cols = disk.module(j).ngens();
                if j == k {
                    Matrix::identity(rows)
                } else if j == k1 {
                    c.diff(k).matrix().clone()
                } else {
                    Matrix::zeros(rows, cols)
                }
            })
            .collect();
        maps.push(ChainMap::from_matrices(disk, c, mats));
    }
    let map = sum.copair(&maps);
    FlatReplacement { complex: sum.complex, map }
}

/// `C ⊗^L D` via minimal flat models.
pub fn derived_tensor(c: &CyclicComplex, d: &CyclicComplex) -> Result<CyclicComplex> {
    if c.p() != d.p() {
        return Err(Error::PrimeMismatch(c.p(), d.p()));
    }
    tensor_cyclic(&flat_replacement(c).complex, &flat_replacement(d).complex)
}

fn sum_modules(p: u64, ms: &[FpModule]) -> FpModule {
    let rank = ms.iter().map(|m| m.rank()).sum();
    let torsion = ms.iter().flat_map(|m| m.torsion().iter().copied()).collect();
    FpModule::new(p, rank, torsion)
}

/// Cohomology of `C ⊗ D` for flat inputs from the Künneth formula.
pub fn kunneth_oracle(c: &CyclicComplex, d: &CyclicComplex) -> Result<Vec<FpModule>> {
    if c.p() != d.p() {
        return Err(Error::PrimeMismatch(c.p(), d.p()));
    }
    c.check_flat()?;
    d.check_flat()?;
    kunneth_from_cohomology(&c.cohomology_table(), &d.cohomology_table())
}

/// The Künneth sum for two cohomology tables.
pub fn kunneth_from_cohomology(hc: &[FpModule], hd: &[FpModule]) -> Result<Vec<FpModule>> {
    let n = hc.len();
    let p = hc[0].p();
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let mut parts = Vec::new();
        for s in 0..n {
            let (t, _) = tensor_and_tor(&hc[s], &hd[(k + n - s) % n])?;
            let (_, tor) = tensor_and_tor(&hc[s], &hd[(k + 1 + n - s) % n])?;
            parts.push(t);
            parts.push(tor);
        }
        out.push(sum_modules(p, &parts));
    }
    Ok(out)
}
