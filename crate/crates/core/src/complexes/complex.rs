use std::fmt;

use crate::error::{Error, Result};
use crate::palgebra::lattice::{kernel_basis, reduce_rows, solve, subquotient};
use crate::palgebra::{is_odd_prime, Matrix, ModuleMap, FpModule, PScalar};

/// An N-cyclic cochain complex, `N = 2p - 2`: one period of a quasi-periodic
/// complex with `d^n : C^n -> C^{n+1 mod N}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CyclicComplex {
    p: u64,
    modules: Vec<FpModule>,
    diffs: Vec<ModuleMap>,
}

/// `H^n` as a subquotient of `C^n` in lifted coordinates.
///
/// `reps` lifts each canonical generator of `H^n` to a cocycle; `coords`
/// sends a lifted cocycle to its class (unreduced).
#[derive(Clone, Debug)]
pub struct Cohomology {
    pub module: FpModule,
    pub reps: Matrix,
    pub coords: Matrix,
}

impl Cohomology {
    /// Class of the lifted cocycle columns `x`.
    pub fn class(&self, x: &Matrix) -> Matrix {
        let mut c = self.coords.mul(x);
        reduce_rows(&mut c, &self.module);
        c
    }
}

pub fn period(p: u64) -> usize {
    (2 * p - 2) as usize
}

impl CyclicComplex {
    pub fn new(p: u64, modules: Vec<FpModule>, diffs: Vec<ModuleMap>) -> Result<Self> {
        if !is_odd_prime(p) {
            return Err(Error::InvalidInput(format!("{p} is not an odd prime")));
        }
        let n = period(p);
        if modules.len() != n || diffs.len() != n {
            return Err(Error::InvalidComplex(format!(
                "expected {n} modules and differentials, got {} and {}",
                modules.len(),
                diffs.len()
            )));
        }
        for (k, d) in diffs.iter().enumerate() {
            if d.p() != p {
                return Err(Error::PrimeMismatch(p, d.p()));
            }
            if d.source() != &modules[k] || d.target() != &modules[(k + 1) % n] {
                return Err(Error::InvalidComplex(format!("differential d^{k} has the wrong source or target")));
            }
        }
        let c = CyclicComplex { p, modules, diffs };
        for k in 0..n {
            if !c.diff(k + 1).compose_unchecked(c.diff(k)).is_zero() {
                return Err(Error::InvalidComplex(format!("d^{} d^{k} is not zero", (k + 1) % n)));
            }
        }
        Ok(c)
    }

    /// Build from differentials alone; modules are read off their sources.
    pub fn from_diffs(p: u64, diffs: Vec<ModuleMap>) -> Result<Self> {
        let modules = diffs.iter().map(|d| d.source().clone()).collect();
        Self::new(p, modules, diffs)
    }

    pub(crate) fn from_parts_unchecked(p: u64, modules: Vec<FpModule>, diffs: Vec<ModuleMap>) -> Self {
        let c = CyclicComplex { p, modules, diffs };
        debug_assert!((0..c.period()).all(|k| c.diff(k + 1).compose_unchecked(c.diff(k)).is_zero()));
        c
    }

    /// Build from modules and lifted differential matrices.
    pub(crate) fn from_matrices(p: u64, modules: Vec<FpModule>, mats: Vec<Matrix>) -> Self {
        let n = modules.len();
        let diffs = mats
            .into_iter()
            .enumerate()
            .map(|(k, m)| ModuleMap::from_lift(modules[k].clone(), modules[(k + 1) % n].clone(), m))
            .collect();
        Self::from_parts_unchecked(p, modules, diffs)
    }

    pub fn zero(p: u64) -> Self {
        let n = period(p);
        let z = FpModule::zero(p);
        CyclicComplex { p, modules: vec![z.clone(); n], diffs: vec![ModuleMap::zero(&z, &z); n] }
    }

    /// `m` in degree `deg`, zero elsewhere.
    pub fn concentrated(m: &FpModule, deg: i64) -> Self {
        let p = m.p();
        let n = period(p);
        let k = deg.rem_euclid(n as i64) as usize;
        let mut modules = vec![FpModule::zero(p); n];
        modules[k] = m.clone();
        let diffs = (0..n).map(|i| ModuleMap::zero(&modules[i], &modules[(i + 1) % n])).collect();
        CyclicComplex { p, modules, diffs }
    }

    /// `Z_(p)` in degree 0.
    pub fn unit(p: u64) -> Self {
        Self::concentrated(&FpModule::free(p, 1), 0)
    }

    /// The two-term complex `f` in degrees `deg`, `deg + 1`.
    pub fn two_term(f: &ModuleMap, deg: i64) -> Self {
        let p = f.p();
        let n = period(p);
        let k = deg.rem_euclid(n as i64) as usize;
        let mut modules = vec![FpModule::zero(p); n];
        modules[k] = f.source().clone();
        modules[(k + 1) % n] = f.target().clone();
        let diffs = (0..n)
            .map(|i| if i == k { f.clone() } else { ModuleMap::zero(&modules[i], &modules[(i + 1) % n]) })
            .collect();
        CyclicComplex { p, modules, diffs }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn period(&self) -> usize {
        self.modules.len()
    }

    pub fn idx(&self, n: i64) -> usize {
        n.rem_euclid(self.period() as i64) as usize
    }

    pub fn module(&self, n: usize) -> &FpModule {
        &self.modules[n % self.period()]
    }

    pub fn modules(&self) -> &[FpModule] {
        &self.modules
    }

    pub fn diff(&self, n: usize) -> &ModuleMap {
        &self.diffs[n % self.period()]
    }

    pub fn diffs(&self) -> &[ModuleMap] {
        &self.diffs
    }

    pub fn is_flat(&self) -> bool {
        self.modules.iter().all(|m| m.is_free())
    }

    pub fn is_zero(&self) -> bool {
        self.modules.iter().all(|m| m.is_zero())
    }

    pub fn check_flat(&self) -> Result<()> {
        match self.modules.iter().position(|m| !m.is_free()) {
            None => Ok(()),
            Some(k) => Err(Error::FlatnessViolation(format!("degree {k} is {}", self.modules[k]))),
        }
    }

    /// Lifted cocycle lattice of degree `n` (contains the relations).
    pub fn cocycle_lattice(&self, n: usize) -> Matrix {
        let d = self.diff(n);
        let a = d.matrix().hstack(&d.target().relations());
        let k = kernel_basis(&a, self.p);
        k.row_range(0, self.module(n).ngens())
    }

    /// Lifted coboundary lattice of degree `n` (contains the relations).
    pub fn coboundary_lattice(&self, n: usize) -> Matrix {
        let n = n % self.period();
        let prev = self.diff(n + self.period() - 1);
        prev.matrix().hstack(&self.module(n).relations())
    }

    pub fn cohomology_data(&self, n: usize) -> Cohomology {
        let z = self.cocycle_lattice(n);
        let b = self.coboundary_lattice(n);
        let sq = subquotient(&z, &b, self.p);
        Cohomology { module: sq.module, reps: sq.reps, coords: sq.coords }
    }

    pub fn cohomology(&self, n: usize) -> FpModule {
        self.cohomology_data(n).module
    }

    pub fn cohomology_table(&self) -> Vec<FpModule> {
        (0..self.period()).map(|n| self.cohomology(n)).collect()
    }

    pub fn is_acyclic(&self) -> bool {
        (0..self.period()).all(|n| self.cohomology(n).is_zero())
    }

    /// Some `c` with `d c = x` for each lifted column `x` of degree `n + 1`.
    pub fn solve_boundary(&self, n: usize, x: &Matrix) -> Option<Matrix> {
        let d = self.diff(n);
        let a = d.matrix().hstack(&d.target().relations());
        solve(&a, x, self.p).map(|s| s.row_range(0, d.source().ngens()))
    }

    /// `(Σ^k C)^n = C^{n+k}` with differential `(-1)^k d`.
    pub fn shift(&self, k: i64) -> CyclicComplex {
        let n = self.period();
        let sign = if k.rem_euclid(2) == 0 { PScalar::one() } else { PScalar::from_int(-1) };
        let modules = (0..n).map(|i| self.modules[self.idx(i as i64 + k)].clone()).collect();
        let diffs = (0..n).map(|i| self.diffs[self.idx(i as i64 + k)].scale(&sign)).collect();
        CyclicComplex { p: self.p, modules, diffs }
    }
}

impl fmt::Debug for CyclicComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CyclicComplex(p = {}, N = {})", self.p, self.period())?;
        for (k, d) in self.diffs.iter().enumerate() {
            writeln!(f, "  C^{k} = {}  d = {:?}", self.modules[k], d.matrix())?;
        }
        Ok(())
    }
}

/// The complex `Z_(3) --3--> Z_(3)` in degrees 0, 1 for `p = 3`.
pub fn moore_complex(p: u64) -> Result<CyclicComplex> {
    if p != 3 {
        return Err(Error::Unsupported(format!("the Moore example is defined for p = 3, not {p}")));
    }
    let z = FpModule::free(3, 1);
    let f = ModuleMap::scalar(&z, &PScalar::from_int(3))?;
    Ok(CyclicComplex::two_term(&f, 0))
}
