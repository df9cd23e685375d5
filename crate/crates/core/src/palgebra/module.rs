use std::fmt;

use super::matrix::Matrix;
use super::scalar::PScalar;
use crate::error::{Error, Result};

/// A finitely generated Z_(p)-module in canonical form
/// `Z_(p)^rank ⊕ Z/p^{e_1} ⊕ ... ⊕ Z/p^{e_k}` with `e_1 <= ... <= e_k`.
///
/// Canonical generators come torsion first (ascending exponent), free last.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpModule {
    p: u64,
    rank: usize,
    torsion: Vec<u32>,
}

pub fn is_odd_prime(p: u64) -> bool {
    p >= 3 && p % 2 == 1 && (3..).step_by(2).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

impl FpModule {
    pub fn new(p: u64, rank: usize, mut torsion: Vec<u32>) -> Self {
        torsion.retain(|&e| e > 0);
        torsion.sort_unstable();
        FpModule { p, rank, torsion }
    }

    pub fn zero(p: u64) -> Self {
        FpModule { p, rank: 0, torsion: Vec::new() }
    }

    pub fn free(p: u64, rank: usize) -> Self {
        FpModule { p, rank, torsion: Vec::new() }
    }

    pub fn cyclic(p: u64, e: u32) -> Self {
        Self::new(p, 0, vec![e])
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn torsion(&self) -> &[u32] {
        &self.torsion
    }

    pub fn ngens(&self) -> usize {
        self.torsion.len() + self.rank
    }

    pub fn ntorsion(&self) -> usize {
        self.torsion.len()
    }

    /// Exponent of the order of generator `i`; `None` for a free generator.
    pub fn order(&self, i: usize) -> Option<u32> {
        self.torsion.get(i).copied()
    }

    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    /// Relation matrix (`ngens x ntorsion`) whose columns span the kernel of
    /// `Z_(p)^ngens -> self`.
    pub fn relations(&self) -> Matrix {
        let mut r = Matrix::zeros(self.ngens(), self.ntorsion());
        for (i, &e) in self.torsion.iter().enumerate() {
            r.set(i, i, PScalar::p_power(self.p, e as i32));
        }
        r
    }

    pub fn check_prime(&self, other: &FpModule) -> Result<()> {
        if self.p != other.p {
            return Err(Error::PrimeMismatch(self.p, other.p));
        }
        Ok(())
    }

    /// Canonical form of the cokernel of `relations` (`generators x k`).
    pub fn canonical_form(generators: usize, relations: &Matrix, p: u64) -> Result<FpModule> {
        if relations.rows() != generators {
            return Err(Error::ShapeMismatch(format!(
                "{} relation rows for {} generators",
                relations.rows(),
                generators
            )));
        }
        if let Some(bad) = relations.entries().iter().find(|x| !x.is_local(p)) {
            return Err(Error::InvalidScalar(bad.to_string(), p));
        }
        let s = super::snf::snf_unchecked(relations, p, super::snf::SnfFlags::NONE);
        let torsion: Vec<u32> = s.diag.iter().copied().filter(|&e| e > 0).collect();
        Ok(FpModule::new(p, generators - s.rank, torsion))
    }

    /// Order exponents as sort keys: torsion exponent, free generators last.
    pub(crate) fn key(&self, i: usize) -> u32 {
        self.order(i).unwrap_or(u32::MAX)
    }
}

impl fmt::Display for FpModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.torsion.len() {
            let e = self.torsion[i];
            let mut j = i;
            while j < self.torsion.len() && self.torsion[j] == e {
                j += 1;
            }
            let q = self.p.pow(e);
            if j - i == 1 {
                parts.push(format!("Z/{q}"));
            } else {
                parts.push(format!("(Z/{q})^{}", j - i));
            }
            i = j;
        }
        if self.rank == 1 {
            parts.push(format!("Z_({})", self.p));
        } else if self.rank > 1 {
            parts.push(format!("Z_({})^{}", self.p, self.rank));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for FpModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Biproduct of canonical modules; `pos[i][g]` is the canonical position of
/// generator `g` of summand `i` in the sum.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub module: FpModule,
    pub parts: Vec<FpModule>,
    pub pos: Vec<Vec<usize>>,
}

impl DirectSum {
    pub fn new(p: u64, parts: &[FpModule]) -> Self {
        let mut keyed = Vec::new();
        for (i, m) in parts.iter().enumerate() {
            debug_assert_eq!(m.p(), p);
            for g in 0..m.ngens() {
                keyed.push((m.key(g), i, g));
            }
        }
        keyed.sort_by_key(|&(k, _, _)| k);
        let mut pos: Vec<Vec<usize>> = parts.iter().map(|m| vec![0; m.ngens()]).collect();
        let mut torsion = Vec::new();
        let mut rank = 0;
        for (slot, &(k, i, g)) in keyed.iter().enumerate() {
            pos[i][g] = slot;
            if k == u32::MAX {
                rank += 1;
            } else {
                torsion.push(k);
            }
        }
        DirectSum { module: FpModule::new(p, rank, torsion), parts: parts.to_vec(), pos }
    }

    pub fn injection(&self, i: usize) -> super::map::ModuleMap {
        let mut m = Matrix::zeros(self.module.ngens(), self.parts[i].ngens());
        for (g, &slot) in self.pos[i].iter().enumerate() {
            m.set(slot, g, PScalar::one());
        }
        super::map::ModuleMap::from_normalized(self.parts[i].clone(), self.module.clone(), m)
    }

    pub fn projection(&self, i: usize) -> super::map::ModuleMap {
        let mut m = Matrix::zeros(self.parts[i].ngens(), self.module.ngens());
        for (g, &slot) in self.pos[i].iter().enumerate() {
            m.set(g, slot, PScalar::one());
        }
        super::map::ModuleMap::from_normalized(self.module.clone(), self.parts[i].clone(), m)
    }

    /// Matrix between two sums from blocks `(target part, source part, matrix)`.
    /// Overlapping blocks are added.
    pub fn block_matrix(tgt: &DirectSum, src: &DirectSum, blocks: &[(usize, usize, &Matrix)]) -> Matrix {
        let mut out = Matrix::zeros(tgt.module.ngens(), src.module.ngens());
        for &(ti, si, b) in blocks {
            debug_assert_eq!(b.shape(), (tgt.parts[ti].ngens(), src.parts[si].ngens()));
            for r in 0..b.rows() {
                for c in 0..b.cols() {
                    let x = b.get(r, c);
                    if !x.is_zero() {
                        *out.get_mut(tgt.pos[ti][r], src.pos[si][c]) += x;
                    }
                }
            }
        }
        out
    }

    /// Block `(ti, si)` of a matrix between two sums.
    pub fn block_of(tgt: &DirectSum, src: &DirectSum, m: &Matrix, ti: usize, si: usize) -> Matrix {
        let mut out = Matrix::zeros(tgt.parts[ti].ngens(), src.parts[si].ngens());
        for (r, &rr) in tgt.pos[ti].iter().enumerate() {
            for (c, &cc) in src.pos[si].iter().enumerate() {
                out.set(r, c, m.get(rr, cc).clone());
            }
        }
        out
    }

    /// Embed a coordinate vector of summand `i` into the sum.
    pub fn embed(&self, i: usize, v: &[PScalar]) -> Vec<PScalar> {
        let mut out = vec![PScalar::zero(); self.module.ngens()];
        for (g, x) in v.iter().enumerate() {
            out[self.pos[i][g]] = x.clone();
        }
        out
    }

    /// Coordinates of summand `i` of a vector in the sum.
    pub fn extract(&self, i: usize, v: &[PScalar]) -> Vec<PScalar> {
        self.pos[i].iter().map(|&s| v[s].clone()).collect()
    }
}

impl serde::Serialize for FpModule {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("FpModule", 2)?;
        st.serialize_field("rank", &self.rank)?;
        st.serialize_field("torsion", &self.torsion)?;
        st.end()
    }
}
