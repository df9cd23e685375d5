use super::matrix::Matrix;
use super::scalar::PScalar;
use crate::error::{Error, Result};

/// Which transformation matrices to accumulate during elimination.
#[derive(Clone, Copy, Debug, Default)]
pub struct SnfFlags {
    pub left: bool,
    pub left_inv: bool,
    pub right: bool,
    pub right_inv: bool,
}

impl SnfFlags {
    pub const NONE: SnfFlags = SnfFlags { left: false, left_inv: false, right: false, right_inv: false };
    pub const ALL: SnfFlags = SnfFlags { left: true, left_inv: true, right: true, right_inv: true };

    pub fn left() -> Self {
        SnfFlags { left: true, ..Self::NONE }
    }

    pub fn right() -> Self {
        SnfFlags { right: true, ..Self::NONE }
    }
}

/// Result of `L * M * R = D` with `D` diagonal, diagonal entries `p^diag[i]`
/// for `i < rank` in ascending order and zero afterwards.
#[derive(Clone, Debug)]
pub struct Snf {
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
    pub diag: Vec<u32>,
    pub left: Option<Matrix>,
    pub left_inv: Option<Matrix>,
    pub right: Option<Matrix>,
    pub right_inv: Option<Matrix>,
}

impl Snf {
    pub fn d_matrix(&self, p: u64) -> Matrix {
        let entries: Vec<PScalar> = self.diag.iter().map(|&e| PScalar::p_power(p, e as i32)).collect();
        Matrix::diagonal(self.rows, self.cols, &entries)
    }
}

/// Smith normal form over Z_(p).
///
/// Pivot rule: the entry of minimal p-adic valuation in the remaining block,
/// ties broken by row-major position. The result is deterministic.
pub fn snf(m: &Matrix, p: u64, flags: SnfFlags) -> Result<Snf> {
    if let Some(bad) = m.entries().iter().find(|x| !x.is_local(p)) {
        return Err(Error::InvalidScalar(bad.to_string(), p));
    }
    Ok(snf_unchecked(m, p, flags))
}

pub(crate) fn snf_unchecked(m: &Matrix, p: u64, flags: SnfFlags) -> Snf {
    let (rows, cols) = m.shape();
    let mut a = m.clone();
    let mut left = flags.left.then(|| Matrix::identity(rows));
    let mut left_inv = flags.left_inv.then(|| Matrix::identity(rows));
    let mut right = flags.right.then(|| Matrix::identity(cols));
    let mut right_inv = flags.right_inv.then(|| Matrix::identity(cols));
    let mut diag = Vec::new();
    let mut floor = 0i32;
    let kmax = rows.min(cols);
    let mut k = 0;
    while k < kmax {
        // locate pivot
        let mut best: Option<(usize, usize, i32)> = None;
        'scan: for i in k..rows {
            for j in k..cols {
                let x = a.get(i, j);
                if x.is_zero() {
                    continue;
                }
                let v = x.valuation(p).unwrap();
                if best.is_none_or(|(_, _, bv)| v < bv) {
                    best = Some((i, j, v));
                    if v <= floor {
                        break 'scan;
                    }
                }
            }
        }
        let Some((pi, pj, v)) = best else { break };
        floor = v;
        if pi != k {
            a.swap_rows(k, pi);
            if let Some(l) = left.as_mut() {
                l.swap_rows(k, pi);
            }
            if let Some(li) = left_inv.as_mut() {
                li.swap_cols(k, pi);
            }
        }
        if pj != k {
            a.swap_cols(k, pj);
            if let Some(r) = right.as_mut() {
                r.swap_cols(k, pj);
            }
            if let Some(ri) = right_inv.as_mut() {
                ri.swap_rows(k, pj);
            }
        }
        let u = a.get(k, k).unit_part_inverse(p);
        if !u.is_one() {
            a.scale_row(k, &u);
            if let Some(l) = left.as_mut() {
                l.scale_row(k, &u);
            }
            if let Some(li) = left_inv.as_mut() {
                li.scale_col(k, &u.inverse());
            }
        }
        let pivot = a.get(k, k).clone();
        let pinv = pivot.inverse();
        for i in (k + 1)..rows {
            let x = a.get(i, k);
            if x.is_zero() {
                continue;
            }
            let c = -&(x * &pinv);
            a.add_row_multiple(i, k, &c);
            if let Some(l) = left.as_mut() {
                l.add_row_multiple(i, k, &c);
            }
            if let Some(li) = left_inv.as_mut() {
                li.add_col_multiple(k, i, &-&c);
            }
        }
        for j in (k + 1)..cols {
            let x = a.get(k, j);
            if x.is_zero() {
                continue;
            }
            let c = -&(x * &pinv);
            // column k is zero below the pivot, so only the pivot row changes
            a.set(k, j, PScalar::zero());
            if let Some(r) = right.as_mut() {
                r.add_col_multiple(j, k, &c);
            }
            if let Some(ri) = right_inv.as_mut() {
                ri.add_row_multiple(k, j, &-&c);
            }
        }
        diag.push(v as u32);
        k += 1;
    }
    Snf { rows, cols, rank: diag.len(), diag, left, left_inv, right, right_inv }
}

/// `M = U * D * V` with `U`, `V` invertible over Z_(p).
pub fn plocal_snf(m: &Matrix, p: u64) -> Result<(Matrix, Matrix, Matrix)> {
    let s = snf(m, p, SnfFlags { left_inv: true, right_inv: true, ..SnfFlags::NONE })?;
    let d = s.d_matrix(p);
    Ok((s.left_inv.unwrap(), d, s.right_inv.unwrap()))
}
