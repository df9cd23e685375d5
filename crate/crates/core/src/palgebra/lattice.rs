//! Submodules of Z_(p)^m given by generating columns, and the subquotient
//! primitive every kernel, image, cokernel and cohomology computation uses.

use super::matrix::Matrix;
use super::module::FpModule;
use super::scalar::PScalar;
use super::snf::{snf_unchecked, SnfFlags};

/// Basis of `{x : a x = 0}` as columns.
pub fn kernel_basis(a: &Matrix, p: u64) -> Matrix {
    if a.rows() == 0 {
        return Matrix::identity(a.cols());
    }
    let s = snf_unchecked(a, p, SnfFlags::right());
    let r = s.right.unwrap();
    r.col_range(s.rank, a.cols())
}

/// Basis of the column span of `g`.
pub fn span_basis(g: &Matrix, p: u64) -> Matrix {
    if g.cols() == 0 {
        return Matrix::zeros(g.rows(), 0);
    }
    let s = snf_unchecked(g, p, SnfFlags { left_inv: true, ..SnfFlags::NONE });
    let li = s.left_inv.unwrap();
    let mut b = li.col_range(0, s.rank);
    for (i, &e) in s.diag.iter().enumerate() {
        if e > 0 {
            b.scale_col(i, &PScalar::p_power(p, e as i32));
        }
    }
    b
}

/// Some solution `x` of `a x = b` over Z_(p), column by column.
pub fn solve(a: &Matrix, b: &Matrix, p: u64) -> Option<Matrix> {
    assert_eq!(a.rows(), b.rows(), "solve: row mismatch");
    let s = snf_unchecked(a, p, SnfFlags { left: true, right: true, ..SnfFlags::NONE });
    let w = s.left.as_ref().unwrap().mul(b);
    let mut u = Matrix::zeros(s.rank, b.cols());
    for i in 0..w.rows() {
        for j in 0..b.cols() {
            let x = w.get(i, j);
            if x.is_zero() {
                continue;
            }
            if i >= s.rank {
                return None;
            }
            let q = x.div(&PScalar::p_power(p, s.diag[i] as i32));
            if !q.is_local(p) {
                return None;
            }
            u.set(i, j, q);
        }
    }
    let r = s.right.unwrap();
    Some(r.col_range(0, s.rank).mul(&u))
}

pub fn contains(span: &Matrix, x: &Matrix, p: u64) -> bool {
    if x.is_zero() {
        return true;
    }
    solve(span, x, p).is_some()
}

/// Basis of `span(a) ∩ span(b)`.
pub fn intersect(a: &Matrix, b: &Matrix, p: u64) -> Matrix {
    let k = kernel_basis(&a.hstack(&b.neg()), p);
    let top = k.row_range(0, a.cols());
    span_basis(&a.mul(&top), p)
}

/// Basis of `{x : f x ∈ span(l)}`.
pub fn preimage(f: &Matrix, l: &Matrix, p: u64) -> Matrix {
    let k = kernel_basis(&f.hstack(&l.neg()), p);
    span_basis(&k.row_range(0, f.cols()), p)
}

/// `G / R` for lattices `R ⊆ G ⊆ Z_(p)^m` in canonical form.
///
/// `reps` (m x k) lifts the canonical generators; `coords` (k x m) sends a
/// vector of `G` to its canonical coordinates (torsion rows unreduced).
#[derive(Clone, Debug)]
pub struct Subquotient {
    pub module: FpModule,
    pub reps: Matrix,
    pub coords: Matrix,
}

impl Subquotient {
    /// Canonical coordinates of the columns of `x`, reduced.
    pub fn classes(&self, x: &Matrix) -> Matrix {
        let mut c = self.coords.mul(x);
        reduce_rows(&mut c, &self.module);
        c
    }
}

pub(crate) fn reduce_rows(m: &mut Matrix, target: &FpModule) {
    let p = target.p();
    for (i, &e) in target.torsion().iter().enumerate() {
        for j in 0..m.cols() {
            let v = m.get(i, j);
            if !v.is_zero() {
                let r = v.reduce_mod_power(p, e);
                m.set(i, j, r);
            }
        }
    }
}

pub fn subquotient(g: &Matrix, r: &Matrix, p: u64) -> Subquotient {
    let m = g.rows();
    let s = snf_unchecked(g, p, SnfFlags { left: true, left_inv: true, ..SnfFlags::NONE });
    let rk = s.rank;
    let l = s.left.unwrap();
    let li = s.left_inv.unwrap();
    let mut basis = li.col_range(0, rk);
    let mut t = l.row_range(0, rk);
    for (i, &e) in s.diag.iter().enumerate() {
        if e > 0 {
            basis.scale_col(i, &PScalar::p_power(p, e as i32));
            t.scale_row(i, &PScalar::p_power(p, -(e as i32)));
        }
    }
    finish(m, basis, t, r, p)
}

/// `Z_(p)^m / span(r)`.
pub fn quotient(m: usize, r: &Matrix, p: u64) -> Subquotient {
    finish(m, Matrix::identity(m), Matrix::identity(m), r, p)
}

fn finish(_m: usize, basis: Matrix, t: Matrix, r: &Matrix, p: u64) -> Subquotient {
    let rk = basis.cols();
    let y = t.mul(r);
    debug_assert!(y.all_local(p), "relation lattice not contained in generator lattice");
    let s = snf_unchecked(&y, p, SnfFlags { left: true, left_inv: true, ..SnfFlags::NONE });
    let l2 = s.left.unwrap();
    let l2i = s.left_inv.unwrap();
    let mut sel = Vec::new();
    let mut torsion = Vec::new();
    for (i, &e) in s.diag.iter().enumerate() {
        if e > 0 {
            sel.push(i);
            torsion.push(e);
        }
    }
    sel.extend(s.rank..rk);
    let module = FpModule::new(p, rk - s.rank, torsion);
    let reps = basis.mul(&l2i.select_cols(&sel));
    let coords = l2.select_rows(&sel).mul(&t);
    Subquotient { module, reps, coords }
}
