use std::fmt;

use super::scalar::PScalar;

/// Dense row-major matrix of exact scalars.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<PScalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![PScalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, PScalar::one());
        }
        m
    }

    /// Diagonal matrix (rows x cols) with the given leading diagonal entries.
    pub fn diagonal(rows: usize, cols: usize, diag: &[PScalar]) -> Self {
        let mut m = Self::zeros(rows, cols);
        for (i, d) in diag.iter().enumerate() {
            m.set(i, i, d.clone());
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<PScalar>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data has wrong length");
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.iter().map(|&x| PScalar::from_int(x)));
        }
        Matrix { rows: r, cols: c, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &PScalar {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut PScalar {
        &mut self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: PScalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[PScalar] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[PScalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<PScalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.get(i, j);
                if !v.is_zero() {
                    t.set(j, i, v.clone());
                }
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let orow = other.row(k);
                let base = i * other.cols;
                for (j, b) in orow.iter().enumerate() {
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a * b;
                    out.data[base + j] += &prod;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.shape(), other.shape(), "matrix sum shape mismatch");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.shape(), other.shape(), "matrix difference shape mismatch");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| -a).collect() }
    }

    pub fn scale(&self, s: &PScalar) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * s).collect() }
    }

    /// `[self | other]`
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            data.extend_from_slice(self.row(i));
            data.extend_from_slice(other.row(i));
        }
        Matrix { rows: self.rows, cols, data }
    }

    /// `[self ; other]`
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend_from_slice(self.row(i));
        }
        Matrix { rows: idx.len(), cols: self.cols, data }
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.rows, idx.len());
        for i in 0..self.rows {
            for (jj, &j) in idx.iter().enumerate() {
                out.set(i, jj, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn row_range(&self, start: usize, end: usize) -> Matrix {
        Matrix {
            rows: end - start,
            cols: self.cols,
            data: self.data[start * self.cols..end * self.cols].to_vec(),
        }
    }

    pub fn col_range(&self, start: usize, end: usize) -> Matrix {
        self.select_cols(&(start..end).collect::<Vec<_>>())
    }

    /// Copy `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn put_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                let v = block.get(i, j);
                if !v.is_zero() {
                    self.set(r0 + i, c0 + j, v.clone());
                }
            }
        }
    }

    pub fn block_diag(blocks: &[&Matrix]) -> Matrix {
        let r: usize = blocks.iter().map(|b| b.rows).sum();
        let c: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(r, c);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.put_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn column_vector(v: &[PScalar]) -> Matrix {
        Matrix { rows: v.len(), cols: 1, data: v.to_vec() }
    }

    pub fn all_local(&self, p: u64) -> bool {
        self.data.iter().all(|x| x.is_local(p))
    }

    /// Row operation `row_i += c * row_k`.
    pub(crate) fn add_row_multiple(&mut self, i: usize, k: usize, c: &PScalar) {
        if c.is_zero() {
            return;
        }
        let cols = self.cols;
        for j in 0..cols {
            let v = &self.data[k * cols + j];
            if v.is_zero() {
                continue;
            }
            let t = c * v;
            self.data[i * cols + j] += &t;
        }
    }

    /// Column operation `col_j += c * col_k`.
    pub(crate) fn add_col_multiple(&mut self, j: usize, k: usize, c: &PScalar) {
        if c.is_zero() {
            return;
        }
        let cols = self.cols;
        for i in 0..self.rows {
            let v = &self.data[i * cols + k];
            if v.is_zero() {
                continue;
            }
            let t = c * v;
            self.data[i * cols + j] += &t;
        }
    }

    pub(crate) fn scale_row(&mut self, i: usize, c: &PScalar) {
        let cols = self.cols;
        for v in &mut self.data[i * cols..(i + 1) * cols] {
            if !v.is_zero() {
                *v = &*v * c;
            }
        }
    }

    pub(crate) fn scale_col(&mut self, j: usize, c: &PScalar) {
        for i in 0..self.rows {
            let v = self.get_mut(i, j);
            if !v.is_zero() {
                *v = &*v * c;
            }
        }
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let cols = self.cols;
        for j in 0..cols {
            self.data.swap(a * cols + j, b * cols + j);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let cols = self.cols;
        for i in 0..self.rows {
            self.data.swap(i * cols + a, i * cols + b);
        }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}
