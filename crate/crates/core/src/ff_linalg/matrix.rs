use std::fmt;

use super::field::{FpScalar, PrimeField};

/// Dense row-major matrix over F_p.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<FpScalar>,
}

/// Reduced row-echelon form of a matrix together with its rank and pivot columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub matrix: FpMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl FpMatrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Self {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from already-reduced residues.
    pub fn from_vec(field: PrimeField, rows: usize, cols: usize, data: Vec<FpScalar>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must equal rows * cols");
        debug_assert!(data.iter().all(|&x| x < field.p()));
        Self {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Builds a matrix from signed integer rows, reducing every entry mod p.
    pub fn from_rows<R: AsRef<[i64]>>(field: PrimeField, rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().map(|&x| field.from_i64(x)));
        }
        Self::from_vec(field, rows.len(), cols, data)
    }

    /// Stacks residue vectors as rows.
    pub fn from_row_vectors(field: PrimeField, cols: usize, rows: &[Vec<FpScalar>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "row length must equal column count");
            data.extend_from_slice(r);
        }
        Self::from_vec(field, rows.len(), cols, data)
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    #[inline]
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> FpScalar {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: FpScalar) {
        self.data[r * self.cols + c] = self.field.reduce(value);
    }

    /// Adds `value` into entry `(r, c)`.
    #[inline]
    pub fn add_at(&mut self, r: usize, c: usize, value: FpScalar) {
        let i = r * self.cols + c;
        self.data[i] = self.field.add(self.data[i], self.field.reduce(value));
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[FpScalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> impl Iterator<Item = &[FpScalar]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn column(&self, c: usize) -> Vec<FpScalar> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn data(&self) -> &[FpScalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn nonzero_count(&self) -> usize {
        self.data.iter().filter(|&&x| x != 0).count()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c);
            }
        }
        t
    }

    pub fn scale(&self, s: FpScalar) -> Self {
        let f = self.field;
        let s = f.reduce(s);
        Self {
            data: self.data.iter().map(|&x| f.mul(x, s)).collect(),
            ..self.clone()
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.shape(), other.shape(), "shape mismatch in add");
        let f = self.field;
        Self {
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f.add(a, b))
                .collect(),
            ..self.clone()
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.shape(), other.shape(), "shape mismatch in sub");
        let f = self.field;
        Self {
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f.sub(a, b))
                .collect(),
            ..self.clone()
        }
    }

    /// Matrix product; zero entries of `self` are skipped, which keeps the
    /// sparse monomial action matrices cheap to multiply.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch in mul");
        let f = self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            let out_row = &mut out.data[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == 0 {
                    continue;
                }
                let b_row = &other.data[k * other.cols..(k + 1) * other.cols];
                for (o, &b) in out_row.iter_mut().zip(b_row) {
                    if b != 0 {
                        *o = f.mul_add(*o, a, b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[FpScalar]) -> Vec<FpScalar> {
        assert_eq!(self.cols, v.len(), "shape mismatch in mul_vec");
        let f = self.field;
        let mut out = vec![0; self.rows];
        for (j, &x) in v.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = self.data[i * self.cols + j];
                if a != 0 {
                    *o = f.mul_add(*o, a, x);
                }
            }
        }
        out
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        assert!(self.is_square(), "pow needs a square matrix");
        let n = self.rows.max(1);
        let squarings = 2 * (64 - exp.leading_zeros() as usize);
        if self.nonzero_count().saturating_mul(exp as usize) < n * n * squarings {
            // Sparse base: repeated left multiplication costs nnz * n per step.
            let mut acc = Self::identity(self.field, self.rows);
            for _ in 0..exp {
                acc = self.mul(&acc);
            }
            return acc;
        }
        let mut acc = Self::identity(self.field, self.rows);
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Kronecker product `self ⊗ other`; row `(i, k)` maps to `i * other.rows + k`.
    pub fn kronecker(&self, other: &Self) -> Self {
        let f = self.field;
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Self::zeros(f, r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if b != 0 {
                            out.data[(i * other.rows + k) * c + j * other.cols + l] = f.mul(a, b);
                        }
                    }
                }
            }
        }
        out
    }

    /// Block-diagonal matrix `diag(self, other)`.
    pub fn block_diag(&self, other: &Self) -> Self {
        let mut out = Self::zeros(
            self.field,
            self.rows + other.rows,
            self.cols + other.cols,
        );
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.data[r * out.cols + c] = self.get(r, c);
            }
        }
        for r in 0..other.rows {
            for c in 0..other.cols {
                out.data[(self.rows + r) * out.cols + self.cols + c] = other.get(r, c);
            }
        }
        out
    }

    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "column mismatch in vstack");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Self::from_vec(self.field, self.rows + other.rows, self.cols, data)
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            data.extend_from_slice(self.row(r));
        }
        Self::from_vec(self.field, rows.len(), self.cols, data)
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut out = Self::zeros(self.field, self.rows, cols.len());
        for r in 0..self.rows {
            for (k, &c) in cols.iter().enumerate() {
                out.data[r * cols.len() + k] = self.get(r, c);
            }
        }
        out
    }

    /// Gauss-Jordan elimination with leftmost-pivot, topmost-row selection.
    pub fn rref(&self) -> Rref {
        let f = self.field;
        let mut m = self.clone();
        let cols = m.cols;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            if pr != r {
                for k in 0..cols {
                    m.data.swap(pr * cols + k, r * cols + k);
                }
            }
            let inv = f.inv(m.get(r, c));
            for k in c..cols {
                let i = r * cols + k;
                m.data[i] = f.mul(m.data[i], inv);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c);
                if factor == 0 {
                    continue;
                }
                let neg = f.neg(factor);
                for k in c..cols {
                    let pivot_val = m.data[r * cols + k];
                    if pivot_val != 0 {
                        let idx = i * cols + k;
                        m.data[idx] = f.mul_add(m.data[idx], neg, pivot_val);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref {
            matrix: m,
            rank: r,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, fmt: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(fmt, "FpMatrix {}x{} over F_{} [", self.rows, self.cols, self.field.p())?;
        for r in 0..self.rows {
            writeln!(fmt, "  {:?}", self.row(r))?;
        }
        write!(fmt, "]")
    }
}
