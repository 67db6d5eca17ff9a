use std::cmp::Ordering;

use super::field::{FpScalar, PrimeField};
use super::matrix::FpMatrix;
use crate::error::{Error, Result};

/// A subspace of F_p^n stored by its reduced row-echelon basis.
///
/// The basis is canonical: two values describing the same set of vectors
/// compare equal entry by entry.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: FpMatrix,
    pivots: Vec<usize>,
}

/// Projection onto F^n / s in the coordinates left free by the RREF of `s`,
/// together with a right inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientMap {
    pub projection: FpMatrix,
    pub section: FpMatrix,
    /// Ambient coordinates indexing the quotient basis.
    pub complement: Vec<usize>,
}

fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

impl Subspace {
    pub fn zero(field: PrimeField, ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: FpMatrix::zeros(field, 0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: PrimeField, ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: FpMatrix::identity(field, ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Span of the standard basis vectors at `coords`.
    pub fn coordinate(field: PrimeField, ambient_dim: usize, coords: &[usize]) -> Self {
        let rows: Vec<Vec<FpScalar>> = coords
            .iter()
            .map(|&c| {
                let mut v = vec![0; ambient_dim];
                v[c] = 1;
                v
            })
            .collect();
        Self::span(field, ambient_dim, &rows)
    }

    /// Row space of `m`.
    pub fn row_space(m: &FpMatrix) -> Self {
        let r = m.rref();
        let keep: Vec<usize> = (0..r.rank).collect();
        Self {
            ambient_dim: m.cols(),
            basis: r.matrix.select_rows(&keep),
            pivots: r.pivots,
        }
    }

    /// Span of arbitrary vectors of length `ambient_dim`.
    pub fn span(field: PrimeField, ambient_dim: usize, vectors: &[Vec<FpScalar>]) -> Self {
        Self::row_space(&FpMatrix::from_row_vectors(field, ambient_dim, vectors))
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.basis.field()
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    #[inline]
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    #[inline]
    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    /// Canonical RREF basis, one vector per row.
    pub fn basis(&self) -> &FpMatrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = &[FpScalar]> {
        self.basis.row_vectors()
    }

    /// Residue of `v` after clearing every pivot coordinate of the basis.
    pub fn reduce(&self, v: &[FpScalar]) -> Result<Vec<FpScalar>> {
        check_len(self.ambient_dim, v.len())?;
        let f = self.field();
        let mut out = v.to_vec();
        for (r, &pc) in self.pivots.iter().enumerate() {
            let c = out[pc];
            if c == 0 {
                continue;
            }
            let neg = f.neg(c);
            for (o, &b) in out.iter_mut().zip(self.basis.row(r)) {
                if b != 0 {
                    *o = f.mul_add(*o, neg, b);
                }
            }
        }
        Ok(out)
    }

    pub fn contains(&self, v: &[FpScalar]) -> Result<bool> {
        Ok(self.reduce(v)?.iter().all(|&x| x == 0))
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[FpScalar]) -> Result<Option<Vec<FpScalar>>> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&c| v[c]).collect()))
    }

    /// The vector with coordinates `coords` in the canonical basis.
    pub fn combine(&self, coords: &[FpScalar]) -> Result<Vec<FpScalar>> {
        check_len(self.dim(), coords.len())?;
        let f = self.field();
        let mut out = vec![0; self.ambient_dim];
        for (r, &c) in coords.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (o, &b) in out.iter_mut().zip(self.basis.row(r)) {
                if b != 0 {
                    *o = f.mul_add(*o, c, b);
                }
            }
        }
        Ok(out)
    }

    pub fn is_subspace_of(&self, other: &Self) -> Result<bool> {
        check_len(other.ambient_dim, self.ambient_dim)?;
        for v in self.basis_vectors() {
            if !other.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        check_len(self.ambient_dim, other.ambient_dim)?;
        Ok(Self::row_space(&self.basis.vstack(&other.basis)))
    }

    /// Linear constraints cutting out the subspace: `x ∈ self` iff `A x = 0`.
    pub fn annihilator(&self) -> FpMatrix {
        kernel(&self.basis).basis.clone()
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        check_len(self.ambient_dim, other.ambient_dim)?;
        let constraints = self.annihilator().vstack(&other.annihilator());
        Ok(kernel(&constraints))
    }

    pub fn quotient_map(&self) -> QuotientMap {
        let f = self.field();
        let n = self.ambient_dim;
        let mut is_pivot = vec![false; n];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        let complement: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
        let q = complement.len();
        let mut projection = FpMatrix::zeros(f, q, n);
        let mut section = FpMatrix::zeros(f, n, q);
        for (k, &c) in complement.iter().enumerate() {
            projection.set(k, c, 1);
            section.set(c, k, 1);
            for (r, &pc) in self.pivots.iter().enumerate() {
                let entry = self.basis.get(r, c);
                if entry != 0 {
                    projection.set(k, pc, f.neg(entry));
                }
            }
        }
        QuotientMap {
            projection,
            section,
            complement,
        }
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic order on the canonical basis entries.
impl Ord for Subspace {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ambient_dim
            .cmp(&other.ambient_dim)
            .then_with(|| self.basis.data().cmp(other.basis.data()))
    }
}

/// Right null space `{x : m x = 0}`.
pub fn kernel(m: &FpMatrix) -> Subspace {
    let f = m.field();
    let r = m.rref();
    let n = m.cols();
    let mut is_pivot = vec![false; n];
    for &c in &r.pivots {
        is_pivot[c] = true;
    }
    let vectors: Vec<Vec<FpScalar>> = (0..n)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![0; n];
            v[free] = 1;
            for (row, &pc) in r.pivots.iter().enumerate() {
                v[pc] = f.neg(r.matrix.get(row, free));
            }
            v
        })
        .collect();
    Subspace::span(f, n, &vectors)
}

pub fn subspace_sum(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    a.sum(b)
}

pub fn subspace_intersect(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    a.intersect(b)
}

pub fn contains(a: &Subspace, v: &[FpScalar]) -> Result<bool> {
    a.contains(v)
}

pub fn quotient_map(ambient: usize, s: &Subspace) -> Result<QuotientMap> {
    check_len(ambient, s.ambient_dim())?;
    Ok(s.quotient_map())
}

/// Incrementally maintained RREF basis, used by spinning algorithms.
#[derive(Debug, Clone)]
pub struct EchelonBasis {
    field: PrimeField,
    ambient_dim: usize,
    /// Rows sorted by pivot column.
    rows: Vec<Vec<FpScalar>>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn new(field: PrimeField, ambient_dim: usize) -> Self {
        Self {
            field,
            ambient_dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_subspace(s: &Subspace) -> Self {
        Self {
            field: s.field(),
            ambient_dim: s.ambient_dim(),
            rows: s.basis_vectors().map(<[FpScalar]>::to_vec).collect(),
            pivots: s.pivots().to_vec(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce_in_place(&self, v: &mut [FpScalar]) {
        let f = self.field;
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = v[pc];
            if c == 0 {
                continue;
            }
            let neg = f.neg(c);
            for (o, &b) in v.iter_mut().zip(row) {
                if b != 0 {
                    *o = f.mul_add(*o, neg, b);
                }
            }
        }
    }

    /// Inserts `v`; returns true if it enlarged the span.
    pub fn insert(&mut self, v: &[FpScalar]) -> bool {
        assert_eq!(v.len(), self.ambient_dim, "vector length mismatch");
        let f = self.field;
        let mut w = v.to_vec();
        self.reduce_in_place(&mut w);
        let Some(pc) = w.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = f.inv(w[pc]);
        for x in w.iter_mut() {
            *x = f.mul(*x, inv);
        }
        for row in self.rows.iter_mut() {
            let c = row[pc];
            if c == 0 {
                continue;
            }
            let neg = f.neg(c);
            for (o, &b) in row.iter_mut().zip(&w) {
                if b != 0 {
                    *o = f.mul_add(*o, neg, b);
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < pc);
        self.rows.insert(at, w);
        self.pivots.insert(at, pc);
        true
    }

    pub fn into_subspace(self) -> Subspace {
        let basis = FpMatrix::from_row_vectors(self.field, self.ambient_dim, &self.rows);
        Subspace {
            ambient_dim: self.ambient_dim,
            basis,
            pivots: self.pivots,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> PrimeField {
        PrimeField::new(5).unwrap()
    }

    #[test]
    fn kernel_of_identity_is_zero() {
        let k = kernel(&FpMatrix::identity(f5(), 4));
        assert!(k.is_zero());
        assert_eq!(k.ambient_dim(), 4);
    }

    #[test]
    fn kernel_of_zero_map_is_everything() {
        let k = kernel(&FpMatrix::zeros(f5(), 3, 3));
        assert_eq!(k, Subspace::full(f5(), 3));
    }

    #[test]
    fn sum_is_idempotent() {
        let s = Subspace::span(f5(), 3, &[vec![1, 2, 3], vec![0, 1, 4]]);
        assert_eq!(s.sum(&s).unwrap(), s);
    }

    #[test]
    fn coordinate_axes_meet_in_zero() {
        let a = Subspace::span(f5(), 2, &[vec![1, 0]]);
        let b = Subspace::span(f5(), 2, &[vec![0, 1]]);
        assert!(a.intersect(&b).unwrap().is_zero());
    }

    #[test]
    fn quotient_by_axis() {
        let s = Subspace::span(f5(), 2, &[vec![1, 0]]);
        let q = quotient_map(2, &s).unwrap();
        assert_eq!(q.projection.shape(), (1, 2));
        assert_eq!(q.projection.mul(&q.section), FpMatrix::identity(f5(), 1));
        assert!(kernel(&q.projection) == s);
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let a = Subspace::zero(f5(), 2);
        let b = Subspace::zero(f5(), 3);
        assert_eq!(
            a.sum(&b),
            Err(Error::DimensionMismatch {
                expected: 2,
                found: 3
            })
        );
        assert!(a.contains(&[1, 2, 3]).is_err());
        assert!(quotient_map(4, &a).is_err());
    }

    #[test]
    fn coordinates_round_trip() {
        let f = PrimeField::new(7).unwrap();
        let s = Subspace::span(f, 4, &[vec![1, 2, 0, 3], vec![0, 0, 1, 5]]);
        let v = s.combine(&[3, 6]).unwrap();
        assert_eq!(s.coordinates(&v).unwrap(), Some(vec![3, 6]));
        assert_eq!(s.coordinates(&[0, 1, 0, 0]).unwrap(), None);
    }

    #[test]
    fn echelon_basis_matches_batch_rref() {
        let f = PrimeField::new(7).unwrap();
        let vs = vec![vec![0, 3, 1, 2], vec![2, 1, 0, 0], vec![2, 4, 1, 2], vec![0, 0, 0, 5]];
        let mut e = EchelonBasis::new(f, 4);
        let grew: Vec<bool> = vs.iter().map(|v| e.insert(v)).collect();
        assert_eq!(grew, vec![true, true, false, true]);
        assert_eq!(e.into_subspace(), Subspace::span(f, 4, &vs));
    }
}
