//! Exact dense linear algebra over F_p with canonical (fully reduced) normal forms.
//!
//! Every routine is deterministic: pivots are chosen leftmost column first,
//! topmost row first, so equal subspaces always get bit-identical bases.

mod field;
mod matrix;
mod subspace;

pub use field::{is_prime, FpScalar, PrimeField, MAX_MODULUS};
pub use matrix::{FpMatrix, Rref};
pub use subspace::{
    contains, kernel, quotient_map, subspace_intersect, subspace_sum, EchelonBasis, QuotientMap,
    Subspace,
};

/// Reduced row-echelon form, rank and pivot columns of `m`.
pub fn rref(m: &FpMatrix) -> Rref {
    m.rref()
}
