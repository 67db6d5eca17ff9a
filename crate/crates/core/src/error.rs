use thiserror::Error;

/// Errors raised while constructing or analysing W(1)-modules.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("p must be a prime greater than 3 (got {0})")]
    PrimeTooSmall(u64),

    #[error("p = {p} exceeds the supported bound {bound}")]
    PrimeTooLarge { p: u64, bound: u64 },

    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("basis index e_{index} is outside -1..={max}")]
    IndexOutOfRange { index: i64, max: i64 },

    #[error("weight label {lambda} is outside 0..{p}")]
    LabelOutOfRange { lambda: u64, p: u64 },

    #[error("subspace is not invariant under e_{0}")]
    NotInvariant(i64),

    #[error("module invariant violated: {0}")]
    ModuleInvariant(String),

    #[error("weight spaces of e_0 only span {found} of {dim} dimensions")]
    IncompleteWeightDecomposition { found: usize, dim: usize },

    #[error("vector is not homogeneous")]
    NotHomogeneous,

    #[error("module carries no grading")]
    Ungraded,

    #[error("not a known simple module: {0}")]
    NotSimple(String),

    #[error("lowest-weight space of dimension {dim} exceeds the enumeration cap {cap}")]
    EnumerationBudget { dim: usize, cap: usize },

    #[error("pipeline check failed: {0}")]
    Check(String),

    #[error("pipeline stage `{0}` has not been run")]
    StageMissing(&'static str),

    #[error("unknown module selector `{0}`")]
    UnknownSelector(String),
}

pub type Result<T> = std::result::Result<T, Error>;
