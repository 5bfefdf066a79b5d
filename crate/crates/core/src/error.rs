use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero vector has no primitive representative")]
    ZeroVector,

    #[error("polytope unbounded")]
    Unbounded,

    #[error("polytope is not full-dimensional")]
    NotFullDimensional,

    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("dilation factor must be positive, got {0}")]
    NonPositiveScale(String),

    #[error("divisor not Cartier")]
    NotCartier,

    #[error("F-signature defined on the ample cone; use boundary_limit for nef classes")]
    NotAmple,

    #[error("divisor must be integral: {0}")]
    NotIntegral(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("enumeration budget exceeded: {predicted} candidate points > budget {budget}")]
    BudgetExceeded { predicted: u128, budget: u128 },

    #[error("integer overflow during lattice enumeration")]
    Overflow,

    #[error("extension defined on non-zero classes")]
    ZeroClass,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("invalid fan: {0}")]
    InvalidFan(String),

    #[error("basis does not span the class group: {0}")]
    DeficientBasis(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
