//! Shared error type for the whole crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Exact division of rational functions left a nonzero remainder.
    /// When a series is provably a polynomial, this signals an
    /// implementation bug upstream, not bad input.
    #[error("rational function is not a polynomial (division left a remainder)")]
    NonPolynomialResult,

    #[error("division by the zero polynomial")]
    ZeroDenominator,

    #[error("power-series expansion needs a denominator with nonzero constant term")]
    ZeroConstantTerm,

    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("q-term is undefined at k = 0")]
    ZeroCycleLength,

    #[error("partition {0} does not fit (|lambda| > n)")]
    PartitionTooLarge(String),

    #[error("complement sign is undefined: no embeddings")]
    UndefinedSign,

    #[error("Stirling index out of range: ({0}, {1})")]
    StirlingIndex(u32, u32),

    #[error("group of order {order} exceeds the enumeration budget {cap}; raise --budget")]
    BudgetExceeded { order: u128, cap: u128 },

    #[error("series has a negative coefficient {coeff} at degree {degree}")]
    NegativeCoefficient { degree: usize, coeff: String },

    #[error("series has a non-integer coefficient {coeff} at degree {degree}")]
    NonIntegerCoefficient { degree: usize, coeff: String },

    #[error("Weyl element rank {found} does not match expected rank {expected}")]
    RankMismatch { expected: usize, found: usize },

    #[error("unsupported group/operation combination: {0}")]
    Unsupported(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unknown reference-data key: {0}")]
    UnknownKey(String),

    #[error("reference data failed validation: {0}")]
    ValidationFailure(String),
}

pub type Result<T> = std::result::Result<T, Error>;
