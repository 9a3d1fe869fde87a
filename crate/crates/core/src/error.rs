//! Error type shared by every module.

use thiserror::Error;

/// Failures surfaced by constructors and checks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A parameter vector has repeated entries or a required nonzero value is zero.
    #[error("degenerate parameters: {0}")]
    DegenerateParameters(String),
    /// A 1-based index is outside the admissible range.
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    /// The reshuffled matrix defining the skew inverse is singular.
    #[error("operator is not skew-invertible")]
    NotSkewInvertible,
    /// A matrix that must be inverted is singular.
    #[error("singular matrix: {0}")]
    Singular(String),
    /// A documented precondition does not hold.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// A rational literal could not be parsed.
    #[error("malformed rational {0:?}")]
    MalformedRational(String),
    /// Operand dimensions disagree.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
