use thiserror::Error;

use crate::field::{Field, FieldError};

/// Errors raised by the library. Each variant is a distinct failure class so
/// that callers (the CLI in particular) can report them precisely.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),
    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("invalid parameter array: {0}")]
    InvalidArray(String),
    #[error("not a tridiagonal eigenvalue sequence: {0}")]
    NotTridiagonalSequence(String),
    #[error("invalid type: {0}")]
    InvalidType(String),
    #[error("characteristic constraint violated: {0}")]
    Characteristic(String),
    #[error("data not in field: {0}")]
    DataNotInField(String),
    #[error("type data does not fit the eigenvalue sequences: {0}")]
    FitFailure(String),
    #[error("alpha is undefined for type III+")]
    AlphaUndefined,
    #[error("anchor equation failed: {0}")]
    AnchorMismatch(String),
    #[error("not a Leonard system for these parameters: {0}")]
    NotLeonard(String),
    #[error("psi does not satisfy its defining equation")]
    InvalidPsi,
    #[error("this subcase needs psi but none was supplied")]
    MissingPsi,
    #[error("undefined series: {0}")]
    UndefinedSeries(String),
    #[error("identity not applicable: {0}")]
    NotApplicable(String),
    #[error("operator word does not return to the line of U0: {0}")]
    NotSplitConsistent(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
