use thiserror::Error;

/// Errors raised by the library. The CLI maps every variant to a data-error exit code.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid cyclic order: {0}")]
    InvalidCyclicOrder(String),
    #[error("invalid ballot: {0}")]
    InvalidBallot(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("ballot space mismatch: {0}")]
    SpaceMismatch(String),
    #[error("seed conflict: {0}")]
    SeedConflict(String),
    #[error("wrong number of parameters for {family}: expected {expected}, got {actual}")]
    Arity {
        family: String,
        expected: usize,
        actual: usize,
    },
    #[error("not a permutation-module character: {0}")]
    InvalidCharacter(String),
    #[error("catalog does not span the space: {0}")]
    CatalogDoesNotSpan(String),
    #[error("masking infeasible: {0}")]
    MaskingInfeasible(String),
    #[error("degree {0} exceeds the configured cap {1}")]
    DegreeCap(usize, usize),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
