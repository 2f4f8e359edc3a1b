use thiserror::Error;

/// Failures surfaced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot parse group label {0:?}")]
    Parse(String),
    #[error("unsupported group {label}: {reason}")]
    Unsupported { label: String, reason: String },
    #[error("{0} requires a crystallographic group")]
    NotCrystallographic(String),
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("truncation mismatch: {0} vs {1}")]
    TruncationMismatch(usize, usize),
    #[error("series constant term is not invertible")]
    NotInvertible,
    #[error("non-integral value: {0}")]
    NonIntegral(String),
    #[error("nonzero tail beyond degree {degree} (truncation {order})")]
    NonzeroTail { degree: usize, order: usize },
    #[error("capability exceeded: {0}")]
    Capability(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
