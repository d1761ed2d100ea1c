use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid Cartan type {0}: {1}")]
    InvalidType(String, String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("degenerate: no dual level at the critical level")]
    Critical,
    #[error("operation requires a simple root datum, got {0} factors")]
    NotSimple(usize),
    #[error("ball cap of {cap} elements exceeded")]
    BallCap { cap: usize },
    #[error("element is not in the integral Weyl group: {0}")]
    NotMember(String),
    #[error("level is not good: {0}")]
    NotGood(String),
    #[error("level must be negative: {0}")]
    NotNegative(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
