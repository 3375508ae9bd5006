use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A shape that is not a partition or skew shape, e.g. a negative
    /// repetition count or an inner shape that does not fit.
    #[error("degenerate shape: {0}")]
    Degenerate(String),
    #[error("parse error: {0}")]
    Parse(String),
    /// The inputs fall outside the hypotheses of a positivity check.
    #[error("inapplicable: {0}")]
    Inapplicable(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("coefficients must be honest (Schur positive)")]
    NotHonest,
    #[error("use Pieri: the hook product formula needs a + b >= 1")]
    UsePieri,
    #[error("data file: {0}")]
    Data(String),
}

pub type Result<T> = std::result::Result<T, Error>;
