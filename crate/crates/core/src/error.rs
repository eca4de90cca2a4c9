use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition {parts:?}: {reason}")]
    InvalidPartition {
        parts: Vec<usize>,
        reason: &'static str,
    },

    #[error("partition sizes differ: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("invalid connection set for n = {n}: {reason}")]
    InvalidConnectionSet { n: usize, reason: String },

    #[error("cycle length {k} out of range 2..={n}")]
    CycleLengthOutOfRange { n: usize, k: usize },

    #[error("shape {shape} is not a partition at n = {n}")]
    ShapeUndefined { shape: &'static str, n: usize },

    #[error("n = {n} is outside the classified range (n >= 7)")]
    OutOfTheoremRange { n: usize },

    #[error("oracle refuses n = {n}: limit is {limit} (raise it explicitly to override)")]
    OracleLimit { n: usize, limit: usize },

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
