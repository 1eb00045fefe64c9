use thiserror::Error;

/// Errors raised by the library. Failed hypotheses are never errors; they
/// surface as result statuses.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid surface type {0}: expected an integer in 1..=7")]
    InvalidType(i64),

    #[error("dimension mismatch: classes live on X_{left} and X_{right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("invalid index {index}: expected 1..={r}")]
    InvalidIndex { index: usize, r: usize },

    #[error("invalid multiplicity {0}: must be at least 1")]
    InvalidMultiplicity(String),

    #[error("out of regime: {0}")]
    OutOfRegime(String),

    #[error("surface type {0} is not supported here: only odd types (1, 3, 5, 7)")]
    UnsupportedType(u32),

    #[error("unsupported class shape: {0}")]
    UnsupportedShape(String),

    #[error("no feasible cell in the search box: {0}")]
    EmptyFeasible(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
