use thiserror::Error;

/// Errors reported by every engine in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("exponent vector has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("variable counts differ: {0} vs {1}")]
    VariableMismatch(usize, usize),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("twist e = {0} is below -1; that regime is not supported")]
    TwistOutOfRange(i64),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invariant breach: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
