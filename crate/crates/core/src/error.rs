use thiserror::Error;

/// Errors raised by the lattice toolkit.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("mixed parity in doubled coordinates {0:?}")]
    MixedParity([i64; 4]),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("division by the zero quaternion")]
    ZeroDivisor,

    #[error("gcd of two zero quaternions is undefined")]
    ZeroGcd,

    #[error("{0} is not an odd prime")]
    NotOddPrime(i64),

    #[error("prime {0} listed more than once")]
    RepeatedPrime(i64),

    #[error("expected {expected} items, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("invalid code specification: {0}")]
    InvalidSpec(String),

    #[error("cannot parse quaternion {0:?}")]
    Parse(String),

    #[error("empty codebook")]
    EmptyCodebook,

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("i/o: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::InvalidSpec(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
