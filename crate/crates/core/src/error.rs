use thiserror::Error;

/// Errors raised by the enumeration, metric and duality routines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("invalid type n={n} k0={k0} k1={k1}: need k0 + k1 < n")]
    InvalidType { n: usize, k0: usize, k1: usize },

    #[error("length {n} exceeds the supported maximum {max}")]
    LengthTooLarge { n: usize, max: usize },

    #[error("candidate index {index} out of range (type has {count} codes)")]
    IndexOutOfRange { index: u64, count: u64 },

    #[error("type n={n} k0={k0} k1={k1} has more than 2^63 candidates")]
    CountOverflow { n: usize, k0: usize, k1: usize },

    #[error("minimum distance needs at least two codewords, got {0}")]
    TooFewCodewords(usize),

    #[error("word set is not linear: {0}")]
    NotLinear(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
