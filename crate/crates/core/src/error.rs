use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("polynomials over different variables: {0} vs {1}")]
    VariableMismatch(String, String),
    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,
    #[error("division by zero")]
    DivisionByZero,
    #[error("n must be at least 2, got {0}")]
    InvalidN(i64),
    #[error("invalid two-bridge normal form ({p}, {q})")]
    InvalidNormalForm { p: u64, q: u64 },
    #[error("{what} index {index} out of range (have {len})")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        len: usize,
    },
    #[error("negative index {0}")]
    NegativeIndex(i64),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
