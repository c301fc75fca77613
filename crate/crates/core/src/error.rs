use thiserror::Error;

/// Errors raised by state construction and evaluation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("physical parameters differ between operands")]
    ParamsMismatch,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("validation error: {0}")]
    Validation(String),

    #[error("state is not normalized: <psi, psi> = {norm}")]
    NotNormalized { norm: f64 },

    #[error("degree {degree} exceeds the configured cap {cap}")]
    DegreeCap { degree: usize, cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
