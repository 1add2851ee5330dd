use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("field mismatch: expected {expected}, found {found}")]
    FieldMismatch { expected: String, found: String },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("element is not invertible")]
    NotInvertible,
    #[error("evaluation at zero")]
    ZeroPoint,
    #[error("radical tower overflow: at most {max} primes may be adjoined")]
    TowerOverflow { max: usize },
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("check failed: {0}")]
    CheckFailed(String),
    #[error("no normal form found within {bound} letters")]
    NotFound { bound: usize },
    #[error("budget exceeded: {0}")]
    Budget(String),
}

pub type Result<T> = std::result::Result<T, Error>;
