use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at q = 1")]
    PoleAtOne,
    #[error("q-factorial of negative argument {0}")]
    UndefinedFactorial(i64),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported Cartan type {series}{rank}")]
    InvalidType { series: char, rank: usize },
    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("loop degree k must be nonzero")]
    ZeroK,
    #[error("level must be nonzero")]
    ZeroLevel,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("element still contains a formal gamma power")]
    UnspecializedGamma,
    #[error("generator {0} is not in the primed basis")]
    NotPrimedBasis(String),
    #[error("generator {0} does not belong to this algebra")]
    ForeignGenerator(String),
    #[error("result leaves the truncation: {0}")]
    TruncationExceeded(String),
    #[error("degree {0} component is empty")]
    EmptyComponent(i64),
    #[error("weight is not in the support: {0}")]
    NotInSupport(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("invalid phi signature: {0}")]
    InvalidPhi(String),
    #[error("invalid bound: {0}")]
    InvalidBound(String),
}

pub type Result<T> = std::result::Result<T, Error>;
