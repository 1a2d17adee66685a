use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("invalid curve family: {0}")]
    InvalidFamily(String),
    #[error("no solution: {0}")]
    NoSolution(String),
    #[error("field context mismatch")]
    ContextMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero input to a valuation")]
    ZeroValuation,
    #[error("singular curve (zero discriminant)")]
    SingularCurve,
    #[error("point is not on the curve: {0}")]
    NotOnCurve(String),
    #[error("index {index} out of range for d = {d}")]
    IndexOutOfRange { index: usize, d: usize },
    #[error("curve is not nice: {0}")]
    NotNice(String),
    #[error("identity point has no coordinates")]
    IdentityPoint,
    #[error("rank deficiency: expected rank {expected}, found {found}")]
    RankDeficient { expected: usize, found: usize },
    #[error("Gram matrix is not positive semidefinite: {0}")]
    NotPsd(String),
    #[error("rank {rank} exceeds the enumeration limit {limit}")]
    RankTooLarge { rank: usize, limit: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
