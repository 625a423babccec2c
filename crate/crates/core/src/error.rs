use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus must be a positive odd integer, got {0}")]
    InvalidModulus(String),
    #[error("valuation of zero is undefined")]
    ZeroValuation,
    #[error("{0} is not prime")]
    NotPrime(String),
    #[error("{0} must be even")]
    OddValue(String),
    #[error("{0} is a perfect square")]
    PerfectSquare(u64),
    #[error("{0} is not squarefree")]
    NotSquarefree(i64),
    #[error("inconsistent Pell data: {0}")]
    InconsistentPell(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("({x}, {y}) does not satisfy the equation")]
    NotASolution { x: u32, y: u32 },
    #[error("certified enumeration unavailable: {0}")]
    CertificationUnavailable(String),
    #[error("record does not satisfy its equation: {0}")]
    FalseRecord(String),
    #[error("fixture error: {0}")]
    Fixture(String),
}

pub type Result<T> = std::result::Result<T, Error>;
