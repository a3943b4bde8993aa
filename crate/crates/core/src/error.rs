use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not an odd prime")]
    InvalidPrime(u64),
    #[error("{value} is not {p}-integral, reduction is undefined")]
    NotIntegral { value: String, p: u64 },
    #[error("integrality violation: coefficient {coeff} of {context} is not {p}-integral")]
    IntegralityViolation { coeff: String, context: String, p: u64 },
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("coefficient rings differ")]
    RingMismatch,
    #[error("index {index} outside {lo}..={hi}")]
    IndexRange { index: usize, lo: usize, hi: usize },
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("invalid matching: {0}")]
    InvalidMatching(String),
    #[error("tableaux have different shapes")]
    ShapeMismatch,
    #[error("{m} is not in the index set for n = {n}, p = {p}")]
    NotInIndexSet { m: usize, n: usize, p: u64 },
    #[error("tableau is not in the p-class of the one-column tableau")]
    NotInClass,
    #[error("n = {n} is smaller than p = {p}")]
    TooSmall { n: usize, p: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
