use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("pochhammer length negative")]
    NegativeLength,
    #[error("division by zero")]
    DivisionByZero,
    #[error("duplicate interpolation abscissa at positions {0} and {1}")]
    DuplicateNode(usize, usize),
    #[error("arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("out of contract: {0}")]
    OutOfContract(String),
    #[error("exponent overflow")]
    Overflow,
}

pub type Result<T> = std::result::Result<T, Error>;
