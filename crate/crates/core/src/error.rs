use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("jet is not invertible: constant term is zero")]
    NotInvertible,
    #[error("division by zero: {0}")]
    DivisionByZero(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("constraint violated: {0}")]
    ConstraintViolation(String),
    #[error("carrier relations violated: {0}")]
    CarrierViolation(String),
    #[error("argument of exp/log1p is not nilpotent: {0}")]
    NotNilpotent(String),
    #[error("matrix is singular")]
    Singular,
    #[error("too many links: {requested} requested, at most {max} for N = {n}")]
    TooManyLinks { requested: usize, max: usize, n: usize },
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("unknown formula: {0}")]
    UnknownFormula(String),
    #[error("basis mismatch: {0}")]
    BasisMismatch(String),
    #[error("unknown generator label: {0}")]
    UnknownLabel(String),
    #[error("malformed expression: {0}")]
    Malformed(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
