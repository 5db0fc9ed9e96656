use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharError {
    #[error("{0} is not a unit modulo {1}")]
    NotSubgroup(u64, u64),
    #[error("character set is not closed under multiplication")]
    NotClosed,
    #[error("exponent vector has length {got}, expected {want}")]
    BadExponents { got: usize, want: usize },
    #[error("invalid field description: {0}")]
    Invalid(String),
    #[error(transparent)]
    Arith(#[from] arith_core::ArithError),
}

pub type Result<T> = std::result::Result<T, CharError>;
