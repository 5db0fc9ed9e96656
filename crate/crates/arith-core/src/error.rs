use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("valuation reaches the precision cap of {cap} p-adic digits")]
    PrecisionExhausted { cap: u32 },
    #[error("valuation of zero requested")]
    ZeroInput,
    #[error("{value} is not a unit modulo {p}")]
    NotAUnit { value: i64, p: u64 },
    #[error("rational {0} is not p-integral")]
    NonIntegral(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, ArithError>;
