use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IwError {
    #[error("valuation reaches the precision cap of {cap} p-adic digits")]
    PrecisionExhausted { cap: u32 },
    #[error("invalid parameter: {0}")]
    Invalid(String),
    #[error(transparent)]
    Mt(mazur_tate::MtError),
    #[error(transparent)]
    Arith(arith_core::ArithError),
}

impl From<arith_core::ArithError> for IwError {
    fn from(e: arith_core::ArithError) -> Self {
        match e {
            arith_core::ArithError::PrecisionExhausted { cap } => IwError::PrecisionExhausted { cap },
            e => IwError::Arith(e),
        }
    }
}

impl From<mazur_tate::MtError> for IwError {
    fn from(e: mazur_tate::MtError) -> Self {
        match e {
            mazur_tate::MtError::Arith(a) => a.into(),
            e => IwError::Mt(e),
        }
    }
}

pub type Result<T> = std::result::Result<T, IwError>;
