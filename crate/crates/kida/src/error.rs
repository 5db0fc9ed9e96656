use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KidaError {
    #[error("additive reduction at {ell} does not stay additive (ramification index {e})")]
    AddViolated { ell: u64, e: u64 },
    #[error("cannot decide (Add) at {0}: additive and ramified at 2 or 3")]
    AddUndecided(u64),
    #[error("invalid instance: {0}")]
    Invalid(String),
    #[error("valuation reaches the precision cap of {cap} p-adic digits")]
    PrecisionExhausted { cap: u32 },
    #[error(transparent)]
    Iw(iwasawa::IwError),
    #[error(transparent)]
    Mt(mazur_tate::MtError),
    #[error(transparent)]
    Char(#[from] characters::CharError),
    #[error(transparent)]
    Curve(#[from] ellcurve::CurveError),
    #[error(transparent)]
    Sym(#[from] modsym::SymError),
}

impl From<iwasawa::IwError> for KidaError {
    fn from(e: iwasawa::IwError) -> Self {
        match e {
            iwasawa::IwError::PrecisionExhausted { cap } => KidaError::PrecisionExhausted { cap },
            e => KidaError::Iw(e),
        }
    }
}

impl From<mazur_tate::MtError> for KidaError {
    fn from(e: mazur_tate::MtError) -> Self {
        match e {
            mazur_tate::MtError::Arith(arith_core::ArithError::PrecisionExhausted { cap }) => KidaError::PrecisionExhausted { cap },
            e => KidaError::Mt(e),
        }
    }
}

impl From<arith_core::ArithError> for KidaError {
    fn from(e: arith_core::ArithError) -> Self {
        mazur_tate::MtError::Arith(e).into()
    }
}

pub type Result<T> = std::result::Result<T, KidaError>;
