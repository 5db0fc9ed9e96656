use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("bad reduction at {0}")]
    BadReduction(u64),
    #[error("l = {ell} exceeds the point-counting bound {bound}")]
    BoundExceeded { ell: u64, bound: u64 },
    #[error("reduction type at {0} must be supplied in small_prime_reduction")]
    SmallPrimeUnsupported(u64),
    #[error("model is not minimal at {0}")]
    NotMinimal(u64),
    #[error("conductor mismatch: {0}")]
    ConductorMismatch(String),
    #[error("invalid curve: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, CurveError>;
