use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MtError {
    #[error("character of conductor {conductor} does not fit level p^{{n+1}} M = {modulus}")]
    ConductorMismatch { conductor: u64, modulus: u64 },
    #[error("psi({0}) = 0")]
    ConductorError(u64),
    #[error("l = {0} must be prime to pM")]
    BadAuxiliaryPrime(u64),
    #[error("descent remainder at T^{index} is nonzero")]
    DescentResidual { index: usize },
    #[error("descended coefficient at S^{index} is not in Z_p")]
    CoefficientDrift { index: usize },
    #[error("vertical relation fails in every index convention")]
    NoConventionMatches,
    #[error("invalid parameter: {0}")]
    Invalid(String),
    #[error(transparent)]
    Arith(#[from] arith_core::ArithError),
    #[error(transparent)]
    Char(#[from] characters::CharError),
}

pub type Result<T> = std::result::Result<T, MtError>;
