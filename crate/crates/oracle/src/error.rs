use thiserror::Error;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("tolerance {tol:e} not reachable: error bound {err:e} with {terms} terms")]
    ToleranceUnreachable { err: f64, tol: f64, terms: usize },
    #[error("denominator {m} shares a factor with the level {level}")]
    NotCoprime { m: u64, level: u64 },
    #[error("character of conductor {conductor} is not primitive of conductor {want}")]
    NotPrimitive { conductor: u64, want: u64 },
    #[error("Fricke sign undetermined: {0}")]
    FrickeUndetermined(String),
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Arith(#[from] arith_core::ArithError),
    #[error(transparent)]
    Curve(#[from] ellcurve::CurveError),
    #[error(transparent)]
    Char(#[from] characters::CharError),
    #[error(transparent)]
    Mt(#[from] mazur_tate::MtError),
}

pub type Result<T> = std::result::Result<T, OracleError>;
