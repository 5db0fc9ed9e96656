use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymError {
    #[error("eigenspace has dimension {0}, expected 2")]
    NotRationalNewform(usize),
    #[error("curve conductor {curve} does not match level {level}")]
    LevelMismatch { curve: u64, level: u64 },
    #[error("sign eigenspace {sign:+} has dimension {dim}")]
    SignSplit { sign: i8, dim: usize },
    #[error(transparent)]
    Curve(#[from] ellcurve::CurveError),
}

pub type Result<T> = std::result::Result<T, SymError>;
