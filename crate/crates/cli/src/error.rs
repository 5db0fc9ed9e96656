use serde::Serialize;
use thiserror::Error;

/// Exit statuses.
pub const EXIT_OK: i32 = 0;
pub const EXIT_VERDICT: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_PRECISION: i32 = 3;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ErrorKind {
    Config,
    Precision,
}

#[derive(Debug, Clone, Error, Serialize)]
#[error("{message}")]
pub struct CliError {
    pub kind: ErrorKind,
    /// the library error variant, when there is one
    pub variant: String,
    pub message: String,
}

impl CliError {
    pub fn config(msg: impl Into<String>) -> Self {
        CliError { kind: ErrorKind::Config, variant: "config".into(), message: msg.into() }
    }

    pub fn precision(source: &str, msg: impl Into<String>) -> Self {
        CliError { kind: ErrorKind::Precision, variant: source.into(), message: msg.into() }
    }

    pub fn exit_code(&self) -> i32 {
        match self.kind {
            ErrorKind::Config => EXIT_CONFIG,
            ErrorKind::Precision => EXIT_PRECISION,
        }
    }
}

fn variant<E: std::fmt::Debug>(e: &E) -> String {
    let s = format!("{e:?}");
    s.split(|c: char| !c.is_alphanumeric()).next().unwrap_or("").to_string()
}

fn wrap<E: std::fmt::Debug + std::fmt::Display>(e: E, precision: bool) -> CliError {
    let kind = if precision { ErrorKind::Precision } else { ErrorKind::Config };
    CliError { kind, variant: variant(&e), message: e.to_string() }
}

fn arith_precision(e: &arith_core::ArithError) -> bool {
    matches!(e, arith_core::ArithError::PrecisionExhausted { .. })
}

fn mt_precision(e: &mazur_tate::MtError) -> bool {
    use mazur_tate::MtError::*;
    match e {
        CoefficientDrift { .. } | DescentResidual { .. } => true,
        Arith(a) => arith_precision(a),
        _ => false,
    }
}

impl From<arith_core::ArithError> for CliError {
    fn from(e: arith_core::ArithError) -> Self {
        let p = arith_precision(&e);
        wrap(e, p)
    }
}

impl From<mazur_tate::MtError> for CliError {
    fn from(e: mazur_tate::MtError) -> Self {
        let p = mt_precision(&e);
        wrap(e, p)
    }
}

impl From<iwasawa::IwError> for CliError {
    fn from(e: iwasawa::IwError) -> Self {
        let p = match &e {
            iwasawa::IwError::PrecisionExhausted { .. } => true,
            iwasawa::IwError::Mt(m) => mt_precision(m),
            iwasawa::IwError::Arith(a) => arith_precision(a),
            _ => false,
        };
        wrap(e, p)
    }
}

impl From<kida::KidaError> for CliError {
    fn from(e: kida::KidaError) -> Self {
        let p = match &e {
            kida::KidaError::PrecisionExhausted { .. } => true,
            kida::KidaError::Mt(m) => mt_precision(m),
            _ => false,
        };
        wrap(e, p)
    }
}

impl From<oracle::OracleError> for CliError {
    fn from(e: oracle::OracleError) -> Self {
        use oracle::OracleError::*;
        let p = match &e {
            ToleranceUnreachable { .. } | FrickeUndetermined(_) => true,
            Arith(a) => arith_precision(a),
            Mt(m) => mt_precision(m),
            _ => false,
        };
        wrap(e, p)
    }
}

impl From<modsym::SymError> for CliError {
    fn from(e: modsym::SymError) -> Self {
        wrap(e, false)
    }
}

impl From<ellcurve::CurveError> for CliError {
    fn from(e: ellcurve::CurveError) -> Self {
        wrap(e, false)
    }
}

impl From<characters::CharError> for CliError {
    fn from(e: characters::CharError) -> Self {
        wrap(e, false)
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
