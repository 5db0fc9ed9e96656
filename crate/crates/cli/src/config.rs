//! Job files, command-line overrides and the normalized config echoed in every report.

use characters::{AbelianFieldDesc, CharGroup, CharSpec, DirichletChar, FieldSpec};
use ellcurve::{CurveSpec, ECurve};
use kida::{P1P2Convention, Subject};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Space,
    Theta,
    Invariants,
    Kida,
    Tower,
    Signed,
    OracleCheck,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Tsv,
    Text,
}

/// A catalog label or a full curve record.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum CurveInput {
    Label(String),
    Spec(CurveSpec),
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PrimeCyclic {
    pub ell: u64,
    pub degree: u64,
}

/// "Q", "Q_(k)", {"prime_cyclic": {ell, degree}}, or a subgroup / character list.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum FieldInput {
    Named(String),
    PrimeCyclic { prime_cyclic: PrimeCyclic },
    Spec(FieldSpec),
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum Levels {
    One(u32),
    Many(Vec<u32>),
    /// "a..b", inclusive
    Range(String),
}

impl Levels {
    fn to_vec(&self) -> Result<Vec<u32>> {
        match self {
            Levels::One(n) => Ok(vec![*n]),
            Levels::Many(v) => Ok(v.clone()),
            Levels::Range(s) => parse_levels(s),
        }
    }
}

/// Comma separated levels and inclusive ranges: "2", "1,3", "1..3", "1..=3".
pub fn parse_levels(s: &str) -> Result<Vec<u32>> {
    let bad = || CliError::config(format!("levels {s:?}: expected e.g. 2, 1,3 or 1..3"));
    let mut out = vec![];
    for part in s.split(',').map(str::trim) {
        match part.split_once("..") {
            Some((a, b)) => {
                let a: u32 = a.trim().parse().map_err(|_| bad())?;
                let b: u32 = b.trim_start_matches('=').trim().parse().map_err(|_| bad())?;
                if a > b {
                    return Err(bad());
                }
                out.extend(a..=b);
            }
            None => out.push(part.parse().map_err(|_| bad())?),
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobFile {
    pub command: Option<Command>,
    pub curve: Option<CurveInput>,
    /// same as `curve` with subject = eigenform
    pub eigenform: Option<CurveInput>,
    pub p: Option<u64>,
    pub n: Option<Levels>,
    /// tame level M of Theta^M; defaults to the tame conductor of psi
    pub tame: Option<u64>,
    pub psi: Option<CharSpec>,
    /// auxiliary primes for the transition check
    pub ell: Option<Vec<u64>>,
    #[serde(rename = "K", alias = "k")]
    pub k: Option<FieldInput>,
    #[serde(rename = "L", alias = "l")]
    pub l: Option<FieldInput>,
    #[serde(rename = "M", alias = "m")]
    pub m: Option<FieldInput>,
    pub precision: Option<u32>,
    pub qexp_bound: Option<usize>,
    pub tol: Option<f64>,
    pub seed: Option<u64>,
    pub sturm_override: Option<u64>,
    pub p1p2_convention: Option<P1P2Convention>,
}

/// Flags given on the command line; each overrides the job file.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub curve: Option<String>,
    pub p: Option<u64>,
    pub n: Vec<u32>,
    pub precision: Option<u32>,
    pub qexp_bound: Option<usize>,
    pub tol: Option<f64>,
    pub seed: Option<u64>,
    pub format: Option<Format>,
    pub sturm_override: Option<u64>,
    pub p1p2_convention: Option<P1P2Convention>,
}

pub const DEFAULT_TOL: f64 = 1e-6;

/// Everything a run depends on, with defaults filled in.
#[derive(Debug, Clone, Serialize)]
pub struct JobConfig {
    pub command: Command,
    pub curve: CurveSpec,
    pub subject: Subject,
    pub p: u64,
    pub n: Vec<u32>,
    pub tame: u64,
    pub psi: CharSpec,
    pub ell: Vec<u64>,
    #[serde(rename = "K")]
    pub k: Option<FieldSpec>,
    #[serde(rename = "L")]
    pub l: Option<FieldSpec>,
    #[serde(rename = "M")]
    pub m: Option<FieldSpec>,
    pub precision: u32,
    /// None: chosen per conductor from tol
    pub qexp_bound: Option<usize>,
    pub tol: f64,
    pub seed: u64,
    pub format: Format,
    pub sturm_override: Option<u64>,
    pub p1p2_convention: P1P2Convention,
}

pub fn parse_job(text: &str) -> Result<JobFile> {
    serde_json::from_str(text).map_err(|e| CliError::config(format!("job file: {e}")))
}

fn curve_from(c: &CurveInput) -> Result<ECurve> {
    match c {
        CurveInput::Label(s) => ellcurve::by_label(s).ok_or_else(|| CliError::config(format!("unknown curve label {s}"))),
        CurveInput::Spec(spec) => Ok(ECurve::from_spec(spec)?),
    }
}

pub fn field_group(f: &FieldInput, p: u64) -> Result<CharGroup> {
    match f {
        FieldInput::Named(s) => {
            let t = s.trim();
            if t == "Q" {
                return Ok(CharGroup::trivial());
            }
            let k = t
                .strip_prefix("Q_(")
                .and_then(|r| r.strip_suffix(')'))
                .and_then(|k| k.parse::<u32>().ok())
                .ok_or_else(|| CliError::config(format!("field name {s:?}: expected Q or Q_(k)")))?;
            Ok(AbelianFieldDesc::q_layer(p, k)?.group)
        }
        FieldInput::PrimeCyclic { prime_cyclic: c } => Ok(AbelianFieldDesc::prime_cyclic(c.ell, c.degree, p)?.group),
        FieldInput::Spec(s) => Ok(CharGroup::from_spec(s)?),
    }
}

impl JobConfig {
    pub fn resolve(cmd: Command, job: JobFile, o: Overrides) -> Result<(JobConfig, ECurve)> {
        if let Some(c) = job.command {
            if c != cmd {
                return Err(CliError::config(format!("job file is for {c:?}, not {cmd:?}")));
            }
        }
        let (input, subject) = match (&job.curve, &job.eigenform) {
            (Some(_), Some(_)) => return Err(CliError::config("give either curve or eigenform, not both")),
            (Some(c), None) => (Some(c.clone()), Subject::Curve),
            (None, Some(c)) => (Some(c.clone()), Subject::Eigenform),
            (None, None) => (None, Subject::Curve),
        };
        let input = match o.curve {
            Some(l) => CurveInput::Label(l),
            None => input.ok_or_else(|| CliError::config("no curve given"))?,
        };
        let curve = curve_from(&input)?;
        let p = o.p.or(job.p).ok_or_else(|| CliError::config("no prime p given"))?;
        if p < 3 || !arith_core::numth::is_prime(p) {
            return Err(CliError::config(format!("p = {p} must be an odd prime")));
        }
        let n = if !o.n.is_empty() {
            o.n
        } else {
            job.n.as_ref().map(Levels::to_vec).transpose()?.unwrap_or_else(|| default_levels(cmd))
        };
        let psi = match &job.psi {
            Some(s) => DirichletChar::from_spec(s)?,
            None => DirichletChar::trivial(),
        };
        let tame = job.tame.unwrap_or_else(|| psi.tame_conductor(p));
        let norm = |f: &Option<FieldInput>| -> Result<Option<FieldSpec>> { f.as_ref().map(|f| Ok(field_group(f, p)?.to_spec())).transpose() };
        let cfg = JobConfig {
            command: cmd,
            curve: curve.to_spec(),
            subject,
            p,
            n,
            tame,
            psi: psi.to_spec(),
            ell: job.ell.clone().unwrap_or_default(),
            k: norm(&job.k)?,
            l: norm(&job.l)?,
            m: norm(&job.m)?,
            precision: o.precision.or(job.precision).unwrap_or(arith_core::DEFAULT_PRECISION),
            qexp_bound: o.qexp_bound.or(job.qexp_bound),
            tol: o.tol.or(job.tol).unwrap_or(DEFAULT_TOL),
            seed: o.seed.or(job.seed).unwrap_or(0),
            format: o.format.unwrap_or_default(),
            sturm_override: o.sturm_override.or(job.sturm_override),
            p1p2_convention: o.p1p2_convention.or(job.p1p2_convention).unwrap_or_default(),
        };
        cfg.check()?;
        Ok((cfg, curve))
    }

    fn check(&self) -> Result<()> {
        if self.precision == 0 {
            return Err(CliError::config("precision must be positive"));
        }
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(CliError::config("tol must be a positive number"));
        }
        if self.n.is_empty() {
            return Err(CliError::config("empty level list"));
        }
        let needs_fields = matches!(self.command, Command::Kida | Command::Tower);
        if needs_fields && self.l.is_none() {
            return Err(CliError::config("field L is required"));
        }
        if self.command == Command::Tower && (self.k.is_none() || self.m.is_none()) {
            return Err(CliError::config("tower needs M, K and L"));
        }
        Ok(())
    }

    pub fn psi(&self) -> Result<DirichletChar> {
        Ok(DirichletChar::from_spec(&self.psi)?)
    }

    /// The field, or Q when absent.
    pub fn field(&self, f: &Option<FieldSpec>) -> Result<AbelianFieldDesc> {
        let g = match f {
            Some(s) => CharGroup::from_spec(s)?,
            None => CharGroup::trivial(),
        };
        Ok(AbelianFieldDesc::new(g, self.p))
    }
}

fn default_levels(cmd: Command) -> Vec<u32> {
    match cmd {
        Command::Signed => vec![1, 2, 3],
        Command::Kida | Command::Tower => vec![2],
        _ => vec![1],
    }
}
