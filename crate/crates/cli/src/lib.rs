//! Jobs for the `mtk` binary: config resolution, the runners, and report rendering.

pub mod config;
pub mod error;
pub mod render;
pub mod run;

pub use config::{parse_job, Command, CurveInput, FieldInput, Format, JobConfig, JobFile, Overrides};
pub use error::{CliError, ErrorKind, Result, EXIT_CONFIG, EXIT_OK, EXIT_PRECISION, EXIT_VERDICT};
pub use render::{diagnostic, render};
pub use run::{leading, run, run_job, Outcome, Table, VERSION};
