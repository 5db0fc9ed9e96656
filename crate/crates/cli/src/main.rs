use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use kida::P1P2Convention;
use mtk::{diagnostic, render, run_job, Command, Format, Overrides};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Convention {
    Prop34,
    Thm38,
}

#[derive(Parser, Debug)]
#[command(name = "mtk", version, about = "Mazur-Tate elements, Iwasawa invariants and Kida's formula")]
struct Cli {
    #[arg(value_enum)]
    command: Command,
    /// JSON job file, or - for stdin
    job: Option<PathBuf>,
    /// catalog label, overriding the job file
    #[arg(long)]
    curve: Option<String>,
    #[arg(short, long)]
    p: Option<u64>,
    /// levels: 2, 1,3 or 1..3
    #[arg(short, long, value_parser = level_list)]
    n: Option<LevelList>,
    /// p-adic digits carried in the coefficient ring
    #[arg(long)]
    precision: Option<u32>,
    /// q-expansion length for oracle-check (default: from the conductor and --tol)
    #[arg(long)]
    qexp_bound: Option<usize>,
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long)]
    sturm_override: Option<u64>,
    #[arg(long, value_enum)]
    p1p2_convention: Option<Convention>,
}

#[derive(Debug, Clone)]
struct LevelList(Vec<u32>);

fn level_list(s: &str) -> Result<LevelList, String> {
    mtk::config::parse_levels(s).map(LevelList).map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => e.exit(),
        Err(e) => {
            let msg = e.render().to_string();
            let err = mtk::CliError::config(msg.lines().next().unwrap_or("").trim_start_matches("error: ").to_string());
            eprint!("{}", diagnostic(None, &err));
            return ExitCode::from(err.exit_code() as u8);
        }
    };
    let text = match &cli.job {
        None => None,
        Some(path) => {
            let mut s = String::new();
            let res = if path.as_os_str() == "-" {
                std::io::stdin().read_to_string(&mut s).map(|_| ())
            } else {
                std::fs::read_to_string(path).map(|t| s = t)
            };
            if let Err(e) = res {
                let err = mtk::CliError::config(format!("{}: {e}", path.display()));
                eprint!("{}", diagnostic(None, &err));
                return ExitCode::from(err.exit_code() as u8);
            }
            Some(s)
        }
    };
    let o = Overrides {
        curve: cli.curve,
        p: cli.p,
        n: cli.n.map(|l| l.0).unwrap_or_default(),
        precision: cli.precision,
        qexp_bound: cli.qexp_bound,
        tol: cli.tol,
        seed: cli.seed,
        format: Some(cli.format),
        sturm_override: cli.sturm_override,
        p1p2_convention: cli.p1p2_convention.map(|c| match c {
            Convention::Prop34 => P1P2Convention::Prop34,
            Convention::Thm38 => P1P2Convention::Thm38,
        }),
    };
    match run_job(cli.command, text.as_deref(), o) {
        Ok(out) => {
            print!("{}", render(&out, cli.format));
            ExitCode::from(out.exit as u8)
        }
        Err((cfg, e)) => {
            eprint!("{}", diagnostic(cfg.as_ref(), &e));
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
