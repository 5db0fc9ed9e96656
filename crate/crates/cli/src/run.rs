//! One job in, one report out.

use arith_core::{LocalElem, TnTable};
use ellcurve::ECurve;
use iwasawa::{check_transition, theta_invariants, InvariantPair, TransitionVerdict};
use kida::{signed_growth_check, verify_kida, verify_tower_consistency, KidaInstance, Verdict};
use mazur_tate::{check_conductor, ring_for, theta_raw, twist};
use modsym::{isolate_eigensymbol, sturm_bound, EigenSymbol, ManinSpace, Sign};
use oracle::{calibrate, check_interpolation, fricke_sign, QExpansion};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::config::{Command, JobConfig};
use crate::error::{CliError, Result, EXIT_OK, EXIT_VERDICT};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Rows for the tsv and text renderers.
#[derive(Debug, Clone, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    fn new(cols: &[&str]) -> Self {
        Table { header: cols.iter().map(|s| s.to_string()).collect(), rows: vec![] }
    }

    fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub config: JobConfig,
    pub results: Value,
    pub table: Table,
    pub exit: i32,
}

impl Outcome {
    pub fn report(&self) -> Value {
        json!({
            "version": VERSION,
            "config": self.config,
            "exit_code": self.exit,
            "results": self.results,
        })
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

fn opt<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map_or_else(|| "-".to_string(), |v| v.to_string())
}

fn mu_str(i: &InvariantPair) -> String {
    opt(&i.mu)
}

fn symbol(cfg: &JobConfig, curve: &ECurve) -> Result<EigenSymbol> {
    let space = ManinSpace::new(curve.conductor);
    Ok(isolate_eigensymbol(&space, curve, cfg.p, cfg.sturm_override)?)
}

pub fn run(cfg: JobConfig, curve: &ECurve) -> Result<Outcome> {
    let sym = symbol(&cfg, curve)?;
    let (results, table, exit) = match cfg.command {
        Command::Space => space(&cfg, &sym)?,
        Command::Theta => theta(&cfg, &sym)?,
        Command::Invariants => invariants(&cfg, &sym)?,
        Command::Kida => kida_cmd(&cfg, &sym)?,
        Command::Tower => tower(&cfg, &sym)?,
        Command::Signed => signed(&cfg, &sym)?,
        Command::OracleCheck => oracle_check(&cfg, &sym)?,
    };
    Ok(Outcome { config: cfg, results, table, exit })
}

type Step = (Value, Table, i32);

fn space(cfg: &JobConfig, sym: &EigenSymbol) -> Result<Step> {
    let n = sym.space.n;
    let mut a = vec![];
    for l in arith_core::numth::primes_up_to(30) {
        a.push((l, sym.curve.a_ell(l)?));
    }
    let v = json!({
        "level": n,
        "dim": sym.space.dim(),
        "cuspidal_dim": sym.space.cuspidal_dim(),
        "sturm_bound": cfg.sturm_override.unwrap_or_else(|| sturm_bound(n)),
        "hecke_primes": sym.hecke_primes,
        "plus_scale": sym.plus_scale.to_string(),
        "minus_scale": sym.minus_scale.to_string(),
        "phi_plus_at_0": sym.eval(0, 1, Sign::Plus),
        "min_valuation_plus": sym.min_valuation(Sign::Plus),
        "min_valuation_minus": sym.min_valuation(Sign::Minus),
        "a_ell": a,
    });
    let mut t = Table::new(&["key", "value"]);
    for key in ["level", "dim", "cuspidal_dim", "sturm_bound", "plus_scale", "minus_scale", "phi_plus_at_0", "min_valuation_plus", "min_valuation_minus"] {
        let s = match &v[key] {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        };
        t.push(vec![key.into(), s]);
    }
    Ok((v, t, EXIT_OK))
}

/// (valuation, leading digits over the residue field) of a coefficient; None when zero to precision.
pub fn leading(x: &LocalElem) -> Option<(String, Vec<u64>)> {
    let r = &x.ring;
    let (f, e, p) = (r.f, r.e, r.p);
    let c = x.coeffs();
    let mut best: Option<(u64, usize, u32)> = None;
    for j in 0..e {
        for i in 0..f {
            let a = c[i * e + j];
            if a == 0 {
                continue;
            }
            let k = arith_core::numth::val(a, p);
            let tot = k as u64 * e as u64 + j as u64;
            if best.is_none_or(|b| tot < b.0) {
                best = Some((tot, j, k));
            }
        }
    }
    let (_, j, k) = best?;
    let v = x.val().ok()?;
    let pk = p.pow(k);
    let digits = (0..f).map(|i| c[i * e + j] / pk % p).collect();
    Some((v.to_string(), digits))
}

fn poly_string(coeffs: &[LocalElem]) -> String {
    let mut terms = vec![];
    for (i, c) in coeffs.iter().enumerate() {
        let mono = match i {
            0 => String::new(),
            1 => "T".into(),
            _ => format!("T^{i}"),
        };
        let r = &c.ring;
        let body = if r.f * r.e == 1 {
            let q = r.q as i128;
            let mut a = c.coeffs()[0] as i128;
            if a > q / 2 {
                a -= q;
            }
            if a == 0 {
                continue;
            }
            a.to_string()
        } else {
            match leading(c) {
                None => continue,
                Some((v, d)) => format!("[{v}:{d:?}]"),
            }
        };
        terms.push(if mono.is_empty() { body } else { format!("{body}*{mono}") });
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn theta(cfg: &JobConfig, sym: &EigenSymbol) -> Result<Step> {
    let psi = cfg.psi()?;
    let p = cfg.p;
    let mut out = vec![];
    let mut t = Table::new(&["n", "i", "valuation", "digits"]);
    for &n in &cfg.n {
        check_conductor(&psi, p, n, cfg.tame)?;
        let th = theta_raw(sym, n, cfg.tame)?;
        let tab = TnTable::new(p, n, cfg.tame)?;
        let ring = ring_for(p, n, std::slice::from_ref(&psi), cfg.precision)?;
        let f = twist(&th, &psi, &tab, &ring)?;
        let coeffs: Vec<Value> = f.coeffs.iter().map(|c| to_value(&leading(c))).collect();
        for (i, c) in f.coeffs.iter().enumerate() {
            let (v, d) = leading(c).map_or(("-".to_string(), "-".to_string()), |(v, d)| (v, format!("{d:?}")));
            t.push(vec![n.to_string(), i.to_string(), v, d]);
        }
        let inv = theta_invariants(&th, &psi, cfg.precision)?;
        let group: Vec<(u64, i64)> = th.units.iter().copied().zip(th.values.iter().copied()).collect();
        out.push(json!({
            "n": n,
            "tame": cfg.tame,
            "modulus": th.modulus,
            "group_coefficients": group,
            "coefficients": coeffs,
            "polynomial": poly_string(&f.coeffs),
            "invariants": inv,
        }));
    }
    Ok((Value::Array(out), t, EXIT_OK))
}

fn invariants(cfg: &JobConfig, sym: &EigenSymbol) -> Result<Step> {
    let psi = cfg.psi()?;
    let mut out = vec![];
    let mut exit = EXIT_OK;
    let mut t = Table::new(&["n", "ell", "mu", "lambda", "predicted_jump", "verdict"]);
    let levels: Vec<Result<_>> = cfg
        .n
        .par_iter()
        .map(|&n| {
            check_conductor(&psi, cfg.p, n, cfg.tame)?;
            let th = theta_raw(sym, n, cfg.tame)?;
            let inv = theta_invariants(&th, &psi, cfg.precision)?;
            let trans: Vec<Result<_>> = cfg.ell.par_iter().map(|&ell| Ok(check_transition(&psi, ell, n, sym, cfg.tame, cfg.precision)?)).collect();
            Ok((n, inv, trans))
        })
        .collect();
    for level in levels {
        let (n, inv, results) = level?;
        t.push(vec![n.to_string(), "-".into(), mu_str(&inv), opt(&inv.lambda), "-".into(), "-".into()]);
        let mut trans = vec![];
        for (&ell, r) in cfg.ell.iter().zip(results) {
            let r = r?;
            if r.verdict == TransitionVerdict::Fails {
                exit = EXIT_VERDICT;
            }
            t.push(vec![
                n.to_string(),
                ell.to_string(),
                mu_str(&r.raised),
                opt(&r.raised.lambda),
                r.predicted_jump.to_string(),
                format!("{:?}", r.verdict),
            ]);
            trans.push(to_value(&r));
        }
        out.push(json!({ "n": n, "invariants": inv, "transitions": trans }));
    }
    Ok((Value::Array(out), t, exit))
}

const KIDA_COLS: &[&str] = &["n", "[K:Q]", "[L:Q]", "lambda_L", "lambda_K", "P1", "P2", "rhs", "factor_wraps", "verdict"];

fn kida_row(r: &kida::KidaReport) -> Vec<String> {
    vec![
        r.n.to_string(),
        r.k_degree.to_string(),
        r.l_degree.to_string(),
        opt(&r.lhs),
        opt(&r.rhs_base),
        r.p1_contrib.to_string(),
        r.p2_contrib.to_string(),
        opt(&r.rhs),
        r.factor_wraps.to_string(),
        format!("{:?}", r.verdict),
    ]
}

fn kida_cmd(cfg: &JobConfig, sym: &EigenSymbol) -> Result<Step> {
    let k = cfg.field(&cfg.k)?;
    let l = cfg.field(&cfg.l)?;
    let mut out = vec![];
    let mut exit = EXIT_OK;
    let mut t = Table::new(KIDA_COLS);
    let reports: Vec<Result<kida::KidaReport>> = cfg
        .n
        .par_iter()
        .map(|&n| {
            let inst = KidaInstance::configured(sym.clone(), k.clone(), l.clone(), n, cfg.subject, cfg.p1p2_convention, cfg.precision)?;
            Ok(verify_kida(&inst)?)
        })
        .collect();
    for r in reports {
        let r = r?;
        if r.verdict == Verdict::Unequal {
            exit = EXIT_VERDICT;
        }
        t.push(kida_row(&r));
        out.push(to_value(&r));
    }
    Ok((Value::Array(out), t, exit))
}

fn tower(cfg: &JobConfig, sym: &EigenSymbol) -> Result<Step> {
    let m = cfg.field(&cfg.m)?;
    let k = cfg.field(&cfg.k)?;
    let l = cfg.field(&cfg.l)?;
    let mut out = vec![];
    let mut exit = EXIT_OK;
    let mut cols = vec!["pair"];
    cols.extend_from_slice(KIDA_COLS);
    let mut t = Table::new(&cols);
    let reports: Vec<Result<_>> = cfg.n.par_iter().map(|&n| Ok(verify_tower_consistency(sym, &m, &k, &l, n, cfg.precision)?)).collect();
    for r in reports {
        let r = r?;
        if !r.consistent {
            exit = EXIT_VERDICT;
        }
        for (name, x) in [("L/M", &r.l_over_m), ("K/M", &r.k_over_m), ("L/K", &r.l_over_k)] {
            let mut row = vec![name.to_string()];
            row.extend(kida_row(x));
            t.push(row);
        }
        out.push(to_value(&r));
    }
    Ok((Value::Array(out), t, exit))
}

fn signed(cfg: &JobConfig, sym: &EigenSymbol) -> Result<Step> {
    let psi = cfg.psi()?;
    let r = signed_growth_check(sym, &psi, &cfg.n, cfg.precision)?;
    let mut t = Table::new(&["n", "mu", "lambda", "q_n", "difference", "trivial_zeros"]);
    for l in &r.levels {
        t.push(vec![l.n.to_string(), mu_str(&l.invariants), opt(&l.invariants.lambda), l.q_n.to_string(), opt(&l.difference), l.trivial_zeros.to_string()]);
    }
    let exit = if r.holds { EXIT_OK } else { EXIT_VERDICT };
    Ok((to_value(&r), t, exit))
}

fn oracle_check(cfg: &JobConfig, sym: &EigenSymbol) -> Result<Step> {
    let psi = cfg.psi()?;
    let p = cfg.p;
    let m = psi.tame_conductor(p);
    let top = *cfg.n.iter().max().expect("levels checked nonempty");
    let level = sym.curve.conductor;
    let bound = cfg.qexp_bound.unwrap_or_else(|| QExpansion::terms_needed(level, p.pow(top + 1) * m, cfg.tol));
    let q = QExpansion::from_curve(&sym.curve, bound)?;
    let w = fricke_sign(&q)?;
    let per = calibrate(sym, &q, w)?;
    let mut reports = vec![];
    let mut exit = EXIT_OK;
    let mut t = Table::new(&["n", "i", "conductor", "exact", "predicted", "rel_err", "ok"]);
    for &n in &cfg.n {
        for i in 1..=n {
            let r = check_interpolation(sym, &q, &per, &psi, n, i, cfg.tol)?;
            if !r.ok {
                exit = EXIT_VERDICT;
            }
            t.push(vec![
                n.to_string(),
                i.to_string(),
                r.conductor.to_string(),
                format!("{:.10e} {:+.10e}i", r.exact.0, r.exact.1),
                format!("{:.10e} {:+.10e}i", r.predicted.0, r.predicted.1),
                format!("{:.3e}", r.rel_err),
                r.ok.to_string(),
            ]);
            reports.push(to_value(&r));
        }
    }
    let v = json!({ "qexp_bound": bound, "fricke_sign": w, "periods": per, "checks": reports });
    Ok((v, t, exit))
}

/// Parse, resolve and run; the outcome or an error carrying its exit status.
pub fn run_job(cmd: Command, job_text: Option<&str>, o: crate::config::Overrides) -> std::result::Result<Outcome, (Option<JobConfig>, CliError)> {
    let job = match job_text {
        Some(t) => crate::config::parse_job(t).map_err(|e| (None, e))?,
        None => Default::default(),
    };
    let (cfg, curve) = JobConfig::resolve(cmd, job, o).map_err(|e| (None, e))?;
    run(cfg.clone(), &curve).map_err(|e| (Some(cfg), e))
}
