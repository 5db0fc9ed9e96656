//! json, tsv and aligned text output.

use serde_json::{json, Value};

use crate::config::{Format, JobConfig};
use crate::error::CliError;
use crate::run::{Outcome, Table, VERSION};

pub fn render(o: &Outcome, format: Format) -> String {
    match format {
        Format::Json => pretty(&o.report()),
        Format::Tsv => tsv(o),
        Format::Text => text(o),
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn tsv(o: &Outcome) -> String {
    let mut s = format!("# mtk {VERSION}\n# config {}\n", serde_json::to_string(&o.config).expect("config serializes"));
    s.push_str(&o.table.header.join("\t"));
    s.push('\n');
    for r in &o.table.rows {
        s.push_str(&r.join("\t"));
        s.push('\n');
    }
    s
}

fn aligned(t: &Table) -> String {
    let mut w: Vec<usize> = t.header.iter().map(|h| h.len()).collect();
    for r in &t.rows {
        for (i, c) in r.iter().enumerate() {
            w[i] = w[i].max(c.chars().count());
        }
    }
    let line = |cells: &[String]| -> String {
        let parts: Vec<String> = cells.iter().enumerate().map(|(i, c)| format!("{c:>width$}", width = w[i])).collect();
        parts.join("  ").trim_end().to_string() + "\n"
    };
    let mut s = line(&t.header);
    s.push_str(&line(&w.iter().map(|&k| "-".repeat(k)).collect::<Vec<_>>()));
    for r in &t.rows {
        s.push_str(&line(r));
    }
    s
}

fn text(o: &Outcome) -> String {
    let c = &o.config;
    let curve = c.curve.label.clone().unwrap_or_else(|| format!("[{},{},{},{},{}] N={}", c.curve.a1, c.curve.a2, c.curve.a3, c.curve.a4, c.curve.a6, c.curve.n));
    let mut s = format!(
        "mtk {VERSION}  {}  curve {curve} ({:?})  p = {}  n = {:?}  B = {}\n\n",
        serde_json::to_value(c.command).expect("command serializes").as_str().unwrap_or(""),
        c.subject,
        c.p,
        c.n,
        c.precision
    );
    s.push_str(&aligned(&o.table));
    s.push_str(&format!("\nexit {}\n", o.exit));
    s
}

/// Machine-readable diagnostic for a failed job.
pub fn diagnostic(cfg: Option<&JobConfig>, e: &CliError) -> String {
    pretty(&json!({
        "version": VERSION,
        "config": cfg,
        "exit_code": e.exit_code(),
        "error": e,
    }))
}
