//! Command-line front end: loads catalog entries or files, dispatches to the
//! library and renders deterministic JSON reports.

use std::time::Instant;

use serde_json::{json, Value};

pub mod args;
mod commands;
pub mod report;
pub mod workspace;

pub use args::Cli;
pub use workspace::{Entry, Workspace};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] fibcat::Error),
    #[error("cannot read `{0}`: {1}")]
    Io(String, std::io::Error),
    #[error("unknown entry `{0}`: not a file and not in the catalog")]
    UnknownEntry(String),
    #[error("{0}")]
    Usage(String),
}

pub const EXIT_PASS: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

/// Everything a command produced.
pub struct Run {
    pub code: i32,
    pub report: Value,
    pub dot: Option<String>,
}

fn settings(cli: &Cli) -> Value {
    json!({
        "max_len": cli.max_len,
        "size_cap": cli.size_cap,
        "base_cap": cli.base_cap,
        "slice_cap": cli.slice_cap,
    })
}

/// Runs one command; worker count affects scheduling only, never output.
pub fn run(cli: &Cli) -> Run {
    let work = || {
        let mut ws = Workspace::new();
        let start = Instant::now();
        let outcome = commands::execute(cli, &mut ws);
        (outcome, ws, start.elapsed())
    };
    let (outcome, ws, elapsed) = match cli.workers {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(work),
            Err(e) => {
                let err = CliError::Usage(format!("cannot start {n} workers: {e}"));
                return Run {
                    code: EXIT_ERROR,
                    report: json!({ "schema": report::SCHEMA_VERSION, "error": report::error_json(&err) }),
                    dot: None,
                };
            }
        },
        None => work(),
    };
    let mut rep = json!({
        "schema": report::SCHEMA_VERSION,
        "command": cli.command.name(),
        "settings": settings(cli),
        "inputs": report::inputs_json(ws.inputs()),
    });
    let (code, dot) = match outcome {
        Ok(o) => {
            rep["verdict"] = json!(if o.pass { "pass" } else { "refuted" });
            rep["result"] = o.result;
            (if o.pass { EXIT_PASS } else { EXIT_REFUTED }, o.dot)
        }
        Err(e) => {
            rep["verdict"] = json!("error");
            rep["error"] = report::error_json(&e);
            (EXIT_ERROR, None)
        }
    };
    if cli.timing {
        rep["timing_ms"] = json!(elapsed.as_millis() as u64);
    }
    Run { code, report: rep, dot }
}

/// Short human-readable rendering of a report.
pub fn summary(report: &Value) -> String {
    let mut out = String::new();
    let verdict = report["verdict"].as_str().unwrap_or("error").to_uppercase();
    out.push_str(&format!("{}: {}\n", report["command"].as_str().unwrap_or("?"), verdict));
    let body = if report.get("result").is_some() {
        &report["result"]
    } else {
        &report["error"]
    };
    if let Value::Object(map) = body {
        for (k, v) in map {
            out.push_str(&format!("  {k}: {v}\n"));
        }
    }
    out
}
