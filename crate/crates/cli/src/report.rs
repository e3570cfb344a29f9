use std::io::Read;
use std::time::Instant;

use dkk_core::Error;
use serde::Serialize;
use serde_json::Value;

use crate::args::{Format, Global};

#[derive(thiserror::Error, Debug)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("io: {0}")]
    Io(String),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(Error::Budget { .. }) => 3,
            _ => 2,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Serialize, Debug, Clone, Copy, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Serialize, Debug)]
pub struct RunReport {
    pub command: String,
    pub parameters: Value,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
    pub details: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub duration_ms: Option<u128>,
}

impl RunReport {
    /// A report that fails exactly when `counterexample` is present.
    pub fn new(command: &str, parameters: Value, details: Value, counterexample: Option<Value>) -> Self {
        let verdict = if counterexample.is_some() { Verdict::Fail } else { Verdict::Pass };
        RunReport { command: command.to_string(), parameters, verdict, counterexample, details, duration_ms: None }
    }
}

pub enum Output {
    Json(Value),
    Dot(String),
    Report(RunReport),
}

pub fn read_input(g: &Global) -> CliResult<String> {
    match &g.input {
        Some(p) => std::fs::read_to_string(p).map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| CliError::Io(e.to_string()))?;
            Ok(s)
        }
    }
}

pub fn parse<T: serde::de::DeserializeOwned>(text: &str) -> CliResult<T> {
    serde_json::from_str(text).map_err(|e| CliError::Core(Error::Parse(e.to_string())))
}

/// Renders the result and returns the exit code.
pub fn emit(g: &Global, out: Output, started: Instant) -> CliResult<i32> {
    if g.format == Format::Dot && !matches!(out, Output::Dot(_)) {
        return Err(CliError::Usage("this command has no DOT rendering".into()));
    }
    let (text, code) = match out {
        Output::Json(v) => (pretty(&v), 0),
        Output::Dot(s) => (s, 0),
        Output::Report(mut r) => {
            if g.timing {
                r.duration_ms = Some(started.elapsed().as_millis());
            }
            let code = if r.verdict == Verdict::Pass { 0 } else { 1 };
            (pretty(&serde_json::to_value(&r).expect("report serializes")), code)
        }
    };
    match &g.output {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::Io(format!("{}: {e}", p.display())))?,
        None => print!("{text}"),
    }
    Ok(code)
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json serializes");
    s.push('\n');
    s
}
