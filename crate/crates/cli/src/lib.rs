//! Input parsing, command dispatch and report rendering for the `bcres` binary.

pub mod input;
mod commands;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};
use thiserror::Error;

use bcres_core::graph::Bridge;
use bcres_core::Characteristic;

pub use commands::run_command;
pub use input::{parse_input, InputDocument, Subject};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Error)]
pub enum CliError {
    #[error("input error in {field}: {message}")]
    Input { field: String, message: String },
    #[error("{}", core_message(.0))]
    Core(bcres_core::Error),
    #[error("usage: {0}")]
    Usage(String),
    #[error("cannot read input: {0}")]
    Io(String),
}

fn core_message(e: &bcres_core::Error) -> String {
    if e.is_bound() {
        format!("inconclusive: bound: {e}")
    } else {
        format!("error: {e}")
    }
}

impl CliError {
    /// Attach a field to a core error raised while validating input. Bound
    /// failures stay bound failures.
    pub fn at(field: &str, e: bcres_core::Error) -> Self {
        if e.is_bound() {
            CliError::Core(e)
        } else {
            CliError::Input {
                field: field.into(),
                message: e.to_string(),
            }
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_bound() => 2,
            _ => 1,
        }
    }
}

impl From<bcres_core::Error> for CliError {
    fn from(e: bcres_core::Error) -> Self {
        CliError::Core(e)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Info,
    Bc,
    Ideal,
    Betti,
    Hilbert,
    Decompose,
    Stratify,
    Ci,
    CrossValidate,
    Arrangement,
    Graph,
    Gnr,
}

impl Command {
    pub const ALL: [Command; 12] = [
        Command::Info,
        Command::Bc,
        Command::Ideal,
        Command::Betti,
        Command::Hilbert,
        Command::Decompose,
        Command::Stratify,
        Command::Ci,
        Command::CrossValidate,
        Command::Arrangement,
        Command::Graph,
        Command::Gnr,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::Info => "info",
            Command::Bc => "bc",
            Command::Ideal => "ideal",
            Command::Betti => "betti",
            Command::Hilbert => "hilbert",
            Command::Decompose => "decompose",
            Command::Stratify => "stratify",
            Command::Ci => "ci",
            Command::CrossValidate => "cross-validate",
            Command::Arrangement => "arrangement",
            Command::Graph => "graph",
            Command::Gnr => "gnr",
        }
    }

    pub fn from_name(s: &str) -> Option<Command> {
        Command::ALL.into_iter().find(|c| c.name() == s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Options {
    pub characteristic: Characteristic,
    pub max_power: u32,
    /// Element order as labels; overrides the order in the document.
    pub order: Option<Vec<String>>,
    /// Corpus seed for batch cross-validation.
    pub seed: Option<u64>,
    pub cycles: Option<Vec<usize>>,
    pub bridge: Bridge,
    pub expected_cycles: Option<usize>,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            characteristic: Characteristic::ZERO,
            max_power: 3,
            order: None,
            seed: None,
            cycles: None,
            bridge: Bridge::Disjoint,
            expected_cycles: None,
        }
    }
}

/// A parsed document together with the hash of its source text.
#[derive(Debug, Clone)]
pub struct LoadedInput {
    pub document: InputDocument,
    pub sha256: String,
}

pub fn load_input(text: &str) -> Result<LoadedInput, CliError> {
    Ok(LoadedInput {
        document: parse_input(text)?,
        sha256: hex::encode(Sha256::digest(text.as_bytes())),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub name: String,
    pub value: String,
    /// The operation whose output decided the verdict.
    pub operation: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub input_sha256: Option<String>,
    pub tool_version: String,
    pub options: Options,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub verdicts: Vec<Verdict>,
    pub result: Value,
    /// Parts that hit a size or search bound.
    pub inconclusive: Vec<String>,
    pub provenance: Provenance,
}

impl Report {
    /// 0 when every verdict was reached, 2 when something stayed inconclusive.
    pub fn exit_code(&self) -> i32 {
        if self.inconclusive.is_empty() && !self.verdicts.is_empty() {
            0
        } else {
            2
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Human,
    Json,
}

impl Format {
    pub fn from_name(s: &str) -> Option<Format> {
        match s {
            "human" => Some(Format::Human),
            "json" => Some(Format::Json),
            _ => None,
        }
    }
}

pub fn render_report(report: &Report, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Human => render_human(report),
    }
}

fn render_human(r: &Report) -> String {
    let mut out = format!("bcres {}\n", r.command);
    if !r.verdicts.is_empty() {
        out.push_str("verdicts:\n");
        for v in &r.verdicts {
            out.push_str(&format!("  {}: {}  [{}]\n", v.name, v.value, v.operation));
        }
    }
    if let Value::Object(map) = &r.result {
        for (k, v) in map {
            render_value(&mut out, k, v, 0);
        }
    } else {
        render_value(&mut out, "result", &r.result, 0);
    }
    for msg in &r.inconclusive {
        out.push_str(&format!("inconclusive: {msg}\n"));
    }
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("none".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) if !s.contains('\n') => Some(s.clone()),
        _ => None,
    }
}

fn render_value(out: &mut String, key: &str, v: &Value, indent: usize) {
    let pad = " ".repeat(indent);
    if let Some(s) = scalar(v) {
        out.push_str(&format!("{pad}{key}: {s}\n"));
        return;
    }
    match v {
        Value::String(s) => {
            out.push_str(&format!("{pad}{key}:\n"));
            for line in s.lines() {
                out.push_str(&format!("{pad}  {line}\n"));
            }
        }
        Value::Array(items) => {
            let flat: Option<Vec<String>> = items
                .iter()
                .map(|i| match i {
                    Value::Array(inner) => inner
                        .iter()
                        .map(scalar)
                        .collect::<Option<Vec<_>>>()
                        .map(|p| format!("[{}]", p.join(", "))),
                    other => scalar(other),
                })
                .collect();
            match flat {
                Some(parts) => out.push_str(&format!("{pad}{key}: [{}]\n", parts.join(", "))),
                None => {
                    out.push_str(&format!("{pad}{key}:\n"));
                    for (i, item) in items.iter().enumerate() {
                        render_value(out, &format!("[{i}]"), item, indent + 2);
                    }
                }
            }
        }
        Value::Object(map) => {
            out.push_str(&format!("{pad}{key}:\n"));
            for (k, v) in map {
                render_value(out, k, v, indent + 2);
            }
        }
        _ => unreachable!("scalars handled above"),
    }
}
