use std::fs;
use std::path::Path;

use anyhow::{Context, Result};
use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};
use ybx_core::io::Document;
use ybx_core::CheckReport;

#[derive(Debug, Serialize)]
pub struct NamedCheck {
    pub name: String,
    #[serde(flatten)]
    pub report: CheckReport,
}

/// What a run did. Everything except `wall_time_ms` is a function of the
/// command line and the contents of the input files.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub inputs_digest: String,
    pub passed: bool,
    pub checks: Vec<NamedCheck>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<Value>,
    pub wall_time_ms: u64,
}

/// Collects inputs, checks and results while a command runs.
pub struct Session {
    command: String,
    hasher: Sha256,
    checks: Vec<NamedCheck>,
    result: Option<Value>,
    output: Option<Value>,
}

impl Session {
    pub fn new(command: &str) -> Self {
        let mut hasher = Sha256::new();
        hasher.update(command.as_bytes());
        hasher.update([0]);
        Session { command: command.to_string(), hasher, checks: Vec::new(), result: None, output: None }
    }

    /// Records a parameter that influences the result.
    pub fn param(&mut self, key: &str, value: impl ToString) {
        self.hasher.update(format!("{key}={}", value.to_string()).as_bytes());
        self.hasher.update([0]);
    }

    pub fn load(&mut self, label: &str, path: &Path) -> Result<Document> {
        let bytes = fs::read(path).with_context(|| format!("cannot read {label} file {}", path.display()))?;
        self.hasher.update(label.as_bytes());
        self.hasher.update([0]);
        self.hasher.update(&bytes);
        self.hasher.update([0]);
        let text = String::from_utf8(bytes).with_context(|| format!("{} is not UTF-8", path.display()))?;
        Document::parse(&text).with_context(|| format!("cannot parse {}", path.display()))
    }

    pub fn check(&mut self, name: impl Into<String>, report: CheckReport) {
        self.checks.push(NamedCheck { name: name.into(), report });
    }

    pub fn result(&mut self, value: Value) {
        self.result = Some(value);
    }

    /// The constructed object, written by `--out` and echoed as the result.
    pub fn output(&mut self, value: Value) {
        self.output = Some(value.clone());
        if self.result.is_none() {
            self.result = Some(value);
        }
    }

    pub fn take_output(&mut self) -> Option<Value> {
        self.output.take()
    }

    pub fn finish(self, wall_time_ms: u64) -> RunReport {
        RunReport {
            tool: "ybx",
            version: env!("CARGO_PKG_VERSION"),
            command: self.command,
            inputs_digest: hex::encode(self.hasher.finalize()),
            passed: self.checks.iter().all(|c| c.report.passed),
            checks: self.checks,
            result: self.result,
            wall_time_ms,
        }
    }
}
