use std::collections::BTreeMap;
use std::fmt::Write as _;

use hpa_core::bundle::BundleFile;
use hpa_core::exactlin::Scalar;
use hpa_core::{Check, VerificationReport};
use serde::Serialize;

/// Everything a command prints. Maps are ordered so the JSON is stable.
#[derive(Debug, Default, Serialize)]
pub struct Report {
    pub command: String,
    pub field: String,
    pub passed: bool,
    pub dims: BTreeMap<String, usize>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub values: BTreeMap<String, String>,
    /// Exact coordinate vectors, in the canonical basis of their algebra.
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub vectors: BTreeMap<String, Vec<String>>,
    /// Bases of subspaces, one coordinate vector per basis element.
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub bases: BTreeMap<String, Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bundle: Option<BundleFile>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub list: Vec<String>,
    pub checks: Vec<Check>,
}

pub fn coords(v: &[Scalar]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

impl Report {
    pub fn new(command: impl Into<String>, field: impl Into<String>) -> Report {
        Report { command: command.into(), field: field.into(), passed: true, ..Report::default() }
    }

    pub fn dim(&mut self, name: &str, d: usize) {
        self.dims.insert(name.into(), d);
    }

    pub fn vector(&mut self, name: &str, v: &[Scalar]) {
        self.vectors.insert(name.into(), coords(v));
    }

    pub fn basis(&mut self, name: &str, vs: &[Vec<Scalar>]) {
        self.bases.insert(name.into(), vs.iter().map(|v| coords(v)).collect());
    }

    pub fn merge(&mut self, prefix: &str, r: VerificationReport) {
        for mut c in r.checks {
            c.name = if prefix.is_empty() { c.name } else { format!("{prefix}/{}", c.name) };
            self.checks.push(c);
        }
    }

    pub fn finish(mut self) -> Report {
        self.passed = self.checks.iter().all(|c| c.passed);
        self
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_human(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} [{}]", self.command, self.field);
        for item in &self.list {
            let _ = writeln!(out, "  {item}");
        }
        for (k, v) in &self.dims {
            let _ = writeln!(out, "dim {k} = {v}");
        }
        for (k, v) in &self.values {
            let _ = writeln!(out, "{k} = {v}");
        }
        for (k, v) in &self.vectors {
            let _ = writeln!(out, "{k} = [{}]", v.join(", "));
        }
        for c in &self.checks {
            match (&c.passed, &c.detail) {
                (true, _) => {
                    let _ = writeln!(out, "PASS {}", c.name);
                }
                (false, Some(d)) => {
                    let _ = writeln!(out, "FAIL {}: {d}", c.name);
                }
                (false, None) => {
                    let _ = writeln!(out, "FAIL {}", c.name);
                }
            }
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        if failed == 0 {
            out.push_str("OK\n");
        } else {
            let _ = writeln!(out, "FAILED: {failed} of {} checks", self.checks.len());
        }
        out
    }
}
