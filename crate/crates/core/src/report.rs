//! Pass/fail verification reports.
//!
//! Verifiers never error on an axiom failure; they record a failed check
//! naming the offending basis tuple.

use std::fmt;

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn pass(&mut self, name: impl Into<String>) {
        self.checks.push(Check { name: name.into(), passed: true, detail: None });
    }

    pub fn fail(&mut self, name: impl Into<String>, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), passed: false, detail: Some(detail.into()) });
    }

    /// Records `Ok` as a pass and `Err(detail)` as a failure.
    pub fn record(&mut self, name: impl Into<String>, outcome: std::result::Result<(), String>) {
        match outcome {
            Ok(()) => self.pass(name),
            Err(detail) => self.fail(name, detail),
        }
    }

    pub fn expect(&mut self, name: impl Into<String>, ok: bool, detail: impl FnOnce() -> String) {
        if ok {
            self.pass(name);
        } else {
            self.fail(name, detail());
        }
    }

    /// Appends another report's checks under `prefix/`.
    pub fn merge(&mut self, prefix: &str, other: VerificationReport) {
        for mut c in other.checks {
            c.name = format!("{prefix}/{}", c.name);
            self.checks.push(c);
        }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn passed(&self, name: &str) -> bool {
        self.get(name).is_some_and(|c| c.passed)
    }

    /// Converts a failing report into [`crate::Error::VerificationFailed`].
    pub fn into_result(self, what: &str) -> crate::Result<VerificationReport> {
        if self.all_passed() {
            Ok(self)
        } else {
            let detail = self
                .failures()
                .map(|c| format!("{}: {}", c.name, c.detail.as_deref().unwrap_or("")))
                .collect::<Vec<_>>()
                .join("; ");
            Err(crate::Error::VerificationFailed { what: what.to_string(), detail })
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match (&c.passed, &c.detail) {
                (true, _) => writeln!(f, "PASS {}", c.name)?,
                (false, Some(d)) => writeln!(f, "FAIL {}: {}", c.name, d)?,
                (false, None) => writeln!(f, "FAIL {}", c.name)?,
            }
        }
        Ok(())
    }
}
