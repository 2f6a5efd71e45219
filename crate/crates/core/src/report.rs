//! Verification reports: one entry per checked identity instance.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

/// Outcome of checking one identity for one parameter choice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub identity: String,
    pub params: String,
    pub passed: bool,
    /// First failing coordinate or other diagnostic; `None` on success.
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub title: String,
    pub checks: Vec<Check>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Structured,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report {
            title: title.into(),
            checks: Vec::new(),
        }
    }

    /// Records a check; `failure` carries the witness when it failed.
    pub fn record(&mut self, identity: &str, params: impl Into<String>, failure: Option<String>) {
        self.checks.push(Check {
            identity: identity.to_string(),
            params: params.into(),
            passed: failure.is_none(),
            witness: failure,
        });
    }

    pub fn pass(&mut self, identity: &str, params: impl Into<String>) {
        self.record(identity, params, None);
    }

    pub fn fail(&mut self, identity: &str, params: impl Into<String>, witness: impl Into<String>) {
        self.record(identity, params, Some(witness.into()));
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn passed_count(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }

    /// Whether every instance of the named identity was checked and passed.
    /// False when the identity was never checked.
    pub fn identity_passed(&self, identity: &str) -> bool {
        let mut seen = false;
        for c in self.checks.iter().filter(|c| c.identity == identity) {
            seen = true;
            if !c.passed {
                return false;
            }
        }
        seen
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "== {} ==", self.title);
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            let _ = write!(out, "[{status}] {} ({})", c.identity, c.params);
            if let Some(w) = &c.witness {
                let _ = write!(out, " -- {w}");
            }
            out.push('\n');
        }
        let _ = writeln!(out, "{} of {} checks passed", self.passed_count(), self.checks.len());
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Structured => self.to_json(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn records_and_renders() {
        let mut r = Report::new("demo");
        r.pass("alpha", "N=2");
        r.fail("beta", "N=2", "entry (0,1)");
        assert!(!r.all_passed());
        assert!(r.identity_passed("alpha"));
        assert!(!r.identity_passed("beta"));
        assert!(!r.identity_passed("gamma"));
        let text = r.to_text();
        assert!(text.contains("[PASS] alpha (N=2)"));
        assert!(text.contains("[FAIL] beta (N=2) -- entry (0,1)"));
        let back: Report = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
    }
}
