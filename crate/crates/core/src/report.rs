//! Pass/fail reports produced by the structural verifiers.

use serde::Serialize;
use std::fmt;

/// One verified identity: a human-readable label, the outcome, and a short
/// detail string (typically the dimensions involved).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckLine {
    pub label: String,
    pub pass: bool,
    pub details: String,
}

impl fmt::Display for CheckLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.pass { "PASS" } else { "FAIL" };
        if self.details.is_empty() {
            write!(f, "{tag}  {}", self.label)
        } else {
            write!(f, "{tag}  {}  [{}]", self.label, self.details)
        }
    }
}

/// An ordered collection of check lines; passes iff every line passes.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<CheckLine>,
}

impl Report {
    pub fn new() -> Report {
        Report::default()
    }

    pub fn push(&mut self, label: impl Into<String>, pass: bool, details: impl Into<String>) {
        self.checks.push(CheckLine { label: label.into(), pass, details: details.into() });
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for check in &self.checks {
            writeln!(f, "{check}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_passes_only_when_all_lines_pass() {
        let mut r = Report::new();
        assert!(r.passed());
        r.push("first", true, "dim 3");
        assert!(r.passed());
        r.push("second", false, "");
        assert!(!r.passed());
    }

    #[test]
    fn display_marks_each_line() {
        let mut r = Report::new();
        r.push("alpha", true, "dim 1");
        r.push("beta", false, "");
        let text = r.to_string();
        assert!(text.contains("PASS  alpha  [dim 1]"));
        assert!(text.contains("FAIL  beta"));
    }
}
