use serde::Serialize;

use crate::geometry::{format_rational, Rational};

/// Format version of the serialized reports.
pub const REPORT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub lhs: String,
    pub rhs: String,
    pub witness: String,
}

/// Outcome of one verification suite. `pass` holds iff every check passes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub suite: String,
    pub pass: bool,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn new(suite: impl Into<String>) -> Self {
        Self {
            suite: suite.into(),
            pass: true,
            checks: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.pass &= check.pass;
        self.checks.push(check);
    }

    /// Records `lhs == rhs`.
    pub fn equal(&mut self, name: impl Into<String>, lhs: &Rational, rhs: &Rational, witness: impl Into<String>) {
        self.push(Check {
            name: name.into(),
            pass: lhs == rhs,
            lhs: format_rational(lhs),
            rhs: format_rational(rhs),
            witness: witness.into(),
        });
    }

    /// Records `lhs <= rhs`.
    pub fn at_most(&mut self, name: impl Into<String>, lhs: &Rational, rhs: &Rational, witness: impl Into<String>) {
        self.push(Check {
            name: name.into(),
            pass: lhs <= rhs,
            lhs: format_rational(lhs),
            rhs: format_rational(rhs),
            witness: witness.into(),
        });
    }

    /// Records `lhs < rhs`.
    pub fn less(&mut self, name: impl Into<String>, lhs: &Rational, rhs: &Rational, witness: impl Into<String>) {
        self.push(Check {
            name: name.into(),
            pass: lhs < rhs,
            lhs: format_rational(lhs),
            rhs: format_rational(rhs),
            witness: witness.into(),
        });
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    /// Appends another report's checks under a name prefix.
    pub fn absorb(&mut self, other: CheckReport) {
        for mut c in other.checks {
            c.name = format!("{}/{}", other.suite, c.name);
            self.push(c);
        }
        self.notes.extend(other.notes);
    }
}

/// A set of suite reports as written by `fsig check`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportSet {
    pub version: u32,
    pub pass: bool,
    pub suites: Vec<CheckReport>,
}

impl ReportSet {
    pub fn new(suites: Vec<CheckReport>) -> Self {
        Self {
            version: REPORT_VERSION,
            pass: suites.iter().all(|s| s.pass),
            suites,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

pub fn witness(coords: &[Rational]) -> String {
    let parts: Vec<String> = coords.iter().map(format_rational).collect();
    format!("({})", parts.join(","))
}
