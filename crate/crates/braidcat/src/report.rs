//! Structured check reports. Failures always carry the identity name, the
//! witness indices and both sides, so any reported violation can be redone
//! by hand; a bare boolean would not.

use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    /// Name of the violated identity, e.g. `associativity`.
    pub identity: String,
    /// Witness indices (basis elements, grades, object names) as labels.
    pub witness: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub name: String,
    pub checks_run: usize,
    pub violations: Vec<Violation>,
    /// Free-form notes that are not failures (e.g. skipped sections).
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(name: impl Into<String>) -> Self {
        Report {
            name: name.into(),
            checks_run: 0,
            violations: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn record(&mut self, ok: bool, violation: impl FnOnce() -> Violation) {
        self.checks_run += 1;
        if !ok {
            self.violations.push(violation());
        }
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn merge(&mut self, other: Report) {
        self.checks_run += other.checks_run;
        self.violations.extend(other.violations);
        self.notes.extend(other.notes);
    }

    pub fn first_violation(&self) -> Option<&Violation> {
        self.violations.first()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            writeln!(f, "{}: PASS ({} checks)", self.name, self.checks_run)?;
        } else {
            writeln!(
                f,
                "{}: FAIL ({} of {} checks violated)",
                self.name,
                self.violations.len(),
                self.checks_run
            )?;
            for v in &self.violations {
                writeln!(
                    f,
                    "  {} at [{}]: lhs = {}, rhs = {}",
                    v.identity,
                    v.witness.join(", "),
                    v.lhs,
                    v.rhs
                )?;
            }
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}
