//! Verification reports shared by every checker.

use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

/// A single failed identity, named after the check that found it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub check: String,
    pub detail: String,
}

/// Outcome of a checker. Checkers never stop at the first failure; every
/// violation found is listed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub name: String,
    pub pass: bool,
    /// Number of individual identities evaluated.
    pub checked: usize,
    pub violations: Vec<Violation>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(name: impl Into<String>) -> Self {
        Report {
            name: name.into(),
            pass: true,
            checked: 0,
            violations: Vec::new(),
            notes: Vec::new(),
        }
    }

    /// Records one evaluated identity.
    pub fn check(&mut self, ok: bool, check: &str, detail: impl FnOnce() -> String) -> bool {
        self.checked += 1;
        if !ok {
            self.fail(check, detail());
        }
        ok
    }

    pub fn fail(&mut self, check: &str, detail: impl Into<String>) {
        self.pass = false;
        self.violations.push(Violation {
            check: check.to_string(),
            detail: detail.into(),
        });
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    /// Folds another report's results into this one.
    pub fn absorb(&mut self, other: Report) {
        self.checked += other.checked;
        self.pass &= other.pass;
        self.violations.extend(other.violations);
        self.notes.extend(other.notes);
    }

    pub fn to_markdown(&self) -> String {
        let mut s = String::new();
        let status = if self.pass { "PASS" } else { "FAIL" };
        let _ = writeln!(s, "### {}: {status} ({} checks)", self.name, self.checked);
        for n in &self.notes {
            let _ = writeln!(s, "- note: {n}");
        }
        if !self.violations.is_empty() {
            let _ = writeln!(s, "\n| check | detail |\n|---|---|");
            for v in &self.violations {
                let _ = writeln!(s, "| {} | {} |", v.check, v.detail.replace('|', "\\|"));
            }
        }
        s
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} ({} checks, {} violations)",
            self.name,
            if self.pass { "pass" } else { "FAIL" },
            self.checked,
            self.violations.len()
        )
    }
}
