//! Pass/fail reports with witnesses, shared by every verifier in the crate.

use serde::{Deserialize, Serialize};
use std::fmt;

/// One verified clause: a name, an outcome, and a witness when it failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Human-readable description of a failing instance (indices, labels).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// A named bundle of checks. The bundle passes iff every clause does;
/// `notes` carries informational flags that do not affect the verdict
/// (cocommutativity, summary lines).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub subject: String,
    pub checks: Vec<Check>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn new(subject: impl Into<String>) -> Self {
        CheckReport {
            subject: subject.into(),
            checks: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn pass(&mut self, name: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed: true,
            witness: None,
        });
    }

    pub fn fail(&mut self, name: impl Into<String>, witness: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed: false,
            witness: Some(witness.into()),
        });
    }

    /// Record one clause: pass when `witness` is `None`, fail with it otherwise.
    pub fn record(&mut self, name: impl Into<String>, witness: Option<String>) {
        match witness {
            None => self.pass(name),
            Some(w) => self.fail(name, w),
        }
    }

    pub fn note(&mut self, line: impl Into<String>) {
        self.notes.push(line.into());
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// Append every clause of `other`, prefixing names with its subject.
    pub fn absorb(&mut self, other: CheckReport) {
        for mut c in other.checks {
            c.name = format!("{}: {}", other.subject, c.name);
            self.checks.push(c);
        }
        for n in other.notes {
            self.notes.push(format!("{}: {}", other.subject, n));
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}: {}",
            self.subject,
            if self.passed() { "pass" } else { "FAIL" }
        )?;
        for c in &self.checks {
            match (&c.witness, c.passed) {
                (_, true) => writeln!(f, "  ok   {}", c.name)?,
                (Some(w), false) => writeln!(f, "  FAIL {} — {}", c.name, w)?,
                (None, false) => writeln!(f, "  FAIL {}", c.name)?,
            }
        }
        for n in &self.notes {
            writeln!(f, "  note {}", n)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_and_witnesses() {
        let mut r = CheckReport::new("demo");
        r.pass("first");
        assert!(r.passed());
        r.fail("second", "at (1,2)");
        assert!(!r.passed());
        assert_eq!(r.failures().count(), 1);
        let shown = r.to_string();
        assert!(shown.contains("FAIL second — at (1,2)"));
    }

    #[test]
    fn serde_round_trip() {
        let mut r = CheckReport::new("demo");
        r.pass("a");
        r.fail("b", "w");
        r.note("flag: true");
        let s = serde_json::to_string(&r).unwrap();
        let back: CheckReport = serde_json::from_str(&s).unwrap();
        assert_eq!(r, back);
    }
}
