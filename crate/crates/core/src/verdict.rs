//! Pass/fail outcomes of structural checks.
//!
//! A failed check is a result, not an error: every verdict carries the name of
//! the property tested and, on failure, a bounded list of human-readable
//! witnesses (the offending triple, quadruple or pair).

use serde::Serialize;

/// Witness lists are truncated to this many entries.
pub const MAX_WITNESSES: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub check: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<String>,
    /// Total number of violations found (may exceed `witnesses.len()`).
    #[serde(skip_serializing_if = "is_zero")]
    pub violations: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

fn is_zero(n: &usize) -> bool {
    *n == 0
}

impl Verdict {
    pub fn new(check: impl Into<String>) -> Self {
        Self {
            check: check.into(),
            passed: true,
            witnesses: Vec::new(),
            violations: 0,
            note: None,
        }
    }

    pub fn pass(check: impl Into<String>) -> Self {
        Self::new(check)
    }

    pub fn fail(check: impl Into<String>, witness: impl Into<String>) -> Self {
        let mut v = Self::new(check);
        v.record(witness);
        v
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// Records a violation and marks the verdict failed.
    pub fn record(&mut self, witness: impl Into<String>) {
        self.passed = false;
        self.violations += 1;
        if self.witnesses.len() < MAX_WITNESSES {
            self.witnesses.push(witness.into());
        }
    }

    /// Folds another verdict's failures into this one.
    pub fn absorb(&mut self, other: &Verdict) {
        if other.passed {
            return;
        }
        self.passed = false;
        self.violations += other.violations;
        for w in &other.witnesses {
            if self.witnesses.len() < MAX_WITNESSES {
                self.witnesses.push(format!("{}: {}", other.check, w));
            }
        }
    }

    pub fn first_witness(&self) -> Option<&str> {
        self.witnesses.first().map(String::as_str)
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{status}] {}", self.check)?;
        if let Some(w) = self.first_witness() {
            write!(f, " (witness: {w}")?;
            if self.violations > 1 {
                write!(f, "; {} violations total", self.violations)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}
