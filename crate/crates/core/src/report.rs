//! Pass/fail reports shared by the identity checks and verification suites.

use std::fmt;

use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckFailure {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: String,
    /// Number of individual identities evaluated.
    pub checked: usize,
    pub failures: Vec<CheckFailure>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>) -> Self {
        CheckReport {
            name: name.into(),
            checked: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Count one identity; record a failure when `ok` is false.
    pub fn record(&mut self, ok: bool, n: usize, k: Option<usize>, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(CheckFailure {
                n,
                k,
                detail: detail(),
            });
        }
    }

    pub fn fail(&mut self, n: usize, k: Option<usize>, detail: String) {
        self.checked += 1;
        self.failures.push(CheckFailure { n, k, detail });
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.checked += other.checked;
        self.failures.extend(other.failures);
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {} ({} checked, {} failed)",
            self.name,
            self.checked,
            self.failures.len()
        )?;
        for fail in &self.failures {
            match fail.k {
                Some(k) => write!(f, "\n  n={} k={}: {}", fail.n, k, fail.detail)?,
                None => write!(f, "\n  n={}: {}", fail.n, fail.detail)?,
            }
        }
        Ok(())
    }
}
