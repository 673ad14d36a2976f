//! Certificates and suite reports: the uniform "property, verdict,
//! witness" records every check in this crate emits, and the aggregate
//! that a suite run assembles.

use serde::{Deserialize, Serialize};

/// Outcome of one checked property.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    /// The property held everywhere it was checked.
    Pass,
    /// A counterexample was found; the witness names it.
    Fail,
    /// Reported data with no pass/fail meaning.
    Info,
}

/// One checked property with its outcome and a human-readable witness:
/// for a pass, the scope that was covered; for a failure, the first
/// counterexample.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub property: String,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Certificate {
    /// A passing certificate.
    pub fn pass(property: impl Into<String>, witness: impl Into<String>) -> Self {
        Certificate {
            property: property.into(),
            verdict: Verdict::Pass,
            witness: Some(witness.into()),
        }
    }

    /// A failing certificate with its counterexample.
    pub fn fail(property: impl Into<String>, witness: impl Into<String>) -> Self {
        Certificate {
            property: property.into(),
            verdict: Verdict::Fail,
            witness: Some(witness.into()),
        }
    }

    /// An informational certificate.
    pub fn info(property: impl Into<String>, witness: impl Into<String>) -> Self {
        Certificate {
            property: property.into(),
            verdict: Verdict::Info,
            witness: Some(witness.into()),
        }
    }
}

/// The aggregate outcome of a named suite run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub name: String,
    pub seed: u64,
    /// Certificates in canonical order (sorted by property name).
    pub certificates: Vec<Certificate>,
    pub passed: usize,
    pub failed: usize,
}

impl SuiteReport {
    /// Assembles a report, sorting certificates by property name so the
    /// output is independent of check scheduling.
    pub fn assemble(
        name: impl Into<String>,
        seed: u64,
        mut certificates: Vec<Certificate>,
    ) -> Self {
        certificates.sort_by(|a, b| a.property.cmp(&b.property));
        let passed = certificates
            .iter()
            .filter(|c| c.verdict == Verdict::Pass)
            .count();
        let failed = certificates
            .iter()
            .filter(|c| c.verdict == Verdict::Fail)
            .count();
        SuiteReport {
            name: name.into(),
            seed,
            certificates,
            passed,
            failed,
        }
    }

    /// True when no certificate failed.
    pub fn all_pass(&self) -> bool {
        self.failed == 0
    }
}
