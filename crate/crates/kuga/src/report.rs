//! Structured pass/fail records for certified identities.

use std::fmt;

use serde::Serialize;

/// Outcome of a single certified check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    /// Verified by exact arithmetic.
    Pass,
    /// Verified by interval arithmetic at finite precision.
    NumericPass,
    /// Not a failure, but worth surfacing.
    Warning,
    /// The identity does not hold; the witness explains where.
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Status::Pass => "pass",
            Status::NumericPass => "numeric-pass",
            Status::Warning => "warning",
            Status::Fail => "fail",
        };
        write!(f, "{name}")
    }
}

/// One named check with its outcome and an optional witness payload.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckEntry {
    /// Deterministic check name, including any indices.
    pub name: String,
    /// Outcome.
    pub status: Status,
    /// Human-readable witness: the violated value, indices, or certificate data.
    pub witness: Option<String>,
}

/// An ordered list of certified checks.
///
/// Entries appear in the deterministic order the checks were run; the overall
/// verdict is pass exactly when no entry failed.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CertificateReport {
    entries: Vec<CheckEntry>,
}

impl CertificateReport {
    /// An empty report.
    pub fn new() -> Self {
        Self::default()
    }

    /// Appends an entry.
    pub fn push(&mut self, name: impl Into<String>, status: Status, witness: Option<String>) {
        self.entries.push(CheckEntry {
            name: name.into(),
            status,
            witness,
        });
    }

    /// Appends an exact pass.
    pub fn pass(&mut self, name: impl Into<String>) {
        self.push(name, Status::Pass, None);
    }

    /// Appends an interval-certified pass with its certificate data.
    pub fn numeric_pass(&mut self, name: impl Into<String>, witness: impl Into<String>) {
        self.push(name, Status::NumericPass, Some(witness.into()));
    }

    /// Appends a warning.
    pub fn warn(&mut self, name: impl Into<String>, witness: impl Into<String>) {
        self.push(name, Status::Warning, Some(witness.into()));
    }

    /// Appends a failure with its witness.
    pub fn fail(&mut self, name: impl Into<String>, witness: impl Into<String>) {
        self.push(name, Status::Fail, Some(witness.into()));
    }

    /// Appends every entry of `other`, in order.
    pub fn merge(&mut self, other: CertificateReport) {
        self.entries.extend(other.entries);
    }

    /// The recorded entries, in order.
    pub fn entries(&self) -> &[CheckEntry] {
        &self.entries
    }

    /// True when no entry is a failure.
    pub fn overall_pass(&self) -> bool {
        self.entries.iter().all(|e| e.status != Status::Fail)
    }

    /// True when some entry carries only an interval certificate.
    pub fn has_numeric(&self) -> bool {
        self.entries.iter().any(|e| e.status == Status::NumericPass)
    }

    /// The first failing entry, if any.
    pub fn first_failure(&self) -> Option<&CheckEntry> {
        self.entries.iter().find(|e| e.status == Status::Fail)
    }
}

impl fmt::Display for CertificateReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for entry in &self.entries {
            write!(f, "{:<12} {}", entry.status.to_string(), entry.name)?;
            if let Some(witness) = &entry.witness {
                write!(f, "  [{witness}]")?;
            }
            writeln!(f)?;
        }
        write!(
            f,
            "overall: {}",
            if self.overall_pass() { "pass" } else { "fail" }
        )
    }
}
