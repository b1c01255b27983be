//! Report assembly for the `certify` subcommand.
//!
//! A run produces one [`FullReport`]: the tool version, the digest of the
//! input spec, every certificate entry in a fixed order, and the overall
//! verdict.  The JSON rendering is canonical — object keys are sorted and
//! the bytes are identical across runs on the same input — so reports can
//! be compared with a plain byte diff.

use kuga::{CertificateReport, CheckEntry, Status};
use serde::Serialize;

/// Schema version written into every report.
pub const SCHEMA_VERSION: u32 = 1;

/// Complete result of a certify run.
#[derive(Debug, Serialize)]
pub struct FullReport {
    /// Report schema version.
    pub schema_version: u32,
    /// Version of the tool that produced the report.
    pub tool_version: String,
    /// SHA-256 digest of the canonical JSON form of the input spec.
    pub input_digest: String,
    /// Every certificate entry, in execution order.
    pub entries: Vec<CheckEntry>,
    /// `"pass"` when no entry failed, `"fail"` otherwise.
    pub overall: String,
}

impl FullReport {
    /// Wraps a finished certificate report for a given input digest.
    pub fn new(digest: &str, report: CertificateReport) -> Self {
        let overall = if report.overall_pass() { "pass" } else { "fail" };
        FullReport {
            schema_version: SCHEMA_VERSION,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            input_digest: digest.to_string(),
            entries: report.entries().to_vec(),
            overall: overall.to_string(),
        }
    }

    /// True when every entry passed.
    pub fn passed(&self) -> bool {
        self.overall == "pass"
    }
}

/// Renders the report as canonical JSON bytes (sorted keys, trailing newline).
pub fn report_bytes(report: &FullReport) -> Vec<u8> {
    let value = serde_json::to_value(report).expect("report serialization cannot fail");
    let mut text = serde_json::to_string_pretty(&value).expect("value rendering cannot fail");
    text.push('\n');
    text.into_bytes()
}

fn status_tag(status: Status) -> &'static str {
    match status {
        Status::Pass => "PASS",
        Status::NumericPass => "PASS*",
        Status::Warning => "WARN",
        Status::Fail => "FAIL",
    }
}

/// Renders the human-readable summary printed to stdout.
pub fn summary_text(report: &FullReport) -> String {
    let mut out = String::new();
    for entry in &report.entries {
        out.push_str(&format!("{:<6} {}", status_tag(entry.status), entry.name));
        if let Some(witness) = &entry.witness {
            out.push_str(&format!("  [{witness}]"));
        }
        out.push('\n');
    }
    let passed = report
        .entries
        .iter()
        .filter(|e| !matches!(e.status, Status::Fail))
        .count();
    out.push_str(&format!(
        "\ninput digest: {}\noverall: {} ({passed}/{} checks clean)\n",
        report.input_digest,
        report.overall,
        report.entries.len()
    ));
    out
}
