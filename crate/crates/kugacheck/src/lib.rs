//! Library backing the `kugacheck` binary.
//!
//! The binary has three subcommands: `classify` prints the invariants of a
//! rational quaternion algebra, `certify` runs the full certificate suite for
//! a family described by a TOML spec file, and `ledger` evaluates the exact
//! scalar identities for fibered families.  Everything that can fail after
//! the spec file has been parsed and validated is reported as a certificate
//! entry rather than an error, so the certify run always produces a report.

pub mod output;
pub mod runner;
pub mod spec;

pub use output::{report_bytes, summary_text, FullReport};
pub use runner::certify;
pub use spec::{load_spec, parse_tau_pair, CliError, ConstructionSpec, Mode};
