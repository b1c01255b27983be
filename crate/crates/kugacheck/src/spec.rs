//! Spec files for the `certify` subcommand.
//!
//! A spec file is a TOML document naming a construction mode together with
//! the arithmetic data the mode needs.  Parsing and validation happen here;
//! every error raised in this module is an input error (exit code 2).  Once
//! a [`ConstructionSpec`] exists, later failures are certificate findings,
//! not errors.
//!
//! Each spec is hashed: the raw document is rendered to canonical JSON
//! (sorted keys, compact separators, defaults filled in) and digested with
//! SHA-256.  The digest ties a report to the exact input that produced it.

use exact_core::{parse_rational, ComplexExactScalar, Matrix, Rational};
use kuga::ScaleChoice;
use num_bigint::BigInt;
use num_traits::Signed;
use orders::QuatOrder;
use quaternion::{Quaternion, QuaternionAlgebra};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::path::Path;
use thiserror::Error;

/// Errors surfaced before any certificate work starts; all exit with code 2.
#[derive(Debug, Error)]
pub enum CliError {
    /// The spec file could not be read.
    #[error("cannot read spec file: {0}")]
    Io(#[from] std::io::Error),
    /// The spec file is not well-formed TOML.
    #[error("spec file is not valid TOML: {0}")]
    Toml(#[from] toml::de::Error),
    /// The spec file parsed but its content is unusable.
    #[error("{0}")]
    Invalid(String),
}

fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Invalid(msg.into())
}

/// Scale entry of a spec file: either the string `"auto"` or a positive integer.
#[derive(Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScaleField {
    /// A fixed integer multiplier for the quadratic form.
    Fixed(i64),
    /// The literal string `"auto"`, requesting the smallest integral scale.
    Auto(String),
}

fn default_level() -> u64 {
    1
}

fn default_copies() -> u64 {
    1
}

fn default_scale() -> ScaleField {
    ScaleField::Auto("auto".to_string())
}

/// Quaternion algebra parameters as written in the spec file.
#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawAlgebra {
    /// Square of the first generator, as a rational string.
    pub a: String,
    /// Square of the second generator, as a rational string.
    pub b: String,
}

/// A base point of the upper half-plane as written in the spec file.
#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawTau {
    /// Real part, as a rational string.
    pub re: String,
    /// Imaginary part, as a rational string; must be positive.
    pub im: String,
}

/// Direct image of the TOML document, before validation.
#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawSpec {
    /// Construction mode: `false-elliptic`, `elliptic`, or `raw-kuga`.
    pub mode: String,
    /// Congruence level for the membership checks (default 1).
    #[serde(default = "default_level")]
    pub level: u64,
    /// Scale for the quadratic form: `"auto"` or a positive integer.
    #[serde(default = "default_scale")]
    pub scale: ScaleField,
    /// Number of fiber-product copies to certify (default 1).
    #[serde(default = "default_copies")]
    pub copies: u64,
    /// Quaternion algebra parameters; required except in elliptic mode.
    #[serde(default)]
    pub algebra: Option<RawAlgebra>,
    /// Four basis rows of the order, in algebra coordinates.
    #[serde(default)]
    pub order_basis: Option<Vec<Vec<String>>>,
    /// Group generators, in algebra coordinates.
    #[serde(default)]
    pub generators: Option<Vec<Vec<String>>>,
    /// Base points of the upper half-plane to certify at.
    #[serde(default)]
    pub tau: Vec<RawTau>,
    /// Optional replacement for the quadratic-form matrix.
    #[serde(default)]
    pub s_override: Option<Vec<Vec<String>>>,
}

/// Construction mode selected by a spec file.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Torsion-free unit group of an order in a rational quaternion algebra.
    FalseElliptic,
    /// Split comparison family over a shear-generated base group.
    Elliptic,
    /// User-supplied data assembled without construction-time screening.
    RawKuga,
}

/// Validated spec, ready for the certificate runner.
#[derive(Debug)]
pub struct ConstructionSpec {
    /// Construction mode.
    pub mode: Mode,
    /// Congruence level for membership checks.
    pub level: u64,
    /// Scale choice for the quadratic form.
    pub scale: ScaleChoice,
    /// Number of fiber-product copies to certify.
    pub copies: usize,
    /// The order, when the mode works inside a quaternion algebra.
    pub order: Option<QuatOrder>,
    /// Group generators as quaternions.
    pub generators: Vec<Quaternion>,
    /// Base points of the upper half-plane.
    pub taus: Vec<ComplexExactScalar>,
    /// Replacement quadratic-form matrix, if requested.
    pub s_override: Option<Matrix<Rational>>,
    /// SHA-256 digest of the canonical JSON form of the raw spec.
    pub digest: String,
}

/// Renders the raw spec to canonical JSON and returns its SHA-256 digest.
pub fn spec_digest(raw: &RawSpec) -> Result<String, CliError> {
    let value = serde_json::to_value(raw)
        .map_err(|e| invalid(format!("cannot canonicalize spec: {e}")))?;
    let canonical = value.to_string();
    let mut hasher = Sha256::new();
    hasher.update(canonical.as_bytes());
    let hash = hasher.finalize();
    let mut hex = String::with_capacity(64);
    for byte in hash {
        hex.push_str(&format!("{byte:02x}"));
    }
    Ok(hex)
}

fn parse_entry(field: &str, text: &str) -> Result<Rational, CliError> {
    parse_rational(text).map_err(|e| invalid(format!("{field}: cannot parse `{text}`: {e}")))
}

fn parse_coord_rows(
    field: &str,
    rows: &[Vec<String>],
) -> Result<Vec<[Rational; 4]>, CliError> {
    let mut parsed = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        if row.len() != 4 {
            return Err(invalid(format!(
                "{field}: row {} has {} entries, expected 4",
                i + 1,
                row.len()
            )));
        }
        let mut coords = Vec::with_capacity(4);
        for text in row {
            coords.push(parse_entry(field, text)?);
        }
        let coords: [Rational; 4] = coords.try_into().expect("length checked above");
        parsed.push(coords);
    }
    Ok(parsed)
}

fn parse_tau(raw: &RawTau) -> Result<ComplexExactScalar, CliError> {
    let re = parse_entry("tau.re", &raw.re)?;
    let im = parse_entry("tau.im", &raw.im)?;
    if !im.is_positive() {
        return Err(invalid(format!(
            "tau must lie in the upper half-plane, got imaginary part {im}"
        )));
    }
    Ok(ComplexExactScalar::from_rationals(re, im))
}

/// Parses a `--tau RE,IM` command-line value into an upper half-plane point.
pub fn parse_tau_pair(text: &str) -> Result<ComplexExactScalar, CliError> {
    let Some((re_text, im_text)) = text.split_once(',') else {
        return Err(invalid(format!(
            "tau must be given as RE,IM with rational parts, got `{text}`"
        )));
    };
    parse_tau(&RawTau {
        re: re_text.trim().to_string(),
        im: im_text.trim().to_string(),
    })
}

/// Validates a raw spec into a [`ConstructionSpec`].
pub fn validate(raw: RawSpec) -> Result<ConstructionSpec, CliError> {
    let digest = spec_digest(&raw)?;
    let mode = match raw.mode.as_str() {
        "false-elliptic" => Mode::FalseElliptic,
        "elliptic" => Mode::Elliptic,
        "raw-kuga" => Mode::RawKuga,
        other => {
            return Err(invalid(format!(
                "unknown mode `{other}`; expected false-elliptic, elliptic, or raw-kuga"
            )))
        }
    };
    if raw.level == 0 {
        return Err(invalid("level must be at least 1"));
    }
    if raw.copies == 0 {
        return Err(invalid("copies must be at least 1"));
    }
    let scale = match raw.scale {
        ScaleField::Fixed(n) if n >= 1 => ScaleChoice::Fixed(BigInt::from(n)),
        ScaleField::Fixed(n) => {
            return Err(invalid(format!("scale must be positive, got {n}")))
        }
        ScaleField::Auto(ref s) if s == "auto" => ScaleChoice::Auto,
        ScaleField::Auto(ref s) => {
            return Err(invalid(format!(
                "scale must be a positive integer or the string \"auto\", got `{s}`"
            )))
        }
    };

    let needs_algebra = mode != Mode::Elliptic;
    let (order, generators) = if needs_algebra {
        let Some(raw_algebra) = raw.algebra.as_ref() else {
            return Err(invalid("this mode requires an [algebra] section"));
        };
        let a = parse_entry("algebra.a", &raw_algebra.a)?;
        let b = parse_entry("algebra.b", &raw_algebra.b)?;
        let algebra = QuaternionAlgebra::new(a, b)
            .map_err(|e| invalid(format!("algebra: {e}")))?;

        let Some(raw_basis) = raw.order_basis.as_ref() else {
            return Err(invalid("this mode requires an order_basis table"));
        };
        if raw_basis.len() != 4 {
            return Err(invalid(format!(
                "order_basis must have exactly 4 rows, got {}",
                raw_basis.len()
            )));
        }
        let rows = parse_coord_rows("order_basis", raw_basis)?;
        let row_array = [
            rows[0].clone(),
            rows[1].clone(),
            rows[2].clone(),
            rows[3].clone(),
        ];
        let order = QuatOrder::from_coord_rows(&algebra, &row_array)
            .map_err(|e| invalid(format!("order_basis: {e}")))?;

        let Some(raw_gens) = raw.generators.as_ref() else {
            return Err(invalid("this mode requires a generators table"));
        };
        if raw_gens.is_empty() {
            return Err(invalid("at least one generator is required"));
        }
        let gen_rows = parse_coord_rows("generators", raw_gens)?;
        let generators = gen_rows
            .into_iter()
            .map(|[t, u, v, w]| algebra.element(t, u, v, w))
            .collect();
        (Some(order), generators)
    } else {
        if raw.algebra.is_some() || raw.order_basis.is_some() || raw.generators.is_some() {
            return Err(invalid(
                "elliptic mode builds its own group; remove algebra, order_basis, and generators",
            ));
        }
        (None, Vec::new())
    };

    let mut taus = Vec::with_capacity(raw.tau.len());
    for raw_tau in &raw.tau {
        taus.push(parse_tau(raw_tau)?);
    }

    let s_override = match raw.s_override.as_ref() {
        None => None,
        Some(rows) => {
            let mut parsed = Vec::with_capacity(rows.len());
            for row in rows {
                let mut entries = Vec::with_capacity(row.len());
                for text in row {
                    entries.push(parse_entry("s_override", text)?);
                }
                parsed.push(entries);
            }
            let matrix = Matrix::from_rows(parsed)
                .map_err(|e| invalid(format!("s_override: {e}")))?;
            if matrix.row_count() != matrix.col_count() {
                return Err(invalid(format!(
                    "s_override must be square, got {}x{}",
                    matrix.row_count(),
                    matrix.col_count()
                )));
            }
            Some(matrix)
        }
    };

    Ok(ConstructionSpec {
        mode,
        level: raw.level,
        scale,
        copies: raw.copies as usize,
        order,
        generators,
        taus,
        s_override,
        digest,
    })
}

/// Reads, parses, and validates a spec file.
pub fn load_spec(path: &Path) -> Result<ConstructionSpec, CliError> {
    let text = std::fs::read_to_string(path)?;
    let raw: RawSpec = toml::from_str(&text)?;
    validate(raw)
}

#[cfg(test)]
mod tests {
    use super::*;

    const FEK: &str = r#"
        mode = "false-elliptic"
        level = 2

        order_basis = [
            ["1", "0", "0", "0"],
            ["0", "1/2", "0", "1/2"],
            ["1/2", "0", "1/2", "0"],
            ["0", "0", "0", "1"],
        ]

        generators = [
            ["3", "2", "0", "0"],
            ["5", "3", "0", "1"],
        ]

        [algebra]
        a = "2"
        b = "-3"

        [[tau]]
        re = "0"
        im = "1"
    "#;

    #[test]
    fn the_reference_spec_validates() {
        let raw: RawSpec = toml::from_str(FEK).unwrap();
        let spec = validate(raw).unwrap();
        assert_eq!(spec.mode, Mode::FalseElliptic);
        assert_eq!(spec.level, 2);
        assert_eq!(spec.copies, 1);
        assert!(matches!(spec.scale, ScaleChoice::Auto));
        assert_eq!(spec.generators.len(), 2);
        assert_eq!(spec.taus.len(), 1);
        assert!(spec.order.is_some());
        assert_eq!(spec.digest.len(), 64);
    }

    #[test]
    fn the_digest_is_stable_across_parses() {
        let first: RawSpec = toml::from_str(FEK).unwrap();
        let second: RawSpec = toml::from_str(FEK).unwrap();
        assert_eq!(spec_digest(&first).unwrap(), spec_digest(&second).unwrap());
    }

    #[test]
    fn the_digest_sees_semantic_changes() {
        let base: RawSpec = toml::from_str(FEK).unwrap();
        let changed: RawSpec = toml::from_str(&FEK.replace("level = 2", "level = 4")).unwrap();
        assert_ne!(spec_digest(&base).unwrap(), spec_digest(&changed).unwrap());
    }

    #[test]
    fn unknown_modes_are_rejected() {
        let raw: RawSpec =
            toml::from_str(&FEK.replace("false-elliptic", "entire-surface")).unwrap();
        let err = validate(raw).unwrap_err();
        assert!(err.to_string().contains("unknown mode"));
    }

    #[test]
    fn boundary_taus_are_rejected() {
        let raw: RawSpec = toml::from_str(&FEK.replace("im = \"1\"", "im = \"0\"")).unwrap();
        let err = validate(raw).unwrap_err();
        assert!(err.to_string().contains("upper half-plane"));
    }

    #[test]
    fn fixed_scales_must_be_positive() {
        let with_scale = FEK.replace("level = 2", "level = 2\nscale = 0");
        let raw: RawSpec = toml::from_str(&with_scale).unwrap();
        let err = validate(raw).unwrap_err();
        assert!(err.to_string().contains("positive"));
    }

    #[test]
    fn fixed_scales_parse_as_integers() {
        let with_scale = FEK.replace("level = 2", "level = 2\nscale = 6");
        let raw: RawSpec = toml::from_str(&with_scale).unwrap();
        let spec = validate(raw).unwrap();
        assert!(matches!(spec.scale, ScaleChoice::Fixed(ref n) if n == &BigInt::from(6)));
    }

    #[test]
    fn ragged_basis_rows_are_rejected() {
        let broken = FEK.replace("[\"0\", \"1/2\", \"0\", \"1/2\"]", "[\"0\", \"1/2\", \"0\"]");
        let raw: RawSpec = toml::from_str(&broken).unwrap();
        let err = validate(raw).unwrap_err();
        assert!(err.to_string().contains("expected 4"));
    }

    #[test]
    fn elliptic_specs_carry_no_algebra() {
        let text = r#"
            mode = "elliptic"
            level = 4

            [[tau]]
            re = "1/3"
            im = "2"
        "#;
        let raw: RawSpec = toml::from_str(text).unwrap();
        let spec = validate(raw).unwrap();
        assert_eq!(spec.mode, Mode::Elliptic);
        assert!(spec.order.is_none());
        assert!(spec.generators.is_empty());
    }

    #[test]
    fn elliptic_specs_reject_algebra_sections() {
        let text = r#"
            mode = "elliptic"
            level = 4

            [algebra]
            a = "1"
            b = "1"
        "#;
        let raw: RawSpec = toml::from_str(text).unwrap();
        let err = validate(raw).unwrap_err();
        assert!(err.to_string().contains("elliptic mode"));
    }

    #[test]
    fn tau_pairs_parse_from_flags() {
        let tau = parse_tau_pair("1/2, 3/2").unwrap();
        assert_eq!(format!("{tau}"), "(1/2) + (3/2)*i");
    }

    #[test]
    fn tau_pairs_need_two_parts() {
        assert!(parse_tau_pair("5").is_err());
        assert!(parse_tau_pair("1,0").is_err());
    }

    #[test]
    fn unknown_keys_fail_the_parse() {
        let text = FEK.replace("level = 2", "level = 2\nlevle = 3");
        let parsed: Result<RawSpec, _> = toml::from_str(&text);
        assert!(parsed.is_err());
    }
}
