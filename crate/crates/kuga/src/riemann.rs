//! The two Riemann-style conditions at a point tau: the form E must be
//! invariant under the complex structure, and the associated symmetric
//! pairing must be positive definite.
//!
//! When every scalar lies in a single quadratic field the checks run in
//! exact arithmetic; otherwise they fall back to certified interval
//! enclosures, reporting `numeric-pass` instead of `pass`.

use exact_core::{ComplexExactScalar, Matrix, QuadScalar};
use num_bigint::BigInt;
use num_traits::One;

use crate::data::KugaData;
use crate::error::KugaError;
use crate::form::{j2, symplectic_form_e};
use crate::numeric::{width_label, IntervalMatrix};
use crate::report::CertificateReport;
use crate::structure::complex_structure;

fn matrix_radicand(m: &Matrix<QuadScalar>) -> Result<BigInt, KugaError> {
    let mut radicand = BigInt::one();
    for entry in m.entries() {
        if entry.radicand().is_one() {
            continue;
        }
        if radicand.is_one() {
            radicand = entry.radicand().clone();
        } else if radicand != *entry.radicand() {
            return Err(KugaError::MixedFields(format!(
                "matrix mixes sqrt({}) with sqrt({})",
                radicand,
                entry.radicand()
            )));
        }
    }
    Ok(radicand)
}

/// Certifies both conditions at `tau`, with `bits` of precision on the
/// interval fallback path.
pub fn riemann_conditions(
    data: &KugaData,
    tau: &ComplexExactScalar,
    bits: u32,
) -> Result<CertificateReport, KugaError> {
    let structure = complex_structure(tau)?;
    let j_inv = structure.j_inverse();
    let data_radicand = data.unified_radicand()?;
    let j_radicand = matrix_radicand(&j_inv)?;
    let exact = data_radicand.is_one() || j_radicand.is_one() || data_radicand == j_radicand;
    if exact {
        exact_conditions(data, &j_inv)
    } else {
        interval_conditions(data, &j_inv, bits)
    }
}

fn exact_conditions(
    data: &KugaData,
    j_inv: &Matrix<QuadScalar>,
) -> Result<CertificateReport, KugaError> {
    let mut report = CertificateReport::new();
    let s = data.s();
    let lattice = data.lattice();
    let n = lattice.len();
    let rotated: Vec<Matrix<QuadScalar>> = lattice.iter().map(|alpha| alpha * j_inv).collect();

    // E(alpha J^{-1}, beta J^{-1}) = E(alpha, beta) on all pairs.
    let mut offender = None;
    'compat: for i in 0..n {
        for j in 0..n {
            let lhs = symplectic_form_e(s, &rotated[i], &rotated[j])?;
            let rhs = symplectic_form_e(s, &lattice[i], &lattice[j])?;
            if lhs != rhs {
                offender = Some((i, j, lhs, rhs));
                break 'compat;
            }
        }
    }
    match offender {
        None => report.pass("riemann-compatibility"),
        Some((i, j, lhs, rhs)) => report.fail(
            "riemann-compatibility",
            format!(
                "pair ({}, {}): E after rotation is {lhs}, before is {rhs}",
                i + 1,
                j + 1
            ),
        ),
    }

    // The pairing G_kl = E(alpha_k, alpha_l J^{-1}) must be symmetric and
    // positive definite.
    let gram = Matrix::from_fn(n, n, |k, l| {
        symplectic_form_e(s, &lattice[k], &rotated[l]).expect("shapes validated above")
    });
    let mut asym = None;
    'sym: for k in 0..n {
        for l in k + 1..n {
            if gram[(k, l)] != gram[(l, k)] {
                asym = Some((k, l));
                break 'sym;
            }
        }
    }
    match asym {
        None => report.pass("riemann-gram-symmetric"),
        Some((k, l)) => report.fail(
            "riemann-gram-symmetric",
            format!(
                "entries ({}, {}) and ({}, {}) differ: {} vs {}",
                k + 1,
                l + 1,
                l + 1,
                k + 1,
                gram[(k, l)],
                gram[(l, k)]
            ),
        ),
    }
    let mut bad_minor = None;
    for k in 1..=n {
        let minor = gram.leading_principal_minor(k);
        if minor.sign() <= 0 {
            bad_minor = Some((k, minor));
            break;
        }
    }
    match bad_minor {
        None => report.pass("riemann-positivity"),
        Some((k, minor)) => report.fail(
            "riemann-positivity",
            format!("leading minor {k} is {minor}, not positive"),
        ),
    }
    Ok(report)
}

fn interval_conditions(
    data: &KugaData,
    j_inv: &Matrix<QuadScalar>,
    bits: u32,
) -> Result<CertificateReport, KugaError> {
    let mut report = CertificateReport::new();
    let s = IntervalMatrix::enclose(data.s(), bits);
    let j2_enc = IntervalMatrix::enclose(&j2(), bits);
    let j_inv_enc = IntervalMatrix::enclose(j_inv, bits);
    let lattice: Vec<IntervalMatrix> = data
        .lattice()
        .iter()
        .map(|alpha| IntervalMatrix::enclose(alpha, bits))
        .collect();
    let rotated: Vec<IntervalMatrix> = lattice.iter().map(|a| a.mul(&j_inv_enc)).collect();
    let n = lattice.len();
    let form = |alpha: &IntervalMatrix, beta: &IntervalMatrix| {
        alpha.transpose().mul(&s).mul(beta).mul(&j2_enc).trace()
    };

    // Compatibility: the difference must be consistent with zero everywhere,
    // and a sign certified away from zero disproves it outright.
    let mut max_width = exact_core::Rational::from_integer(0.into());
    let mut refuted = None;
    for i in 0..n {
        for j in 0..n {
            let diff = form(&rotated[i], &rotated[j]) - form(&lattice[i], &lattice[j]);
            if let Some(sign) = diff.sign() {
                if sign != 0 && refuted.is_none() {
                    refuted = Some((i, j, diff.clone()));
                }
            }
            if diff.width() > max_width {
                max_width = diff.width();
            }
        }
    }
    match refuted {
        Some((i, j, diff)) => report.fail(
            "riemann-compatibility",
            format!(
                "pair ({}, {}): difference enclosure [{}, {}] excludes zero",
                i + 1,
                j + 1,
                exact_core::format_rational(diff.lo()),
                exact_core::format_rational(diff.hi())
            ),
        ),
        None => report.numeric_pass(
            "riemann-compatibility",
            format!(
                "consistent with zero at {bits} bits; max enclosure width {}",
                width_label(&max_width)
            ),
        ),
    }

    // Gram symmetry and positivity on enclosures.
    let gram_entries: Vec<Vec<_>> = (0..n)
        .map(|k| (0..n).map(|l| form(&lattice[k], &rotated[l])).collect())
        .collect();
    let mut sym_refuted = None;
    let mut sym_width = exact_core::Rational::from_integer(0.into());
    for k in 0..n {
        for l in k + 1..n {
            let diff = gram_entries[k][l].clone() - gram_entries[l][k].clone();
            if let Some(sign) = diff.sign() {
                if sign != 0 && sym_refuted.is_none() {
                    sym_refuted = Some((k, l));
                }
            }
            if diff.width() > sym_width {
                sym_width = diff.width();
            }
        }
    }
    match sym_refuted {
        Some((k, l)) => report.fail(
            "riemann-gram-symmetric",
            format!(
                "entries ({}, {}) and ({}, {}) certifiably differ",
                k + 1,
                l + 1,
                l + 1,
                k + 1
            ),
        ),
        None => report.numeric_pass(
            "riemann-gram-symmetric",
            format!(
                "symmetric within enclosures at {bits} bits; max width {}",
                width_label(&sym_width)
            ),
        ),
    }

    let gram = IntervalMatrix::from_entries(
        n,
        n,
        gram_entries.iter().flatten().cloned().collect(),
    );
    let mut verdict = PositivityVerdict::AllPositive;
    for k in 1..=n {
        let minor = gram.leading_minor(k);
        match minor.sign() {
            Some(1) => continue,
            Some(_) => {
                verdict = PositivityVerdict::Refuted(k, minor);
                break;
            }
            None => {
                verdict = PositivityVerdict::Inconclusive(k, minor);
                break;
            }
        }
    }
    match verdict {
        PositivityVerdict::AllPositive => report.numeric_pass(
            "riemann-positivity",
            format!("all {n} leading minors certified positive at {bits} bits"),
        ),
        PositivityVerdict::Refuted(k, minor) => report.fail(
            "riemann-positivity",
            format!(
                "leading minor {k} enclosure [{}, {}] is certifiably non-positive",
                exact_core::format_rational(minor.lo()),
                exact_core::format_rational(minor.hi())
            ),
        ),
        PositivityVerdict::Inconclusive(k, minor) => report.warn(
            "riemann-positivity",
            format!(
                "inconclusive at {bits} bits: leading minor {k} enclosure straddles zero (width {}); raise the precision",
                width_label(&minor.width())
            ),
        ),
    }
    Ok(report)
}

enum PositivityVerdict {
    AllPositive,
    Refuted(usize, exact_core::RatInterval),
    Inconclusive(usize, exact_core::RatInterval),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fuchsian::FuchsianElement;
    use exact_core::{rat, ratio};
    use quaternion::{MatrixEmbedding, QuaternionAlgebra};

    fn toy_data() -> KugaData {
        let h = QuaternionAlgebra::from_integers(1, 1).unwrap();
        let e = MatrixEmbedding::new(&h).unwrap();
        KugaData::new(
            1,
            vec![FuchsianElement::identity(&e)],
            vec![Matrix::identity(1)],
            vec![
                Matrix::from_rows(vec![vec![QuadScalar::integer(1), QuadScalar::integer(0)]])
                    .unwrap(),
                Matrix::from_rows(vec![vec![QuadScalar::integer(0), QuadScalar::integer(1)]])
                    .unwrap(),
            ],
            Matrix::identity(1),
        )
        .unwrap()
    }

    #[test]
    fn exact_pass_at_the_three_sample_points() {
        let data = toy_data();
        for (re, im) in [(rat(0), rat(1)), (rat(1), rat(1)), (ratio(1, 2), ratio(3, 2))] {
            let tau = ComplexExactScalar::from_rationals(re, im);
            let report = riemann_conditions(&data, &tau, 106).unwrap();
            assert!(report.overall_pass(), "{report}");
            assert!(!report.has_numeric());
        }
    }

    #[test]
    fn irrational_tau_in_the_same_field_stays_exact() {
        let data = toy_data();
        let im = QuadScalar::new(rat(17), rat(12), 2.into()).unwrap();
        let tau = ComplexExactScalar::new(QuadScalar::integer(0), im);
        let report = riemann_conditions(&data, &tau, 106).unwrap();
        assert!(report.overall_pass(), "{report}");
        assert!(!report.has_numeric());
    }

    #[test]
    fn mixed_fields_fall_back_to_certified_intervals() {
        // Lattice over sqrt(2), tau over sqrt(3): no common quadratic field.
        let h = QuaternionAlgebra::from_integers(1, 1).unwrap();
        let e = MatrixEmbedding::new(&h).unwrap();
        let root2 = QuadScalar::new(rat(0), rat(1), 2.into()).unwrap();
        let data = KugaData::new(
            1,
            vec![FuchsianElement::identity(&e)],
            vec![Matrix::identity(1)],
            vec![
                Matrix::from_rows(vec![vec![QuadScalar::integer(1), QuadScalar::integer(0)]])
                    .unwrap(),
                Matrix::from_rows(vec![vec![QuadScalar::integer(0), root2]]).unwrap(),
            ],
            Matrix::identity(1),
        )
        .unwrap();
        let im = QuadScalar::new(rat(0), rat(1), 3.into()).unwrap();
        let tau = ComplexExactScalar::new(QuadScalar::integer(0), im);
        let report = riemann_conditions(&data, &tau, 106).unwrap();
        assert!(report.overall_pass(), "{report}");
        assert!(report.has_numeric());
    }

    #[test]
    fn sign_flip_in_s_is_refuted() {
        // Negating S makes the pairing negative definite; positivity fails.
        let h = QuaternionAlgebra::from_integers(1, 1).unwrap();
        let e = MatrixEmbedding::new(&h).unwrap();
        let data = KugaData::new(
            1,
            vec![FuchsianElement::identity(&e)],
            vec![Matrix::identity(1)],
            vec![
                Matrix::from_rows(vec![vec![QuadScalar::integer(1), QuadScalar::integer(0)]])
                    .unwrap(),
                Matrix::from_rows(vec![vec![QuadScalar::integer(0), QuadScalar::integer(1)]])
                    .unwrap(),
            ],
            Matrix::from_rows(vec![vec![QuadScalar::integer(-1)]]).unwrap(),
        )
        .unwrap();
        let tau = ComplexExactScalar::i();
        let report = riemann_conditions(&data, &tau, 106).unwrap();
        assert!(!report.overall_pass());
        let entry = report.first_failure().unwrap();
        assert_eq!(entry.name, "riemann-positivity");
        assert!(entry.witness.as_deref().unwrap().contains("leading minor 1"));
    }

    #[test]
    fn real_tau_is_an_input_error() {
        let data = toy_data();
        let tau = ComplexExactScalar::from_rationals(rat(1), rat(0));
        assert!(matches!(
            riemann_conditions(&data, &tau, 106),
            Err(KugaError::TauNotInUpperHalfPlane(_))
        ));
    }
}
