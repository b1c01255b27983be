//! The split (non-cocompact) analogue of the quaternionic construction:
//! the base group is generated by shears of a given level acting on the
//! upper half plane, and the fiber lattice is the square lattice with the
//! standard symplectic pairing, so every fiber is an honest elliptic curve.

use exact_core::{rat, ratio, Matrix, QuadScalar};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use quaternion::{MatrixEmbedding, Quaternion, QuaternionAlgebra};

use orders::{format_word, torsion_screening, QuatOrder, TorsionScreen};

use crate::data::{check_kuga_data, KugaData};
use crate::error::KugaError;
use crate::false_elliptic::BuildOutcome;
use crate::form::{e_gram, symplectic_form_e};
use crate::fuchsian::FuchsianElement;
use crate::report::CertificateReport;

/// The order in the split algebra (1, 1) mapping onto the integer 2x2
/// matrices: its basis rows are the coordinates of the four elementary
/// matrices under the embedding.
pub fn split_matrix_order(algebra: &QuaternionAlgebra) -> Result<QuatOrder, KugaError> {
    QuatOrder::from_coord_rows(
        algebra,
        &[
            [ratio(1, 2), ratio(1, 2), rat(0), rat(0)],
            [rat(0), rat(0), ratio(1, 2), ratio(1, 2)],
            [rat(0), rat(0), ratio(1, 2), ratio(-1, 2)],
            [ratio(1, 2), ratio(-1, 2), rat(0), rat(0)],
        ],
    )
    .map_err(KugaError::Order)
}

/// The quaternion whose matrix image is the upper shear [[1, n], [0, 1]].
fn upper_shear(algebra: &QuaternionAlgebra, n: i64) -> Quaternion {
    algebra.element(rat(1), rat(0), ratio(n, 2), ratio(n, 2))
}

/// The quaternion whose matrix image is the lower shear [[1, 0], [n, 1]].
fn lower_shear(algebra: &QuaternionAlgebra, n: i64) -> Quaternion {
    algebra.element(rat(1), rat(0), ratio(n, 2), ratio(-n, 2))
}

/// Builds the level-`level` shear family over the square fiber lattice,
/// screening generator words up to `screening_radius` for torsion.
pub fn build_elliptic_family(
    level: u64,
    screening_radius: usize,
) -> Result<BuildOutcome, KugaError> {
    if level < 3 {
        return Err(KugaError::LevelTooSmall(level));
    }
    let algebra = QuaternionAlgebra::from_integers(1, 1).expect("(1, 1) is a valid pair");
    let embedding = MatrixEmbedding::new(&algebra)?;
    let n = i64::try_from(level).map_err(|_| KugaError::LevelTooSmall(u64::MAX))?;
    let gens = vec![upper_shear(&algebra, n), lower_shear(&algebra, n)];
    match torsion_screening(&gens, screening_radius).map_err(KugaError::Order)? {
        TorsionScreen::TorsionFound { word, order } => {
            return Err(KugaError::TorsionInGenerators {
                word: format_word(&word),
                order,
            })
        }
        TorsionScreen::Clean { .. } => {}
    }
    let fuchsian: Vec<FuchsianElement> = gens
        .into_iter()
        .map(|g| FuchsianElement::new(&embedding, g))
        .collect::<Result<_, _>>()?;
    let lattice = vec![
        Matrix::from_rows(vec![vec![QuadScalar::integer(1), QuadScalar::integer(0)]]).unwrap(),
        Matrix::from_rows(vec![vec![QuadScalar::integer(0), QuadScalar::integer(1)]]).unwrap(),
    ];
    let s = Matrix::identity(1);
    let rho_images = vec![Matrix::identity(1); fuchsian.len()];

    let mut lcm = BigInt::one();
    for alpha in &lattice {
        for beta in &lattice {
            let value = symplectic_form_e(&s, alpha, beta)?;
            let rational = value.to_rational().ok_or_else(|| {
                KugaError::MixedFields(format!(
                    "E takes the irrational value {value} on the lattice"
                ))
            })?;
            lcm = lcm.lcm(rational.denom());
        }
    }
    let data = KugaData::new(1, fuchsian, rho_images, lattice, s)?;
    let mut report = CertificateReport::new();
    report.warn(
        "base-cocompactness",
        "the base group is generated by shears, so the base is not cocompact",
    );
    report.merge(check_kuga_data(&data));
    let integral_gram = e_gram(&data)?;
    Ok(BuildOutcome {
        data,
        report,
        scale: BigInt::one(),
        denominator_lcm: lcm,
        integral_gram,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;
    use exact_core::ComplexExactScalar;

    #[test]
    fn level_three_family_certifies_with_a_cocompactness_warning() {
        let outcome = build_elliptic_family(3, 3).unwrap();
        assert!(outcome.report.overall_pass(), "{}", outcome.report);
        assert!(outcome
            .report
            .entries()
            .iter()
            .any(|e| e.name == "base-cocompactness" && e.status == Status::Warning));
        let expected = Matrix::from_rows(vec![
            vec![rat(0), rat(-1)],
            vec![rat(1), rat(0)],
        ])
        .unwrap();
        assert_eq!(outcome.integral_gram, expected);
        assert_eq!(outcome.scale, BigInt::one());
    }

    #[test]
    fn small_levels_are_rejected() {
        match build_elliptic_family(2, 2) {
            Err(KugaError::LevelTooSmall(level)) => assert_eq!(level, 2),
            other => panic!("expected LevelTooSmall, got {other:?}"),
        }
    }

    #[test]
    fn the_upper_shear_translates_the_base_point() {
        let outcome = build_elliptic_family(4, 2).unwrap();
        let tau = ComplexExactScalar::i();
        let moved = outcome.data.gamma_gens()[0].apply(&tau).unwrap();
        assert_eq!(
            moved,
            ComplexExactScalar::from_rationals(rat(4), rat(1))
        );
    }

    #[test]
    fn the_split_order_really_is_the_integer_matrices() {
        let algebra = QuaternionAlgebra::from_integers(1, 1).unwrap();
        let order = split_matrix_order(&algebra).unwrap();
        let embedding = MatrixEmbedding::new(&algebra).unwrap();
        let images: Vec<_> = order.basis().iter().map(|e| embedding.image(e)).collect();
        // E11 + E22 = identity, and every entry of every image is integral.
        let sum = &images[0] + &images[3];
        assert_eq!(sum, Matrix::identity(2));
        for image in &images {
            for row in 0..2 {
                for col in 0..2 {
                    let value = image[(row, col)].to_rational().unwrap();
                    assert!(value.is_integer());
                }
            }
        }
    }
}
