//! Cross-checks exact sign decisions against a decimal-enclosure oracle and
//! the exact solver against a cofactor-expansion determinant.

use exact_core::{
    exact_linear_solve, qf_sign, rat, ExactError, Matrix, QuadScalar, Rational,
};
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn sign_matches_decimal_oracle(
        pn in -60i64..=60,
        pd in 1i64..=12,
        qn in -60i64..=60,
        qd in 1i64..=12,
        a in prop::sample::select(vec![2i64, 3, 5, 6, 7, 10, 13, 15]),
    ) {
        let p = rational(pn, pd);
        let q = rational(qn, qd);
        let a = BigInt::from(a);
        let got = qf_sign(&p, &q, &a);
        // 40 decimal digits are far more than needed: with these bounds any
        // nonzero value of p + q*sqrt(a) exceeds 10^-7 in magnitude.
        let expected = oracles::decimal_sign(&p, &q, &a, 40)
            .expect("oracle enclosure must resolve the sign at this size");
        prop_assert_eq!(got, expected);

        // The interval enclosure must agree whenever it commits to a sign.
        let scalar = QuadScalar::new(p, q, a).unwrap();
        if let Some(s) = scalar.enclosure(106).sign() {
            prop_assert_eq!(s, got);
        }
    }

    #[test]
    fn solver_agrees_with_cofactor_determinant(
        entries in prop::array::uniform9(-9i64..=9),
    ) {
        let a = Matrix::from_rows(
            entries
                .chunks(3)
                .map(|row| row.iter().map(|&x| rat(x)).collect())
                .collect(),
        ).unwrap();
        let rows: Vec<Vec<Rational>> = (0..3)
            .map(|i| (0..3).map(|j| a[(i, j)].clone()).collect())
            .collect();
        let det = oracles::cofactor_det(&rows);
        prop_assert_eq!(a.det(), det.clone());

        let identity = Matrix::identity(3);
        match exact_linear_solve(&a, &identity) {
            Ok(inv) => {
                prop_assert!(!det.is_zero());
                prop_assert_eq!(&a * &inv, identity);
            }
            Err(ExactError::Singular { rank }) => {
                prop_assert!(det.is_zero());
                prop_assert!(rank < 3);
            }
            Err(other) => return Err(TestCaseError::fail(format!("unexpected: {other}"))),
        }
    }
}

#[test]
fn sign_zero_cases() {
    assert_eq!(qf_sign(&rat(0), &rat(0), &BigInt::from(7)), 0);
    // Radicand 1: sign of p + q.
    assert_eq!(qf_sign(&rat(3), &rat(-3), &BigInt::from(1)), 0);
    assert_eq!(qf_sign(&rat(3), &rat(-2), &BigInt::from(1)), 1);
}
