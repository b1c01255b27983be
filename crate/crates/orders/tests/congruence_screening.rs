//! Congruence subgroup membership and torsion screening in the split
//! algebra, where the standard 2x2 integral matrix picture is available.

use exact_core::{rat, ratio};
use num_bigint::BigInt;
use orders::{
    congruence_membership, is_maximal, reduced_discriminant, torsion_screening, verify_order,
    QuatOrder, TorsionScreen,
};
use quaternion::{Quaternion, QuaternionAlgebra};

/// The order of the split algebra (1, 1) matching integral 2x2 matrices
/// under p + q*x + r*y + s*xy <-> [[p + q, r + s], [r - s, p - q]].
fn matrix_order() -> QuatOrder {
    let h = QuaternionAlgebra::from_integers(1, 1).unwrap();
    QuatOrder::from_coord_rows(
        &h,
        &[
            [ratio(1, 2), ratio(1, 2), rat(0), rat(0)],
            [rat(0), rat(0), ratio(1, 2), ratio(1, 2)],
            [rat(0), rat(0), ratio(1, 2), ratio(-1, 2)],
            [ratio(1, 2), ratio(-1, 2), rat(0), rat(0)],
        ],
    )
    .unwrap()
}

/// The quaternion standing for the shear matrix [[1, n], [0, 1]].
fn upper_shear(h: &QuaternionAlgebra, n: i64) -> Quaternion {
    h.element(rat(1), rat(0), ratio(n, 2), ratio(n, 2))
}

/// The quaternion standing for the shear matrix [[1, 0], [n, 1]].
fn lower_shear(h: &QuaternionAlgebra, n: i64) -> Quaternion {
    h.element(rat(1), rat(0), ratio(n, 2), ratio(-n, 2))
}

#[test]
fn matrix_order_is_maximal_with_unit_discriminant() {
    let order = matrix_order();
    assert_eq!(verify_order(&order), Ok(()));
    assert_eq!(reduced_discriminant(&order).unwrap(), BigInt::from(1));
    assert!(is_maximal(&order).unwrap());
}

#[test]
fn shears_satisfy_the_expected_congruences() {
    let order = matrix_order();
    let h = order.algebra().clone();
    for n in [2i64, 3, 4, 5] {
        let a = upper_shear(&h, n);
        let b = lower_shear(&h, n);
        assert_eq!(a.reduced_norm(), rat(1));
        assert_eq!(b.reduced_norm(), rat(1));
        assert!(congruence_membership(&order, &a, &BigInt::from(n)).unwrap());
        assert!(congruence_membership(&order, &b, &BigInt::from(n)).unwrap());
        // The congruence is sharp: the same elements fail at level n^2.
        assert!(!congruence_membership(&order, &a, &BigInt::from(n * n)).unwrap());
    }
}

#[test]
fn principal_congruence_generators_screen_clean() {
    let order = matrix_order();
    let h = order.algebra().clone();
    for n in [3i64, 4, 5] {
        let gens = [upper_shear(&h, n), lower_shear(&h, n)];
        match torsion_screening(&gens, 4).unwrap() {
            TorsionScreen::Clean { words_checked } => assert!(words_checked >= 160),
            other => panic!("level {n} shears generate torsion-free groups, got {other:?}"),
        }
    }
}

#[test]
fn level_one_shears_expose_torsion() {
    // [[1, 1], [0, 1]] and [[1, 0], [-1, 1]] generate the full integral
    // special linear group; their product has trace 1 and order 6, so the
    // screen must fire on a length-2 word.
    let h = QuaternionAlgebra::from_integers(1, 1).unwrap();
    let gens = [upper_shear(&h, 1), lower_shear(&h, -1)];
    match torsion_screening(&gens, 2).unwrap() {
        TorsionScreen::TorsionFound { order, word } => {
            assert_eq!(order, 6);
            assert_eq!(word.len(), 2);
        }
        other => panic!("expected torsion among short words, got {other:?}"),
    }
}
