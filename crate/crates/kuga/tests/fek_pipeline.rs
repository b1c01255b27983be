//! End-to-end run of the compact-base construction on the order with basis
//! 1, (x + xy)/2, (1 + y)/2, xy in the algebra (2, -3): build, certify the
//! structural axioms, check the torus conditions at several base points,
//! reduce the period matrix, and transport fibers along the group.

use exact_core::{rat, ratio, ComplexExactScalar, Matrix, QuadScalar, Rational};
use kuga::{
    build_false_elliptic, check_kuga_data, complex_structure, fiber_isomorphism,
    fiber_product_data, period_matrix, riemann_conditions, shimura_form_identity, BuildOutcome,
    ScaleChoice,
};
use num_bigint::BigInt;
use orders::QuatOrder;
use quaternion::{Quaternion, QuaternionAlgebra};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn fek_outcome() -> BuildOutcome {
    let algebra = QuaternionAlgebra::from_integers(2, -3).unwrap();
    let order = QuatOrder::from_coord_rows(
        &algebra,
        &[
            [rat(1), rat(0), rat(0), rat(0)],
            [rat(0), ratio(1, 2), rat(0), ratio(1, 2)],
            [ratio(1, 2), rat(0), ratio(1, 2), rat(0)],
            [rat(0), rat(0), rat(0), rat(1)],
        ],
    )
    .unwrap();
    let gens = vec![
        algebra.element_from_integers(3, 2, 0, 0),
        algebra.element_from_integers(5, 3, 0, 1),
    ];
    build_false_elliptic(&order, &gens, ScaleChoice::Auto, 3).unwrap()
}

fn sample_taus() -> Vec<ComplexExactScalar> {
    vec![
        ComplexExactScalar::i(),
        ComplexExactScalar::from_rationals(rat(1), rat(1)),
        ComplexExactScalar::from_rationals(ratio(1, 2), ratio(3, 2)),
    ]
}

#[test]
fn the_build_certifies_and_freezes_the_gram() {
    let outcome = fek_outcome();
    assert!(outcome.report.overall_pass(), "{}", outcome.report);
    assert_eq!(outcome.scale, BigInt::from(1));
    let expected = Matrix::from_rows(vec![
        vec![rat(0), rat(0), rat(3), rat(0)],
        vec![rat(0), rat(0), rat(0), rat(6)],
        vec![rat(-3), rat(0), rat(0), rat(0)],
        vec![rat(0), rat(-6), rat(0), rat(0)],
    ])
    .unwrap();
    assert_eq!(outcome.integral_gram, expected);
}

#[test]
fn torus_conditions_hold_exactly_at_every_sample_point() {
    let outcome = fek_outcome();
    for tau in sample_taus() {
        let report = riemann_conditions(&outcome.data, &tau, 64).unwrap();
        assert!(report.overall_pass(), "at {tau}: {report}");
        assert!(!report.has_numeric(), "at {tau} the check left exactness");
    }
}

#[test]
fn torus_conditions_stay_exact_at_an_irrational_point() {
    // The image of i under the first generator lies in the same field as
    // the lattice, so the certificate stays exact there too.
    let outcome = fek_outcome();
    let gamma = &outcome.data.gamma_gens()[0];
    let tau = gamma.apply(&ComplexExactScalar::i()).unwrap();
    let expected_im = QuadScalar::new(rat(17), rat(12), BigInt::from(2)).unwrap();
    assert_eq!(tau, ComplexExactScalar::new(QuadScalar::integer(0), expected_im));
    let report = riemann_conditions(&outcome.data, &tau, 64).unwrap();
    assert!(report.overall_pass(), "{report}");
    assert!(!report.has_numeric());
}

#[test]
fn the_period_matrix_reduces_with_divisors_three_and_six() {
    let outcome = fek_outcome();
    for tau in sample_taus() {
        let periods = period_matrix(&outcome.data, &tau).unwrap();
        assert_eq!(periods.delta(), &[BigInt::from(3), BigInt::from(6)]);
        assert_eq!(periods.basis_change(), &Matrix::<Rational>::identity(4));
        assert_eq!(periods.big_period().row_count(), 2);
        assert_eq!(periods.big_period().col_count(), 4);
    }
}

#[test]
fn the_first_generator_scales_the_fiber_by_its_fundamental_unit() {
    let outcome = fek_outcome();
    let data = &outcome.data;
    let gamma = &data.gamma_gens()[0];
    let tau = ComplexExactScalar::i();
    let iso = fiber_isomorphism(data, gamma, &tau).unwrap();

    // tau moves to (17 + 12 sqrt 2) i.
    let expected_im = QuadScalar::new(rat(17), rat(12), BigInt::from(2)).unwrap();
    assert_eq!(
        iso.tau_image(),
        &ComplexExactScalar::new(QuadScalar::integer(0), expected_im)
    );

    // The linear part is the scalar 3 + 2 sqrt 2.
    let unit = QuadScalar::new(rat(3), rat(2), BigInt::from(2)).unwrap();
    let phi = iso.phi();
    assert_eq!(phi[(0, 0)], ComplexExactScalar::new(unit.clone(), QuadScalar::integer(0)));
    assert_eq!(phi[(1, 1)], ComplexExactScalar::new(unit, QuadScalar::integer(0)));
    assert_eq!(phi[(0, 1)], ComplexExactScalar::from_rationals(rat(0), rat(0)));

    // The lattice transport sends the first basis vector to the coordinates
    // of the inverse generator, and is unimodular.
    let transport = iso.transport();
    let first_column: Vec<Rational> = (0..4).map(|i| transport[(i, 0)].clone()).collect();
    assert_eq!(first_column, vec![rat(3), rat(-4), rat(0), rat(2)]);
    assert_eq!(transport.det(), rat(1));
}

#[test]
fn the_complex_structure_transforms_by_conjugation() {
    // J at gamma tau equals gamma J_tau gamma^{-1} as real matrices.
    let outcome = fek_outcome();
    for tau in sample_taus() {
        let j_tau = complex_structure(&tau).unwrap();
        for gamma in outcome.data.gamma_gens() {
            let moved = gamma.apply(&tau).unwrap();
            let lhs = complex_structure(&moved).unwrap().j().clone();
            let rhs = &(gamma.matrix() * j_tau.j()) * gamma.inverse().matrix();
            assert_eq!(lhs, rhs, "conjugation fails at {tau}");
        }
    }
}

#[test]
fn both_generators_transport_every_sample_fiber() {
    let outcome = fek_outcome();
    let data = &outcome.data;
    for tau in sample_taus() {
        for gamma in data.gamma_gens() {
            let iso = fiber_isomorphism(data, gamma, &tau).unwrap();
            let det = iso.transport().det();
            assert!(det == rat(1) || det == rat(-1), "transport det {det}");
        }
    }
}

#[test]
fn the_doubled_family_still_certifies() {
    let outcome = fek_outcome();
    let doubled = fiber_product_data(&outcome.data, 2).unwrap();
    assert_eq!(doubled.g(), 4);
    let report = check_kuga_data(&doubled);
    assert!(report.overall_pass(), "{report}");
    let tau = ComplexExactScalar::i();
    let periods = period_matrix(&doubled, &tau).unwrap();
    assert_eq!(
        periods.delta(),
        &[BigInt::from(3), BigInt::from(3), BigInt::from(6), BigInt::from(6)]
    );
}

#[test]
fn the_trace_identity_holds_on_basis_pairs_and_random_elements() {
    let algebra = QuaternionAlgebra::from_integers(2, -3).unwrap();
    let basis = algebra.basis();
    for alpha in &basis {
        for beta in &basis {
            let (lhs, rhs, equal) = shimura_form_identity(alpha, beta).unwrap();
            assert!(equal, "basis pair: {lhs} vs {rhs}");
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(271828);
    let random_element = |rng: &mut ChaCha8Rng| -> Quaternion {
        let coords: Vec<Rational> = (0..4)
            .map(|_| ratio(rng.gen_range(-9..=9), rng.gen_range(1..=4)))
            .collect();
        algebra.element(
            coords[0].clone(),
            coords[1].clone(),
            coords[2].clone(),
            coords[3].clone(),
        )
    };
    for _ in 0..1000 {
        let alpha = random_element(&mut rng);
        let beta = random_element(&mut rng);
        let (lhs, rhs, equal) = shimura_form_identity(&alpha, &beta).unwrap();
        assert!(equal, "random pair: {lhs} vs {rhs}");
    }
}
