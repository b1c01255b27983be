//! Property tests: ring axioms, norm/trace/conjugation identities, embedding
//! multiplicativity, and structural facts about symbols and ramification.

use exact_core::{rat, ratio, Rational};
use proptest::prelude::*;
use quaternion::{
    classify_algebra, hilbert_symbol, ramification_set, MatrixEmbedding, Place, Quaternion,
    QuaternionAlgebra,
};

fn algebra_strategy() -> impl Strategy<Value = QuaternionAlgebra> {
    let nonzero = prop::sample::select(vec![-7i64, -6, -5, -3, -2, -1, 1, 2, 3, 5, 6, 7]);
    (nonzero.clone(), nonzero)
        .prop_map(|(a, b)| QuaternionAlgebra::from_integers(a, b).unwrap())
}

fn element_strategy(alg: QuaternionAlgebra) -> impl Strategy<Value = Quaternion> {
    let coord = (-6i64..=6, 1i64..=2).prop_map(|(n, d)| ratio(n, d));
    (coord.clone(), coord.clone(), coord.clone(), coord)
        .prop_map(move |(t, u, v, w)| alg.element(t, u, v, w))
}

fn pair_strategy() -> impl Strategy<Value = (Quaternion, Quaternion)> {
    algebra_strategy().prop_flat_map(|alg| {
        (element_strategy(alg.clone()), element_strategy(alg))
    })
}

fn triple_strategy() -> impl Strategy<Value = (Quaternion, Quaternion, Quaternion)> {
    algebra_strategy().prop_flat_map(|alg| {
        (
            element_strategy(alg.clone()),
            element_strategy(alg.clone()),
            element_strategy(alg),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn norm_is_multiplicative((p, q) in pair_strategy()) {
        let pq = p.clone() * q.clone();
        prop_assert_eq!(pq.reduced_norm(), p.reduced_norm() * q.reduced_norm());
    }

    #[test]
    fn conjugation_is_an_antihomomorphism((p, q) in pair_strategy()) {
        let lhs = (p.clone() * q.clone()).conjugate();
        let rhs = q.conjugate() * p.conjugate();
        prop_assert_eq!(lhs, rhs);
        // And the defining identities of the involution:
        let n = p.algebra().scalar(p.reduced_norm());
        prop_assert_eq!(p.clone() * p.conjugate(), n);
    }

    #[test]
    fn trace_is_symmetric((p, q) in pair_strategy()) {
        let pq = p.clone() * q.clone();
        let qp = q * p;
        prop_assert_eq!(pq.reduced_trace(), qp.reduced_trace());
    }

    #[test]
    fn multiplication_is_associative((p, q, r) in triple_strategy()) {
        let lhs = (p.clone() * q.clone()) * r.clone();
        let rhs = p * (q * r);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn multiplication_distributes((p, q, r) in triple_strategy()) {
        let lhs = p.clone() * (q.clone() + r.clone());
        let rhs = p.clone() * q + p * r;
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn embedding_is_multiplicative((p, q) in pair_strategy()) {
        if let Ok(emb) = MatrixEmbedding::new(p.algebra()) {
            let lhs = emb.image(&(p.clone() * q.clone()));
            let rhs = &emb.image(&p) * &emb.image(&q);
            prop_assert_eq!(lhs, rhs);
            prop_assert_eq!(
                emb.image(&p).det(),
                exact_core::QuadScalar::rational(p.reduced_norm())
            );
        }
    }

    #[test]
    fn symbol_is_bimultiplicative(
        a1 in prop::sample::select(vec![-6i64, -5, -3, -2, -1, 2, 3, 5, 7]),
        a2 in prop::sample::select(vec![-6i64, -5, -3, -2, -1, 2, 3, 5, 7]),
        b in prop::sample::select(vec![-6i64, -5, -3, -2, -1, 2, 3, 5, 7]),
        p in prop::sample::select(vec![2u64, 3, 5, 7, 11]),
    ) {
        let place = Place::prime(p);
        let lhs = hilbert_symbol(&rat(a1 * a2), &rat(b), &place).unwrap();
        let rhs = hilbert_symbol(&rat(a1), &rat(b), &place).unwrap()
            * hilbert_symbol(&rat(a2), &rat(b), &place).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn symbol_is_symmetric_and_square_stable(
        a in prop::sample::select(vec![-10i64, -7, -5, -3, -2, -1, 2, 3, 5, 7, 10]),
        b in prop::sample::select(vec![-10i64, -7, -5, -3, -2, -1, 2, 3, 5, 7, 10]),
        c in 1i64..=6,
        p in prop::sample::select(vec![2u64, 3, 5, 7]),
    ) {
        let place = Place::prime(p);
        prop_assert_eq!(
            hilbert_symbol(&rat(a), &rat(b), &place).unwrap(),
            hilbert_symbol(&rat(b), &rat(a), &place).unwrap()
        );
        // Multiplying an argument by a square never changes the symbol.
        prop_assert_eq!(
            hilbert_symbol(&rat(a * c * c), &rat(b), &place).unwrap(),
            hilbert_symbol(&rat(a), &rat(b), &place).unwrap()
        );
    }

    #[test]
    fn ramification_has_even_size(
        a in -50i64..=50,
        b in -50i64..=50,
    ) {
        prop_assume!(a != 0 && b != 0);
        let set = ramification_set(&rat(a), &rat(b)).unwrap();
        prop_assert_eq!(set.len() % 2, 0);
        // Classification is consistent with the set.
        let class = classify_algebra(&rat(a), &rat(b)).unwrap();
        prop_assert_eq!(class.division, !set.is_empty());
        prop_assert_eq!(class.definite, set.contains(&Place::Infinity));
    }

    #[test]
    fn product_formula_over_all_places(
        a in prop::sample::select(vec![-30i64, -15, -8, -7, -5, -3, -2, -1, 2, 3, 5, 7, 14, 30]),
        b in prop::sample::select(vec![-30i64, -15, -8, -7, -5, -3, -2, -1, 2, 3, 5, 7, 14, 30]),
    ) {
        // The symbol is +1 at all but finitely many places and the product
        // over every place is +1; equivalently the ramification set already
        // contains every place with symbol -1.
        let set = ramification_set(&rat(a), &rat(b)).unwrap();
        let product: i32 = set
            .iter()
            .map(|place| hilbert_symbol(&rat(a), &rat(b), place).unwrap())
            .product();
        prop_assert_eq!(product, 1);
    }
}

#[test]
fn norm_form_signature_matches_definiteness() {
    // For a definite algebra the reduced norm is positive definite; sample a
    // few elements of (-1, -1) and (2, -3) and compare signs.
    let definite = QuaternionAlgebra::from_integers(-1, -1).unwrap();
    for coords in [(1, 0, 0, 0), (0, 1, 0, 0), (1, 2, 3, 4), (-2, 1, -1, 3)] {
        let q = definite.element_from_integers(coords.0, coords.1, coords.2, coords.3);
        assert!(q.reduced_norm() > Rational::from_integer(0.into()));
    }
    let indefinite = QuaternionAlgebra::from_integers(2, -3).unwrap();
    let plus = indefinite.element_from_integers(1, 0, 0, 0);
    let minus = indefinite.element_from_integers(0, 1, 0, 0);
    assert!(plus.reduced_norm() > Rational::from_integer(0.into()));
    assert!(minus.reduced_norm() < Rational::from_integer(0.into()));
}
