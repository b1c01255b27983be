//! Cross-operation identities of the scalar ledger: the profile closes the
//! second Chern gap in every dimension, the Arakelov gap is linear in its
//! two inputs with the expected slopes, and the slope comparison is strict
//! exactly above dimension one.

use chern_ledger::{
    arakelov_gap, chen_ogiue_gap, chern_profile, relative_canonical_factors, slope_forces_curve,
    FibrationProfile,
};
use exact_core::{rat, ratio, Rational};
use proptest::prelude::*;

#[test]
fn every_profile_up_to_dimension_thirty_closes_the_gap() {
    for m in 2..=30 {
        let profile = chern_profile(m).unwrap();
        let c1sq = profile.coefficient(1) * profile.coefficient(1);
        let gap = chen_ogiue_gap(m, &c1sq, profile.coefficient(2)).unwrap();
        assert_eq!(gap, rat(0), "dimension {m}");
    }
}

#[test]
fn the_extremal_case_pairs_with_its_canonical_factors() {
    // With m = 3, n = 1 the Hodge factor is 1, so deg E = deg K of a genus-2
    // curve is 2, and the Arakelov gap closes.
    let (deg_e_factor, canonical_factor) = relative_canonical_factors(3, 1).unwrap();
    assert_eq!(deg_e_factor, rat(1));
    assert_eq!(canonical_factor, rat(2));
    let deg_k = rat(2); // 2 genus - 2 at genus 2
    let profile = FibrationProfile::new(3, 1, deg_e_factor * deg_k, 2).unwrap();
    assert_eq!(arakelov_gap(&profile), rat(0));
}

#[test]
fn slope_comparison_is_strict_for_higher_dimensional_bases() {
    let (lhs, rhs, equal) = slope_forces_curve(1).unwrap();
    assert!(equal);
    assert_eq!(lhs, rhs);
    for n in 2..=10 {
        let (lhs, rhs, equal) = slope_forces_curve(n).unwrap();
        assert!(!equal);
        assert!(lhs > rhs, "n = {n}: {lhs} vs {rhs}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn arakelov_gap_is_linear_in_the_hodge_degree(
        m in 2u32..8,
        genus in 2u32..8,
        deg_num in -20i64..=20,
        step in 1i64..=5,
    ) {
        let base = FibrationProfile::new(m, 1, ratio(deg_num, 2), genus).unwrap();
        let shifted =
            FibrationProfile::new(m, 1, ratio(deg_num, 2) + rat(step), genus).unwrap();
        let difference = arakelov_gap(&shifted) - arakelov_gap(&base);
        prop_assert_eq!(difference, rat(-2 * step));
    }

    #[test]
    fn arakelov_gap_is_linear_in_the_genus(
        m in 2u32..8,
        genus in 2u32..8,
        deg_num in -20i64..=20,
    ) {
        let deg_e: Rational = ratio(deg_num, 3);
        let base = FibrationProfile::new(m, 1, deg_e.clone(), genus).unwrap();
        let shifted = FibrationProfile::new(m, 1, deg_e, genus + 1).unwrap();
        let difference = arakelov_gap(&shifted) - arakelov_gap(&base);
        prop_assert_eq!(difference, rat(2 * (i64::from(m) - 1)));
    }

    #[test]
    fn profile_coefficients_start_with_ones_and_shrink(m in 1u32..24) {
        let profile = chern_profile(m).unwrap();
        prop_assert_eq!(profile.coefficient(0), &rat(1));
        prop_assert_eq!(profile.coefficient(1), &rat(1));
        for r in 1..=m as usize {
            prop_assert!(profile.coefficient(r) <= profile.coefficient(r - 1));
        }
    }
}
