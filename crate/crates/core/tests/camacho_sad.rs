use num_bigint::BigInt;
use phicycle_core::{
    cs_sum_check, cycle_matrix, lemma_scan, obstruction_sweep, phi_map, propagate_cycle, reciprocal_pair_check,
    trivial_log_tangent_obstruction, CurveIndexRecord, DefinitenessVerdict, ProjectivePoint, Rational,
    StepSequence, SweepBounds,
};
use proptest::prelude::*;

fn point() -> impl Strategy<Value = ProjectivePoint> {
    prop_oneof![
        1 => Just(ProjectivePoint::infinity()),
        9 => (-30i64..=30, 1i64..=15).prop_map(|(n, d)| ProjectivePoint::new(n, d).unwrap()),
    ]
}

fn steps() -> impl Strategy<Value = StepSequence> {
    proptest::collection::vec(-6i64..=6, 1..=8).prop_map(|e| StepSequence::from_i64s(&e).unwrap())
}

proptest! {
    #[test]
    fn propagation_agrees_with_phi_map(e in steps(), x0 in point()) {
        let p = propagate_cycle(&e, &x0);
        prop_assert_eq!(p.trace.len(), e.len() + 1);
        prop_assert_eq!(p.end(), &phi_map(&e).apply(&x0));
        prop_assert_eq!(p.closes(), phi_map(&e).apply(&x0) == x0);
    }

    /// Each step is `x ↦ e_i − x` followed by the projective reciprocal.
    #[test]
    fn steps_factor_through_reciprocal(e in steps(), x0 in point()) {
        let p = propagate_cycle(&e, &x0);
        for (i, ei) in e.steps().iter().enumerate() {
            let x = &p.trace[i];
            let shifted = ProjectivePoint::new(ei * x.v() - x.u(), x.v().clone()).unwrap();
            prop_assert!(reciprocal_pair_check(&shifted, &p.trace[i + 1]));
        }
    }

    #[test]
    fn sum_check_accepts_exact_and_rejects_perturbed(
        e in -6i64..=6,
        parts in proptest::collection::vec((-20i64..=20, 1i64..=9), 0..5),
        delta in (1i64..=7, 1i64..=7),
    ) {
        let mut indices: Vec<Rational> = parts.iter().map(|&(n, d)| Rational::new(n, d).unwrap()).collect();
        let partial: Rational = indices.iter().sum();
        indices.push(Rational::from_integer(e) - partial);
        let good = CurveIndexRecord { self_intersection: e.into(), indices: indices.clone() };
        prop_assert!(cs_sum_check(&good));

        let mut bad = good.clone();
        let last = bad.indices.len() - 1;
        bad.indices[last] = &bad.indices[last] + &Rational::new(delta.0, delta.1).unwrap();
        prop_assert!(!cs_sum_check(&bad));
    }
}

#[test]
fn r2_cycle_uses_double_intersection() {
    let m = cycle_matrix(&StepSequence::from_i64s(&[-3, -5]).unwrap()).unwrap();
    assert_eq!(m.get(0, 1), &BigInt::from(2));
    assert_eq!(m.get(1, 0), &BigInt::from(2));
}

#[test]
fn r4_cycle_has_no_diagonal_adjacency() {
    let m = cycle_matrix(&StepSequence::from_i64s(&[-2, -3, -4, -5]).unwrap()).unwrap();
    assert_eq!(m.get(0, 2), &BigInt::from(0));
    assert_eq!(m.get(1, 3), &BigInt::from(0));
    assert_eq!(m.get(0, 3), &BigInt::from(1));
}

/// Whenever the all-orderings identity holds in a box, the steps are a
/// constant in {−1, 0, 1} and the cycle is not negative definite.
#[test]
fn identity_forces_non_definite_cycle() {
    for r in 2..=6 {
        for e in lemma_scan(r, 3, 8).unwrap() {
            assert!(e.is_constant());
            let v = e.to_i64s().unwrap()[0];
            assert!((-1..=1).contains(&v));
            assert_ne!(cycle_matrix(&e).unwrap().definiteness(), DefinitenessVerdict::NegativeDefinite);
            let verdict = trivial_log_tangent_obstruction(&e).unwrap();
            assert!(verdict.permutation_identity && !verdict.obstructed);
        }
    }
}

#[test]
fn sweep_finds_no_obstruction() {
    let bounds = SweepBounds { r_min: 2, r_max: 5, e_min: -5, e_max: -1 };
    let s = obstruction_sweep(bounds, 8).unwrap();
    assert_eq!(s.checked, 25 + 125 + 625 + 3125);
    assert!(s.counterexamples.is_empty());
    // (−1,−1,−1) is the only identity tuple among negative steps for r ≤ 5
    assert_eq!(s.permutation_identity, 1);
    assert!(s.negative_definite > 0);
}

#[test]
fn sweep_is_independent_of_worker_count() {
    let bounds = SweepBounds { r_min: 2, r_max: 4, e_min: -3, e_max: 1 };
    let one = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let many = rayon::ThreadPoolBuilder::new().num_threads(3).build().unwrap();
    assert_eq!(one.install(|| obstruction_sweep(bounds, 8)), many.install(|| obstruction_sweep(bounds, 8)));
}
