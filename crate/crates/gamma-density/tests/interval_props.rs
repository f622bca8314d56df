//! Property tests for the exact interval algebra: measure laws,
//! translation invariance, trace additivity, and complement involution.

use gamma_density::interval::{IntervalSet, Side};
use gamma_density::rational::{rat, Rational};
use num_traits::Zero;
use proptest::prelude::*;

fn rational_strategy() -> impl Strategy<Value = Rational> {
    (-64i64..=64, 1i64..=8).prop_map(|(n, d)| rat(n, d))
}

/// Arbitrary normalized union of at most 5 bounded components.
fn set_strategy() -> impl Strategy<Value = IntervalSet> {
    proptest::collection::btree_set(rational_strategy(), 2..=10).prop_map(|endpoints| {
        let v: Vec<Rational> = endpoints.into_iter().collect();
        let pairs = v.chunks_exact(2).map(|w| (w[0].clone(), w[1].clone())).collect();
        IntervalSet::normalize(pairs).expect("sorted distinct endpoints")
    })
}

proptest! {
    #[test]
    fn inclusion_exclusion(a in set_strategy(), b in set_strategy()) {
        let lhs = a.union(&b).measure_finite() + a.intersect(&b).measure_finite();
        let rhs = a.measure_finite() + b.measure_finite();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn symmetric_difference_measure(a in set_strategy(), b in set_strategy()) {
        let sym = a.symmetric_difference(&b).measure_finite();
        let expect = a.union(&b).measure_finite() - a.intersect(&b).measure_finite();
        prop_assert_eq!(sym, expect);
    }

    #[test]
    fn translation_preserves_measure_and_membership(
        a in set_strategy(),
        z in rational_strategy(),
        x in rational_strategy(),
    ) {
        let shifted = a.translate(&z);
        prop_assert_eq!(a.measure_finite(), shifted.measure_finite());
        prop_assert_eq!(a.contains(&x), shifted.contains(&(&x + &z)));
    }

    #[test]
    fn trace_sides_add_up(
        a in set_strategy(),
        x in rational_strategy(),
        hk in 1i32..=12,
    ) {
        let h = rat(1, 1 << hk);
        let both = a.trace_measure(&x, &h, Side::Both).unwrap();
        let left = a.trace_measure(&x, &h, Side::Left).unwrap();
        let right = a.trace_measure(&x, &h, Side::Right).unwrap();
        prop_assert_eq!(both, left + right);
    }

    #[test]
    fn trace_bounded_by_window_and_monotone(
        a in set_strategy(),
        x in rational_strategy(),
        hk in 1i32..=10,
    ) {
        let h = rat(1, 1 << hk);
        let h2 = &h / rat(2, 1);
        let m = a.trace_measure(&x, &h, Side::Both).unwrap();
        let m2 = a.trace_measure(&x, &h2, Side::Both).unwrap();
        prop_assert!(m >= Rational::zero());
        prop_assert!(m <= rat(2, 1) * &h);
        prop_assert!(m2 <= m);
    }

    #[test]
    fn complement_involution(a in set_strategy()) {
        prop_assert_eq!(a.complement().complement(), a);
    }

    #[test]
    fn complement_traces_partition_window(
        a in set_strategy(),
        x in rational_strategy(),
        hk in 1i32..=10,
    ) {
        let h = rat(1, 1 << hk);
        let m = a.trace_measure(&x, &h, Side::Both).unwrap();
        let mc = a.complement().trace_measure(&x, &h, Side::Both).unwrap();
        prop_assert_eq!(m + mc, rat(2, 1) * &h);
    }

    #[test]
    fn union_intersect_lattice(a in set_strategy(), b in set_strategy(), x in rational_strategy()) {
        prop_assert_eq!(a.union(&b).contains(&x), a.contains(&x) || b.contains(&x));
        prop_assert_eq!(a.intersect(&b).contains(&x), a.contains(&x) && b.contains(&x));
    }

    #[test]
    fn json_round_trip(a in set_strategy()) {
        let v = a.to_json();
        let back = IntervalSet::from_json(&v).expect("round trip");
        prop_assert_eq!(back, a);
    }
}
