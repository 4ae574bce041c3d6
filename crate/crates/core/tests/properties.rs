use proptest::prelude::*;

use oscillating_tableaux::bijection::{
    odd_bound_expand, odd_bound_reduce, oscillating_to_syt, syt_to_oscillating,
};
use oscillating_tableaux::counting::{
    bessel_count, chain_count, count_oscillating, hook_length_count,
};
use oscillating_tableaux::growth::rs_correspondence;
use oscillating_tableaux::insertion::rsk_matrix;
use oscillating_tableaux::jdt::{
    eject_to_semistandard, eject_to_standard, inject_markers_semistandard, inject_markers_standard,
};
use oscillating_tableaux::{Partition, StandardTableau, StripType};

fn arb_partition() -> impl Strategy<Value = Partition> {
    proptest::collection::vec(0usize..6, 0..6).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

/// Insertion tableau of a random permutation; every shape of size `n` occurs.
fn arb_syt(max_n: usize) -> impl Strategy<Value = StandardTableau> {
    (0..=max_n)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|perm| rs_correspondence(&perm).unwrap().0)
}

fn minimal_k(t: &StandardTableau) -> usize {
    t.shape().len().div_ceil(2).max(1)
}

proptest! {
    #[test]
    fn conjugation_is_an_involution(p in arb_partition()) {
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().size(), p.size());
    }

    #[test]
    fn strip_types_swap_under_conjugation(a in arb_partition(), b in arb_partition()) {
        let (mu, lambda) = (a.intersection(&b), a.union(&b));
        let kind = mu.strip_type(&lambda);
        let dual = mu.conjugate().strip_type(&lambda.conjugate());
        prop_assert_eq!(kind.is_horizontal(), dual.is_vertical());
        prop_assert_eq!(kind.is_vertical(), dual.is_horizontal());
        prop_assert_ne!(kind, StripType::NotContained);
    }

    #[test]
    fn lattice_operations_bound_both(a in arb_partition(), b in arb_partition()) {
        let (lo, hi) = (a.intersection(&b), a.union(&b));
        prop_assert!(lo.is_contained_in(&a) && lo.is_contained_in(&b));
        prop_assert!(a.is_contained_in(&hi) && b.is_contained_in(&hi));
        prop_assert_eq!(lo.size() + hi.size(), a.size() + b.size());
    }

    #[test]
    fn hook_lengths_count_chains(p in arb_partition()) {
        prop_assert_eq!(hook_length_count(&p), chain_count(&p));
    }

    #[test]
    fn marker_injection_inverts(t in arb_syt(9)) {
        let aug = inject_markers_standard(&t).unwrap();
        prop_assert_eq!(aug.markers(), t.shape().column_stats().num_odd_columns);
        prop_assert!(aug.shape().column_stats().num_odd_columns == 0);
        prop_assert_eq!(eject_to_standard(&aug).unwrap(), t);
    }

    #[test]
    fn semistandard_marker_injection_inverts(
        a in (1usize..4, 1usize..5).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec(0usize..3, c), r)
        })
    ) {
        let (t, _) = rsk_matrix(&a);
        let aug = inject_markers_semistandard(&t).unwrap();
        prop_assert!(aug.shape().column_stats().num_odd_columns == 0);
        prop_assert_eq!(eject_to_semistandard(&aug).unwrap(), t);
    }

    #[test]
    fn oscillating_walk_shape(t in arb_syt(9)) {
        let k = minimal_k(&t);
        let o = syt_to_oscillating(&t, k).unwrap();
        let shapes = o.shapes();
        prop_assert_eq!(shapes.len(), t.size() + 1);
        prop_assert!(shapes[0].is_empty());
        let m = t.shape().column_stats().num_odd_columns;
        prop_assert_eq!(shapes.last().unwrap(), &Partition::column(m));
        for w in shapes.windows(2) {
            prop_assert_eq!(w[0].size().abs_diff(w[1].size()), 1);
            prop_assert!(w[0].is_contained_in(&w[1]) || w[1].is_contained_in(&w[0]));
        }
        prop_assert!(shapes.iter().all(|s| s.num_columns() <= k));
        prop_assert_eq!(oscillating_to_syt(&o).unwrap(), t);
    }

    #[test]
    fn larger_bound_still_inverts(t in arb_syt(8), extra in 0usize..2) {
        let o = syt_to_oscillating(&t, minimal_k(&t) + extra).unwrap();
        prop_assert_eq!(oscillating_to_syt(&o).unwrap(), t);
    }

    #[test]
    fn odd_bound_round_trip(t in arb_syt(9)) {
        let k = t.shape().len() / 2;
        let (core, marks) = odd_bound_reduce(&t, k).unwrap();
        prop_assert_eq!(marks.len(), t.shape().column_stats().num_odd_columns);
        prop_assert!(core.shape().column_stats().max_column_length <= 2 * k);
        prop_assert_eq!(odd_bound_expand(&core, &marks, k).unwrap(), t);
    }

    #[test]
    fn formula_matches_brute_force(n in 0usize..9, k in 1usize..4, m in 0usize..5) {
        prop_assert_eq!(bessel_count(n, k, m).unwrap(), count_oscillating(n, k, m));
    }
}
