//! The anti-diagonal has two readings. Only the one starting at the corner
//! away from the marker rows is injective; the other collapses distinct
//! tableaux.

use std::collections::HashSet;

use oscillating_tableaux::bijection::syt_to_oscillating_traced;
use oscillating_tableaux::counting::enumerate_syt;
use oscillating_tableaux::Partition;

#[test]
fn reading_from_marker_end_is_not_injective() {
    let (n, k) = (7, 2);
    let mut forward = HashSet::new();
    let mut reversed = HashSet::new();
    let mut total = 0;
    for m in 0..=n {
        for t in enumerate_syt(n, 2 * k, m) {
            let (trace, o) = syt_to_oscillating_traced(&t, k).unwrap();
            let len = n + 1;
            let rev: Vec<Partition> = trace.diagonal.iter().rev().take(len).cloned().collect();
            assert_eq!(o.shapes(), &trace.diagonal[..len]);
            forward.insert(o.shapes().to_vec());
            reversed.insert(rev);
            total += 1;
        }
    }
    assert_eq!(forward.len(), total);
    assert!(reversed.len() < total);
}
