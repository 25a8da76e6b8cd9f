#![allow(dead_code)]

use proptest::prelude::*;
use sgap_core::{Gap, GapSet};

/// Nonempty finite sets with elements below `max`.
pub fn finite_set(max: Gap) -> impl Strategy<Value = GapSet> {
    proptest::collection::btree_set(0..max, 1..5)
        .prop_map(|s| GapSet::finite(s.into_iter().collect()).unwrap())
}

/// Eventually periodic sets with small differences.
pub fn periodic_set(max_delta: Gap) -> impl Strategy<Value = GapSet> {
    (
        0..max_delta,
        proptest::collection::vec(1..=max_delta, 0..3),
        proptest::collection::vec(1..=max_delta, 1..3),
    )
        .prop_map(|(d0, rest, period)| {
            let mut pre = vec![d0];
            pre.extend(rest);
            GapSet::eventually_periodic(pre, period).unwrap()
        })
}

/// Finite or eventually periodic.
pub fn sofic_set() -> impl Strategy<Value = GapSet> {
    prop_oneof![finite_set(7), periodic_set(4)]
}
