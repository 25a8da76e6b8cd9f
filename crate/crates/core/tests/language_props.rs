mod strategies;

use proptest::prelude::*;
use sgap_core::language::{
    apply_code, count_blocks, exceptional_pair_code, is_periodic_admissible, least_period_counts,
    periodic_points_bruteforce, zeta_series,
};
use sgap_core::{GapSet, Word};
use strategies::{periodic_set, sofic_set};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn zeta_matches_enumeration(g in sofic_set()) {
        let z = zeta_series(&g, 12).unwrap();
        for n in 1..=12 {
            prop_assert_eq!(z.p[n - 1], periodic_points_bruteforce(&g, n).unwrap() as i128, "n = {}", n);
        }
    }

    #[test]
    fn least_period_counts_are_consistent(g in sofic_set()) {
        let z = zeta_series(&g, 30).unwrap();
        prop_assert!(z.p.iter().all(|&p| p >= 0));
        prop_assert!(z.q.iter().all(|&q| q >= 0));
        prop_assert_eq!(least_period_counts(&z.p), z.q.clone());
        for n in 1..=30 {
            let sum: i128 = (1..=n).filter(|d| n % d == 0).map(|d| z.q[d - 1]).sum();
            prop_assert_eq!(sum, z.p[n - 1]);
        }
    }

    #[test]
    fn block_counts_grow_with_the_set(g in periodic_set(4), k in 1usize..6) {
        let smaller = g.truncate(k).unwrap();
        for n in 1..=12 {
            prop_assert!(count_blocks(&smaller, n).unwrap() <= count_blocks(&g, n).unwrap());
        }
    }

    #[test]
    fn exceptional_code_maps_periodic_points(n in 1u64..=4, bits in 0u64..1 << 10, len in 1usize..=10) {
        let code = exceptional_pair_code(n).unwrap();
        let source: GapSet = format!("finite:0,{n}").parse().unwrap();
        let target: GapSet = format!("delta:{n};1").parse().unwrap();
        let u = Word::from_bits(bits & ((1 << len) - 1), len);
        if is_periodic_admissible(&u, &source).unwrap() {
            let v = apply_code(&code, &u).unwrap();
            prop_assert!(is_periodic_admissible(&v, &target).unwrap());
        }
    }
}

#[test]
fn exceptional_pairs_share_zeta() {
    for n in 1..=4 {
        let a = zeta_series(&format!("finite:0,{n}").parse().unwrap(), 20).unwrap();
        let b = zeta_series(&format!("delta:{n};1").parse().unwrap(), 20).unwrap();
        assert_eq!(a.p, b.p, "n = {n}");
    }
}
