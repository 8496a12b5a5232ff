use itertools::Itertools;
use proptest::prelude::*;
use wisopt::monoid::{
    frobenius, gap_data, gap_data_with_bound, g_bound, is_saturated, r_bound, r_bound_with,
    restricted_monoid, saturation_defect, saturation_target, subtuple_for_block,
};
use wisopt::{MultiIndex, PrimitiveTuple};

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// All primitive tuples with `1 <= p <= max_p` increasing entries in `1..=max`.
fn primitive_tuples(max_p: usize, max: u64) -> Vec<PrimitiveTuple> {
    (1..=max_p)
        .flat_map(|p| (1..=max).combinations(p))
        .filter(|c| c.iter().fold(0, |g, &x| gcd(g, x)) == 1)
        .map(|c| PrimitiveTuple::new(c).unwrap())
        .collect()
}

/// Representable values up to `limit`, by enumerating multiplicities.
fn representable_by_enumeration(a: &[u64], limit: u64) -> Vec<bool> {
    let mut out = vec![false; limit as usize + 1];
    fn go(a: &[u64], acc: u64, limit: u64, out: &mut [bool]) {
        match a.split_first() {
            None => out[acc as usize] = true,
            Some((&x, rest)) => {
                let mut v = acc;
                while v <= limit {
                    go(rest, v, limit, out);
                    v += x;
                }
            }
        }
    }
    go(a, 0, limit, &mut out);
    out
}

fn tuple_strategy(max_p: usize, lo: u64, hi: u64) -> impl Strategy<Value = PrimitiveTuple> {
    prop::collection::btree_set(lo..=hi, 1..=max_p)
        .prop_filter("primitive", |s| s.iter().fold(0, |g, &x| gcd(g, x)) == 1)
        .prop_map(|s| PrimitiveTuple::new(s.into_iter().collect()).unwrap())
}

#[test]
fn symmetry_and_containment_sweep() {
    for a in primitive_tuples(3, 9) {
        let target_gaps = gap_data(&a);
        for lam in MultiIndex::uniform(a.len(), 6).box_below() {
            let m = restricted_monoid(&a, &lam).unwrap();
            let top = lam.dot(&a).unwrap();
            assert_eq!(m.max_value(), top);
            for v in 0..=top {
                assert_eq!(m.contains(v), m.contains(top - v), "a = {a}, lam = {lam:?}, v = {v}");
            }
            let target = saturation_target(&a, &lam).unwrap();
            assert!(m.is_subset(&target), "a = {a}, lam = {lam:?}");
            for &g in &target_gaps.gaps {
                assert!(!m.contains(g));
            }
        }
    }
}

#[test]
fn saturation_at_and_above_max() {
    for a in primitive_tuples(3, 9) {
        let top = a.max();
        for lam in MultiIndex::uniform(a.len(), 2).box_below() {
            let lam = MultiIndex::new(lam.counts().iter().map(|c| c + top).collect());
            assert!(is_saturated(&a, &lam).unwrap(), "a = {a}, lam = {lam:?}");
        }
    }
}

#[test]
fn saturation_of_divisible_tuples() {
    for entries in [vec![1, 2], vec![1, 3], vec![1, 2, 4], vec![1, 2, 6], vec![1, 3, 9]] {
        let a = PrimitiveTuple::new(entries.clone()).unwrap();
        let p = entries.len();
        let minimal: Vec<u64> = entries.windows(2).map(|w| w[1] / w[0] - 1).collect();
        // Sweep lam_i from the minimum up to minimum + 2 for i < p, lam_p in 0..=4.
        let mut extent: Vec<u64> = vec![2; p - 1];
        extent.push(4);
        for delta in MultiIndex::new(extent).box_below() {
            let lam: Vec<u64> =
                (0..p).map(|i| if i + 1 < p { minimal[i] + delta.counts()[i] } else { delta.counts()[i] }).collect();
            assert!(is_saturated(&a, &MultiIndex::new(lam.clone())).unwrap(), "a = {a}, lam = {lam:?}");
        }
    }
}

#[test]
fn unsaturated_example() {
    let a = PrimitiveTuple::new(vec![3, 5]).unwrap();
    assert_eq!(saturation_defect(&a, &MultiIndex::new(vec![3, 4])).unwrap(), vec![12, 17]);
}

#[test]
fn sylvester_pairs() {
    for a1 in 2..=20u64 {
        for a2 in a1 + 1..=20 {
            if gcd(a1, a2) != 1 {
                continue;
            }
            let a = PrimitiveTuple::new(vec![a1, a2]).unwrap();
            let g = gap_data(&a);
            assert!(g.is_complete());
            assert_eq!(g.frobenius, a1 * a2 - a1 - a2);
            assert_eq!(g.frobenius + 1, (a1 - 1) * (a2 - 1));
            assert_eq!(g.gap_count() as u64, (a1 - 1) * (a2 - 1) / 2);
            assert_eq!(r_bound(&a), g.frobenius);
            assert_eq!(g_bound(&a), g.gap_count() as u64);
        }
    }
}

#[test]
fn divisible_tuples_have_zero_bound() {
    for a in primitive_tuples(4, 16).into_iter().filter(PrimitiveTuple::is_divisible) {
        assert_eq!(r_bound(&a), 0, "a = {a}");
        assert_eq!(g_bound(&a), 0, "a = {a}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn gap_data_matches_enumeration(a in tuple_strategy(4, 1, 25)) {
        let g = gap_data(&a);
        prop_assert!(g.is_complete());
        let oracle = representable_by_enumeration(a.entries(), g.bound);
        for v in 0..=g.bound {
            prop_assert_eq!(g.reachable.contains(v), oracle[v as usize]);
            prop_assert_eq!(g.is_gap(v), !oracle[v as usize]);
        }
        prop_assert!(g.reachable.contains(0));
        for &ai in a.entries() {
            prop_assert!(ai > g.bound || g.reachable.contains(ai));
        }
        if a.entries().contains(&1) {
            prop_assert_eq!(g.frobenius, 0);
        }
        // A wider window finds nothing new.
        let wide = gap_data_with_bound(&a, g.bound * 2 + 10);
        prop_assert_eq!(&wide.gaps, &g.gaps);
    }

    #[test]
    fn schur_bound_holds(a in tuple_strategy(4, 2, 30).prop_filter("p >= 2", |a| a.len() >= 2)) {
        prop_assert!(frobenius(&a) < a.schur_bound().unwrap());
    }

    #[test]
    fn r_bound_is_bounded(a in tuple_strategy(3, 1, 8)) {
        let r = r_bound(&a);
        prop_assert!(r <= (2 * a.max()).pow(a.len() as u32));
        prop_assert!(g_bound(&a) <= r);
    }

    #[test]
    fn r_bound_equals_direct_sum(a in tuple_strategy(3, 1, 7)) {
        let lam = a.default_lambda();
        let mut direct = 0;
        for mu in lam.box_below() {
            let (_, sub) = subtuple_for_block(&a, &lam, &mu).unwrap();
            direct += frobenius(&sub);
        }
        prop_assert_eq!(r_bound_with(&a, &lam).unwrap(), direct);
    }

    #[test]
    fn restricted_monoid_matches_enumeration(
        a in tuple_strategy(3, 1, 9),
        raw in prop::collection::vec(0u64..=4, 3),
    ) {
        let lam = MultiIndex::new(raw[..a.len()].to_vec());
        let m = restricted_monoid(&a, &lam).unwrap();
        let mut direct = std::collections::BTreeSet::new();
        for mu in lam.box_below() {
            direct.insert(mu.dot(&a).unwrap());
        }
        prop_assert_eq!(m.to_vec(), direct.into_iter().collect::<Vec<_>>());
    }
}
