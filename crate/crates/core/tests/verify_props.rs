use num_integer::binomial;
use proptest::prelude::*;
use rand::Rng;
use wisopt::instances::families::{example_3_1, LowerBoundFamily, MembershipFamily};
use wisopt::instances::random::rng_from_seed;
use wisopt::solver::{solve_instance, SolverKind};
use wisopt::verify::{
    adversary_membership_run, adversary_run, certify_rank, compute_y, y_shares_a_part_or_b_part,
};
use wisopt::GroundPoint;

#[test]
fn y_bound_and_structure_on_random_vectors() {
    for m in 2..=3usize {
        let fam = LowerBoundFamily::new(m).unwrap();
        let bound = binomial(2 * m as u64, m as u64 - 1) as usize;
        let mut rng = rng_from_seed(m as u64);
        let mut nonempty = 0;
        for _ in 0..500 {
            let c: Vec<i64> = (0..4 * m).map(|_| rng.random_range(-5..=5)).collect();
            let ys = compute_y(&fam, &c).unwrap();
            assert!(ys.len() <= bound);
            assert!(y_shares_a_part_or_b_part(&fam, &ys), "c = {c:?}");
            nonempty += usize::from(!ys.is_empty());
        }
        // The sweep is not vacuous.
        assert!(nonempty > 0);
    }
}

#[test]
fn images_of_lower_bound_family() {
    for m in 2..=3usize {
        let fam = LowerBoundFamily::new(m).unwrap();
        let top = 5 * m as u64;
        let visible: Vec<u64> = (0..=top).filter(|&v| v != 1 && v != top - 1).collect();
        assert_eq!(fam.instance.image().unwrap().into_iter().collect::<Vec<_>>(), visible);
        let hidden: Vec<u64> = (0..=top).filter(|&v| v != 1).collect();
        for k in (0..fam.t1_len()).step_by(7) {
            let inst = fam.instance_with(k).unwrap();
            assert_eq!(inst.image().unwrap().into_iter().collect::<Vec<_>>(), hidden);
        }
    }
}

#[test]
fn naive_rank_on_trap_family_is_m() {
    for m in 1..=4 {
        let inst = example_3_1(m).unwrap();
        let naive = certify_rank(&solve_instance(SolverKind::Naive, &inst).unwrap(), &inst).unwrap();
        let main = certify_rank(&solve_instance(SolverKind::Main, &inst).unwrap(), &inst).unwrap();
        assert_eq!((naive.rank, main.rank), (m, 0));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Any algorithm asking fewer than `C(2m, m+1)` queries, here random
    /// ones, leaves a hidden point alive and gets fooled.
    #[test]
    fn random_under_budget_linear_algorithms(seed in any::<u64>(), m in 2usize..=3, frac in 0.0f64..1.0) {
        let threshold = binomial(2 * m as u64, m as u64 + 1);
        let p = ((threshold - 1) as f64 * frac) as usize;
        let t = adversary_run(|o, _, _| {
            let mut rng = rng_from_seed(seed);
            let mut last = GroundPoint::zeros(o.dim());
            for _ in 0..p {
                let c: Vec<i64> = (0..o.dim()).map(|_| rng.random_range(-5..=5)).collect();
                last = o.maximize(&c)?;
            }
            Ok(last)
        }, m).unwrap();
        prop_assert_eq!(t.query_count(), p);
        prop_assert!(t.union_bound_holds());
        prop_assert!(t.surviving_y >= t.hidden - p * binomial(2 * m as u64, m as u64 - 1) as usize);
        prop_assert!(t.surviving_y >= 1);
        prop_assert!(t.fooled);
    }

    #[test]
    fn random_under_budget_membership_algorithms(seed in any::<u64>(), m in 2usize..=3, frac in 0.0f64..1.0) {
        let fam = MembershipFamily::new(m).unwrap();
        let threshold = binomial(2 * m as u64, m as u64);
        let p = ((threshold - 1) as f64 * frac) as usize;
        let t = adversary_membership_run(|o, _, _| {
            let mut rng = rng_from_seed(seed);
            for _ in 0..p {
                o.contains(&fam.heavy(rng.random_range(0..fam.heavy_len())))?;
            }
            Ok(GroundPoint::zeros(o.dim()))
        }, m).unwrap();
        prop_assert!(t.surviving_y >= 1);
        prop_assert!(t.fooled);
    }
}
