use super::{improves, Diagnostics, SolveReport, SolverKind};
use crate::error::{Error, Result};
use crate::instances::{ComparisonOracle, GroundPoint, LinearOracle, OracleStats, WeightVector};
use crate::monoid::MultiIndex;

/// The points `x_nu <= xbar`, one per `nu <= tau = lambda(xbar)`, where
/// `x_nu` keeps the `nu_i` lowest-indexed support elements of each class.
///
/// Their weights are exactly `{ w . x : x <= xbar }`.
pub fn naive_candidates(xbar: &GroundPoint, w: &WeightVector) -> Result<Vec<GroundPoint>> {
    Ok(candidates(xbar, w)?.collect())
}

fn candidates<'a>(
    xbar: &'a GroundPoint,
    w: &'a WeightVector,
) -> Result<impl Iterator<Item = GroundPoint> + 'a> {
    if xbar.len() != w.n() {
        return Err(Error::LengthMismatch { expected: w.n(), found: xbar.len() });
    }
    let in_class: Vec<Vec<usize>> =
        w.classes().iter().map(|c| c.iter().copied().filter(|&j| xbar.get(j)).collect()).collect();
    let tau = MultiIndex::new(in_class.iter().map(|c| c.len() as u64).collect());
    Ok(tau.box_below().map(move |nu| {
        let mut x = GroundPoint::zeros(xbar.len());
        for (class, &k) in in_class.iter().zip(nu.counts()) {
            for &j in &class[..k as usize] {
                x.set(j, true);
            }
        }
        x
    }))
}

/// `argmin { f(w . x) : x <= xbar }` using at most `prod (tau_i + 1)`
/// comparisons. The first candidate wins ties.
pub fn naive_min_under(
    xbar: &GroundPoint,
    w: &WeightVector,
    f: &dyn ComparisonOracle,
) -> Result<GroundPoint> {
    let mut iter = candidates(xbar, w)?;
    let mut best = iter.next().expect("the zero point is always a candidate");
    let mut best_weight = w.weight(&best);
    for x in iter {
        let wx = w.weight(&x);
        if improves(f, wx, best_weight)? {
            best = x;
            best_weight = wx;
        }
    }
    Ok(best)
}

/// Maximize `w . x` once and search below the maximizer.
pub fn naive_solve(
    oracle: &dyn LinearOracle,
    w: &WeightVector,
    f: &dyn ComparisonOracle,
) -> Result<SolveReport> {
    let (q0, c0) = (oracle.queries(), f.queries());
    let maximizer = oracle.maximize(&w.as_query())?;
    let solution = naive_min_under(&maximizer, w, f)?;
    Ok(SolveReport {
        solver: SolverKind::Naive,
        weight: w.weight(&solution),
        solution,
        guarantee: None,
        stats: OracleStats {
            linear_queries: oracle.queries() - q0,
            comparison_queries: f.queries() - c0,
            membership_queries: 0,
        },
        diagnostics: Diagnostics::Naive { maximizer },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::families::example_3_1;
    use crate::instances::ObjectiveTable;
    use crate::monoid::PrimitiveTuple;

    #[test]
    fn trap_family_stays_even() {
        let inst = example_3_1(2).unwrap();
        let f = inst.objective.comparator();
        let z = GroundPoint::parse("00001111").unwrap();
        let x = naive_min_under(&z, &inst.weights, &f).unwrap();
        assert_eq!(inst.objective.value(inst.weights.weight(&x)).unwrap(), 4.0);
    }

    #[test]
    fn zero_point() {
        let inst = example_3_1(1).unwrap();
        let f = inst.objective.comparator();
        let zero = GroundPoint::zeros(4);
        assert_eq!(naive_min_under(&zero, &inst.weights, &f).unwrap(), zero);
        assert_eq!(f.queries(), 0);
    }

    #[test]
    fn two_three_candidates() {
        let a = PrimitiveTuple::new(vec![2, 3]).unwrap();
        let w = WeightVector::new(vec![2, 3, 2, 3], a).unwrap();
        let xbar = GroundPoint::parse("1110").unwrap();
        let cands = naive_candidates(&xbar, &w).unwrap();
        let mut weights: Vec<u64> = cands.iter().map(|x| w.weight(x)).collect();
        weights.sort();
        assert_eq!(weights, vec![0, 2, 3, 4, 5, 7]);
        assert!(cands.iter().all(|x| x.le(&xbar)));

        let identity = ObjectiveTable::from_fn(10, |k| k as f64).unwrap();
        let f = identity.comparator();
        let x = naive_min_under(&xbar, &w, &f).unwrap();
        assert!(x.is_zero());
        assert_eq!(f.queries(), 5);
    }

    #[test]
    fn keeps_lowest_indices() {
        let a = PrimitiveTuple::new(vec![1]).unwrap();
        let w = WeightVector::new(vec![1; 4], a).unwrap();
        let xbar = GroundPoint::parse("0111").unwrap();
        let cands = naive_candidates(&xbar, &w).unwrap();
        let strings: Vec<String> = cands.iter().map(GroundPoint::to_bitstring).collect();
        assert_eq!(strings, vec!["0000", "0100", "0110", "0111"]);
    }
}
