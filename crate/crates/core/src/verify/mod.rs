//! Ground truth: exact optima, the true rank of a solver's answer, and
//! adversaries that answer oracle queries for the lower-bound families.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::instances::{Instance, MAX_ENUMERATION_SUPPORT};
use crate::monoid::restricted_monoid;
use crate::solver::SolveReport;

mod adversary;

pub use adversary::{
    adversary_membership_run, adversary_run, compute_y, exhaustive_linear_querier,
    exhaustive_membership_querier, y_shares_a_part_or_b_part, AdversaryTranscript, LinearAlgorithm,
    MembershipAlgorithm, MembershipBackedOracle, QueryRecord, ADVERSARY_MAX_M,
};

/// The exact optimum of an instance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BruteForce {
    /// `min { f(v) : v in w . S }`.
    pub optimum: f64,
    /// Smallest weight attaining the optimum.
    pub optimal_weight: u64,
    /// `w . S`, sorted.
    pub image: Vec<u64>,
    /// Distinct values of `f` over the image, ascending.
    pub values: Vec<f64>,
}

/// Solves an instance exactly from its image.
pub fn brute_force_solve(instance: &Instance) -> Result<BruteForce> {
    let image: Vec<u64> = instance.image()?.into_iter().collect();
    let mut best = image[0];
    for &v in &image[1..] {
        if instance.objective.compare(v, best)?.is_lt() {
            best = v;
        }
    }
    let mut values = image.iter().map(|&v| instance.objective.value(v)).collect::<Result<Vec<_>>>()?;
    values.sort_by(f64::total_cmp);
    values.dedup();
    Ok(BruteForce { optimum: instance.objective.value(best)?, optimal_weight: best, image, values })
}

/// `w . S` by listing every point of the system. Independent of the
/// generator image computation, and limited to `n <= 24`.
pub fn enumerated_image(instance: &Instance) -> Result<BTreeSet<u64>> {
    if !instance.system.is_explicit() && instance.n() > MAX_ENUMERATION_SUPPORT {
        return Err(Error::TooLarge {
            what: "n",
            value: instance.n() as u64,
            limit: MAX_ENUMERATION_SUPPORT as u64,
        });
    }
    Ok(instance.system.enumerate()?.iter().map(|x| instance.weights.weight(x)).collect())
}

/// How good a solver's answer really is.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankCertificate {
    pub instance: String,
    pub feasible: bool,
    pub weight: u64,
    /// `f(w . x)` at the reported solution.
    pub value: f64,
    /// Image weights with strictly smaller `f`.
    pub better_weights: Vec<u64>,
    /// Number of distinct `f`-values among `better_weights`.
    pub rank: usize,
    pub guarantee: Option<u64>,
    /// Whether `rank <= guarantee`; `None` without a guarantee.
    pub within_guarantee: Option<bool>,
}

impl RankCertificate {
    /// Feasible and within the guarantee, if there is one.
    pub fn holds(&self) -> bool {
        self.feasible && self.within_guarantee != Some(false)
    }
}

/// Computes the true rank of `report.solution` on `instance`.
pub fn certify_rank(report: &SolveReport, instance: &Instance) -> Result<RankCertificate> {
    let weight = instance.weights.weight(&report.solution);
    let feasible = instance.system.contains(&report.solution) && weight == report.weight;
    let value = match instance.objective.value(weight) {
        Ok(v) => v,
        Err(_) if !feasible => f64::INFINITY,
        Err(e) => return Err(e),
    };
    let mut better_weights = Vec::new();
    let mut better_values = Vec::new();
    for v in instance.image()? {
        let fv = instance.objective.value(v)?;
        if fv < value {
            better_weights.push(v);
            better_values.push(fv);
        }
    }
    better_values.sort_by(f64::total_cmp);
    better_values.dedup();
    let rank = better_values.len();
    Ok(RankCertificate {
        instance: instance.name.clone(),
        feasible,
        weight,
        value,
        better_weights,
        rank,
        guarantee: report.guarantee,
        within_guarantee: report.guarantee.map(|r| rank as u64 <= r),
    })
}

/// Image values the main solver never examined: `w . S` minus the weights
/// of every candidate below every block maximizer. The covering argument
/// behind the guarantee says at most `g(a)` values are missed.
pub fn unexamined_values(report: &SolveReport, instance: &Instance) -> Result<Vec<u64>> {
    let w = &instance.weights;
    let mut seen = BTreeSet::new();
    for block in report.blocks() {
        seen.extend(restricted_monoid(w.tuple(), &w.counts(&block.maximizer))?.iter());
    }
    Ok(instance.image()?.into_iter().filter(|v| !seen.contains(v)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::families::example_3_1;
    use crate::instances::{GroundPoint, IndependenceSystem, ObjectiveTable, WeightVector};
    use crate::monoid::PrimitiveTuple;
    use crate::solver::{solve_instance, SolverKind};

    #[test]
    fn trap_family_optimum() {
        let inst = example_3_1(2).unwrap();
        let bf = brute_force_solve(&inst).unwrap();
        assert_eq!((bf.optimum, bf.optimal_weight), (1.0, 1));
        assert_eq!(bf.image, vec![0, 1, 2, 3, 4, 6, 8]);
        assert_eq!(bf.values, vec![1.0, 3.0, 4.0]);
        assert_eq!(enumerated_image(&inst).unwrap(), inst.image().unwrap());
    }

    #[test]
    fn zero_system() {
        let a = PrimitiveTuple::new(vec![1]).unwrap();
        let w = WeightVector::new(vec![1, 1], a).unwrap();
        let s = IndependenceSystem::generators(2, vec![]).unwrap();
        let inst = Instance::new("zero", s, w, ObjectiveTable::new(vec![3.5]).unwrap()).unwrap();
        let bf = brute_force_solve(&inst).unwrap();
        assert_eq!((bf.optimum, bf.image), (3.5, vec![0]));
    }

    #[test]
    fn naive_rank_on_trap_family() {
        let inst = example_3_1(3).unwrap();
        let report = solve_instance(SolverKind::Naive, &inst).unwrap();
        let cert = certify_rank(&report, &inst).unwrap();
        assert_eq!(cert.rank, 3);
        assert_eq!(cert.better_weights, vec![1, 3, 5]);
        assert_eq!(cert.within_guarantee, None);
        assert!(cert.holds());
    }

    #[test]
    fn main_solver_examines_everything_on_divisible_tuple() {
        let inst = example_3_1(2).unwrap();
        let report = solve_instance(SolverKind::Main, &inst).unwrap();
        assert!(unexamined_values(&report, &inst).unwrap().is_empty());
    }

    #[test]
    fn infeasible_answer_is_flagged() {
        let inst = example_3_1(1).unwrap();
        let mut report = solve_instance(SolverKind::Main, &inst).unwrap();
        report.solution = GroundPoint::parse("1111").unwrap();
        assert!(!certify_rank(&report, &inst).unwrap().feasible);
    }

    #[test]
    fn enumeration_limit() {
        let a = PrimitiveTuple::new(vec![1]).unwrap();
        let n = MAX_ENUMERATION_SUPPORT + 1;
        let w = WeightVector::new(vec![1; n], a).unwrap();
        let s = IndependenceSystem::generators(n, vec![]).unwrap();
        let inst = Instance::new("big", s, w, ObjectiveTable::new(vec![0.0]).unwrap()).unwrap();
        assert!(matches!(enumerated_image(&inst), Err(Error::TooLarge { .. })));
    }
}
