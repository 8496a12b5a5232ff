use super::{improves, Diagnostics, SolveReport, SolverKind};
use crate::error::Result;
use crate::instances::{ComparisonOracle, GroundPoint, LinearOracle, OracleStats, WeightVector};
use crate::monoid::PrimitiveTuple;

/// Solver for quasiconvex `f`.
///
/// Maximizes `w . x` once, then walks the chain obtained by dropping the
/// highest-indexed support element one at a time down to 0. Consecutive
/// weights differ by at most `max(a)`, so for quasiconvex `f` every better
/// value sits strictly inside one chain step and the chain minimum is
/// `(max(a) - 1)`-best.
///
/// Quasiconvexity cannot be checked through comparisons; it is the caller's
/// promise.
pub fn quasiconvex_solve(
    oracle: &dyn LinearOracle,
    w: &WeightVector,
    f: &dyn ComparisonOracle,
    a: &PrimitiveTuple,
) -> Result<SolveReport> {
    let w = if w.tuple() == a { w.clone() } else { WeightVector::new(w.weights().to_vec(), a.clone())? };
    let (q0, c0) = (oracle.queries(), f.queries());
    let top = oracle.maximize(&w.as_query())?;

    let mut points = vec![GroundPoint::zeros(top.len())];
    for j in top.support() {
        let mut next = points.last().expect("nonempty").clone();
        next.set(j, true);
        points.push(next);
    }
    let weights: Vec<u64> = points.iter().map(|x| w.weight(x)).collect();

    let mut best = 0;
    for t in 1..points.len() {
        if improves(f, weights[t], weights[best])? {
            best = t;
        }
    }
    Ok(SolveReport {
        solver: SolverKind::Quasiconvex,
        solution: points[best].clone(),
        weight: weights[best],
        guarantee: Some(a.max().saturating_sub(1)),
        stats: OracleStats {
            linear_queries: oracle.queries() - q0,
            comparison_queries: f.queries() - c0,
            membership_queries: 0,
        },
        diagnostics: Diagnostics::Chain { points, weights },
    })
}
