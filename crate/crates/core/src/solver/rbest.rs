use super::{
    block_maximize, improves, naive_min_under, BlockDiagnostic, BlockSpec, Diagnostics, SolveReport,
    SolverKind,
};
use crate::error::Result;
use crate::instances::{ComparisonOracle, GroundPoint, LinearOracle, OracleStats, WeightVector};
use crate::monoid::{r_bound, PrimitiveTuple};

/// The block algorithm. With `lam_i = max(a)` it visits all
/// `(1 + max(a))^p` blocks; for each nonempty one it finds the weight
/// maximizer and the best point below it, then returns the best of those.
///
/// The result is `r(a)`-best, and optimal when `a` is divisible. Blocks are
/// visited in lexicographic `mu` order and earlier blocks win ties.
pub fn r_best_solve(
    oracle: &dyn LinearOracle,
    w: &WeightVector,
    f: &dyn ComparisonOracle,
    a: &PrimitiveTuple,
) -> Result<SolveReport> {
    let w = if w.tuple() == a { w.clone() } else { WeightVector::new(w.weights().to_vec(), a.clone())? };
    let (q0, c0) = (oracle.queries(), f.queries());
    let lam = a.default_lambda();
    let mut blocks = Vec::new();
    let mut best: Option<(u64, GroundPoint)> = None;
    for mu in lam.box_below() {
        let block = BlockSpec { lam: lam.clone(), mu };
        let Some(maximizer) = block_maximize(oracle, &w, &block)? else {
            continue;
        };
        let minimizer = naive_min_under(&maximizer, &w, f)?;
        let wx = w.weight(&minimizer);
        let better = match &best {
            None => true,
            Some((bw, _)) => improves(f, wx, *bw)?,
        };
        if better {
            best = Some((wx, minimizer.clone()));
        }
        blocks.push(BlockDiagnostic { block, maximizer, minimizer });
    }
    let (weight, solution) = best.expect("the block holding the zero point is nonempty");
    Ok(SolveReport {
        solver: SolverKind::Main,
        solution,
        weight,
        guarantee: Some(r_bound(a)),
        stats: OracleStats {
            linear_queries: oracle.queries() - q0,
            comparison_queries: f.queries() - c0,
            membership_queries: 0,
        },
        diagnostics: Diagnostics::Blocks { blocks },
    })
}
