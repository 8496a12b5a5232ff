//! Solvers for `min { f(w . x) : x in S }` with `S` behind a
//! linear-optimization oracle and `f` behind a comparison oracle.
//!
//! * [`naive_solve`]: maximize `w . x` once, then search the subcube below
//!   the maximizer. No guarantee.
//! * [`r_best_solve`]: split `S` into blocks by how many elements of each
//!   weight class a point uses, maximize inside every block, and search
//!   below each block maximizer. Certified `r(a)`-best.
//! * [`quasiconvex_solve`]: for quasiconvex `f`, search one descending
//!   chain below the maximizer. Certified `(max(a) - 1)`-best.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::instances::{
    ComparisonOracle, GroundPoint, Instance, LinearOracle, OracleStats, WeightVector,
};

mod naive;
mod partition;
mod quasiconvex;
mod rbest;

pub use naive::{naive_candidates, naive_min_under, naive_solve};
pub use partition::{
    block_maximize, block_of, face_maximize, face_penalty, linear_query_budget, BlockSpec, FaceSpec,
};
pub use quasiconvex::quasiconvex_solve;
pub use rbest::r_best_solve;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SolverKind {
    Main,
    Naive,
    Quasiconvex,
}

impl SolverKind {
    pub const ALL: [SolverKind; 3] = [SolverKind::Main, SolverKind::Naive, SolverKind::Quasiconvex];

    pub fn as_str(self) -> &'static str {
        match self {
            SolverKind::Main => "main",
            SolverKind::Naive => "naive",
            SolverKind::Quasiconvex => "quasiconvex",
        }
    }

    /// Runs this solver against the given oracles.
    pub fn run(
        self,
        oracle: &dyn LinearOracle,
        w: &WeightVector,
        f: &dyn ComparisonOracle,
    ) -> Result<SolveReport> {
        match self {
            SolverKind::Main => r_best_solve(oracle, w, f, w.tuple()),
            SolverKind::Naive => naive_solve(oracle, w, f),
            SolverKind::Quasiconvex => quasiconvex_solve(oracle, w, f, w.tuple()),
        }
    }
}

impl fmt::Display for SolverKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SolverKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        SolverKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| format!("unknown solver {s:?}; expected main, naive or quasiconvex"))
    }
}

/// One nonempty block visited by the main solver.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BlockDiagnostic {
    pub block: BlockSpec,
    /// Maximizer of `w . x` over the block.
    pub maximizer: GroundPoint,
    /// Best point below the maximizer.
    pub minimizer: GroundPoint,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Diagnostics {
    Naive { maximizer: GroundPoint },
    Blocks { blocks: Vec<BlockDiagnostic> },
    /// Descending chain `x^0 = 0, x^1, ..., x^k` and its weights.
    Chain { points: Vec<GroundPoint>, weights: Vec<u64> },
}

/// A solver's answer.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolveReport {
    pub solver: SolverKind,
    pub solution: GroundPoint,
    /// `w . solution`.
    pub weight: u64,
    /// `r` such that the solution is certified `r`-best, if the solver
    /// certifies anything.
    pub guarantee: Option<u64>,
    pub stats: OracleStats,
    pub diagnostics: Diagnostics,
}

impl SolveReport {
    pub fn blocks(&self) -> &[BlockDiagnostic] {
        match &self.diagnostics {
            Diagnostics::Blocks { blocks } => blocks,
            _ => &[],
        }
    }

    pub fn chain_weights(&self) -> &[u64] {
        match &self.diagnostics {
            Diagnostics::Chain { weights, .. } => weights,
            _ => &[],
        }
    }
}

/// Runs `kind` on a concrete instance with fresh counting oracles.
pub fn solve_instance(kind: SolverKind, instance: &Instance) -> Result<SolveReport> {
    let oracle = instance.system.oracle();
    let f = instance.objective.comparator();
    kind.run(&oracle, &instance.weights, &f)
}

/// Picks the better of two candidates under the comparison oracle; the
/// incumbent wins ties.
pub(crate) fn improves(
    f: &dyn ComparisonOracle,
    candidate_weight: u64,
    incumbent_weight: u64,
) -> Result<bool> {
    Ok(f.compare(candidate_weight, incumbent_weight)?.is_lt())
}
