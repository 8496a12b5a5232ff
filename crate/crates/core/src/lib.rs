//! Nonlinear optimization over weighted independence systems.
//!
//! The problem is `min { f(w . x) : x in S }` where `S ⊆ {0,1}^n` is
//! downward closed and only reachable through a linear-optimization oracle,
//! `f` is only reachable through comparisons, and every weight `w_j` comes
//! from a small alphabet `a = (a_1, ..., a_p)` with `gcd(a) = 1`.
//!
//! The main solver returns an `r(a)`-best point: at most `r(a)` objective
//! values beat it. `r(a)` depends only on the alphabet and is computed in
//! [`monoid`]; it is 0 when each `a_i` divides the next.
//!
//! ```
//! use wisopt::instances::families::example_3_1;
//! use wisopt::solver::{solve_instance, SolverKind};
//! use wisopt::verify::certify_rank;
//!
//! let instance = example_3_1(2)?;
//! let report = solve_instance(SolverKind::Main, &instance)?;
//! let cert = certify_rank(&report, &instance)?;
//! assert_eq!(cert.rank, 0);
//! # Ok::<(), wisopt::Error>(())
//! ```

pub mod error;
pub mod instances;
pub mod monoid;
pub mod solver;
pub mod value_set;
pub mod verify;

pub use error::{Error, Result};
pub use instances::{
    ComparisonOracle, GroundPoint, IndependenceSystem, Instance, LinearOracle, MembershipOracle,
    ObjectiveTable, OracleStats, WeightVector,
};
pub use monoid::{MultiIndex, PrimitiveTuple};
pub use solver::{SolveReport, SolverKind};
pub use value_set::ValueSet;
