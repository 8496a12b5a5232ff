use std::cmp::Ordering;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};

use serde::{Deserialize, Serialize};

use super::{GroundPoint, IndependenceSystem, ObjectiveTable};
use crate::error::{Error, Result};

/// Answers `max { v . x : x in S }` with some maximizer.
pub trait LinearOracle {
    /// Ground-set size `n`.
    fn dim(&self) -> usize;

    fn maximize(&self, v: &[i64]) -> Result<GroundPoint>;

    /// Queries answered so far.
    fn queries(&self) -> u64;
}

/// Answers whether `f(x) <= f(y)`, revealing nothing else about `f`.
pub trait ComparisonOracle {
    fn compare(&self, x: u64, y: u64) -> Result<Ordering>;

    fn queries(&self) -> u64;
}

/// Answers `x in S`.
pub trait MembershipOracle {
    fn dim(&self) -> usize;

    fn contains(&self, x: &GroundPoint) -> Result<bool>;

    fn queries(&self) -> u64;
}

/// Query counts of one solve.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleStats {
    pub linear_queries: u64,
    pub comparison_queries: u64,
    pub membership_queries: u64,
}

/// Counting linear-optimization and membership oracle over a concrete
/// system. Ties go to the lexicographically smallest maximizer.
#[derive(Debug)]
pub struct SystemOracle<'a> {
    system: &'a IndependenceSystem,
    linear: AtomicU64,
    membership: AtomicU64,
}

impl<'a> SystemOracle<'a> {
    pub fn new(system: &'a IndependenceSystem) -> Self {
        SystemOracle { system, linear: AtomicU64::new(0), membership: AtomicU64::new(0) }
    }
}

impl IndependenceSystem {
    pub fn oracle(&self) -> SystemOracle<'_> {
        SystemOracle::new(self)
    }
}

impl LinearOracle for SystemOracle<'_> {
    fn dim(&self) -> usize {
        self.system.n()
    }

    fn maximize(&self, v: &[i64]) -> Result<GroundPoint> {
        self.linear.fetch_add(1, AtomicOrdering::Relaxed);
        self.system.argmax(v)
    }

    fn queries(&self) -> u64 {
        self.linear.load(AtomicOrdering::Relaxed)
    }
}

impl MembershipOracle for SystemOracle<'_> {
    fn dim(&self) -> usize {
        self.system.n()
    }

    fn contains(&self, x: &GroundPoint) -> Result<bool> {
        if x.len() != self.system.n() {
            return Err(Error::LengthMismatch { expected: self.system.n(), found: x.len() });
        }
        self.membership.fetch_add(1, AtomicOrdering::Relaxed);
        Ok(self.system.contains(x))
    }

    fn queries(&self) -> u64 {
        self.membership.load(AtomicOrdering::Relaxed)
    }
}

/// Counting comparison oracle backed by an [`ObjectiveTable`].
#[derive(Debug)]
pub struct TableComparator<'a> {
    table: &'a ObjectiveTable,
    count: AtomicU64,
}

impl<'a> TableComparator<'a> {
    pub fn new(table: &'a ObjectiveTable) -> Self {
        TableComparator { table, count: AtomicU64::new(0) }
    }
}

impl ComparisonOracle for TableComparator<'_> {
    fn compare(&self, x: u64, y: u64) -> Result<Ordering> {
        self.count.fetch_add(1, AtomicOrdering::Relaxed);
        self.table.compare(x, y)
    }

    fn queries(&self) -> u64 {
        self.count.load(AtomicOrdering::Relaxed)
    }
}
