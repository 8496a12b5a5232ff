//! Adversaries for the two query lower bounds.
//!
//! The linear-oracle adversary answers every query from the visible system
//! `S` of the lower-bound family. A hidden point `y` survives when no query
//! `c` had `c . y > max { c . x : x in S }`; for a surviving `y` the world
//! `S_y` would have produced the same answers, so the algorithm cannot tell
//! `S` from `S_y` although their optimal values differ. The membership
//! adversary works the same way with "never queried" in place of "never
//! exposed".

use std::cell::{OnceCell, RefCell};

use itertools::Itertools;
use num_integer::binomial;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::instances::families::{FamilyName, LowerBoundFamily, MembershipFamily};
use crate::instances::{
    ComparisonOracle, GroundPoint, IndependenceSystem, Instance, LinearOracle, MembershipOracle,
    WeightVector, MAX_ENUMERATION_SUPPORT,
};
use crate::monoid::restricted_monoid;

/// Largest `m` for which the hidden points are enumerated:
/// `|T_1| = C(8,5) * C(8,3) = 3136` at `m = 4`.
pub const ADVERSARY_MAX_M: usize = 4;

/// A solver that sees `S` only through a linear-optimization oracle.
pub type LinearAlgorithm =
    Box<dyn Fn(&dyn LinearOracle, &WeightVector, &dyn ComparisonOracle) -> Result<GroundPoint>>;

/// A solver that sees `S` only through a membership oracle.
pub type MembershipAlgorithm =
    Box<dyn Fn(&dyn MembershipOracle, &WeightVector, &dyn ComparisonOracle) -> Result<GroundPoint>>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum QueryRecord {
    Linear { query: Vec<i64>, answer: GroundPoint },
    Membership { point: GroundPoint, member: bool },
}

/// What happened when an algorithm ran against an adversary.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AdversaryTranscript {
    pub family: FamilyName,
    pub m: usize,
    pub queries: Vec<QueryRecord>,
    /// Number of hidden points: `|T_1|`, or `C(2m, m)` weight-`m` points.
    pub hidden: usize,
    /// Queries needed before every hidden point can be ruled out:
    /// `C(2m, m+1)`, or `C(2m, m)`.
    pub threshold: u64,
    /// `|Y(c)|` for each linear query, in order.
    pub exposed_per_query: Vec<usize>,
    /// Membership queries on weight-`m` points.
    pub hidden_queries: u64,
    /// Hidden points consistent with every answer.
    pub surviving_y: usize,
    pub output: GroundPoint,
    pub output_weight: u64,
    /// Some world consistent with the answers makes the output infeasible
    /// or suboptimal.
    pub fooled: bool,
}

impl AdversaryTranscript {
    pub fn query_count(&self) -> usize {
        self.queries.len()
    }

    /// `surviving_y >= hidden - sum |Y(c^i)|`.
    pub fn union_bound_holds(&self) -> bool {
        let exposed: usize = self.exposed_per_query.iter().sum();
        self.surviving_y + exposed >= self.hidden
    }
}

fn check_cap(m: usize) -> Result<()> {
    if m > ADVERSARY_MAX_M {
        return Err(Error::TooLarge { what: "m", value: m as u64, limit: ADVERSARY_MAX_M as u64 });
    }
    Ok(())
}

/// `Y(c) = { y in T_1 : c . y > max { c . x : x in S } }` as indices into
/// `T_1`. Panics if `|Y(c)| > C(2m, m-1)`, which the construction rules out.
pub fn compute_y(family: &LowerBoundFamily, c: &[i64]) -> Result<Vec<usize>> {
    check_cap(family.m())?;
    let t1: Vec<GroundPoint> = family.t1_points().collect();
    exposed(family, &t1, c)
}

fn exposed(family: &LowerBoundFamily, t1: &[GroundPoint], c: &[i64]) -> Result<Vec<usize>> {
    let best = family.system().argmax(c)?.dot(c);
    let ys: Vec<usize> = (0..t1.len()).filter(|&k| t1[k].dot(c) > best).collect();
    let m = family.m() as u64;
    assert!(ys.len() as u64 <= binomial(2 * m, m - 1), "|Y(c)| = {} exceeds C(2m, m-1)", ys.len());
    Ok(ys)
}

/// Whether all members of `ys` share their `A`-part, or all share their
/// `B`-part.
pub fn y_shares_a_part_or_b_part(family: &LowerBoundFamily, ys: &[usize]) -> bool {
    let parts: Vec<_> = ys.iter().map(|&k| family.t1_parts(k)).collect();
    parts.iter().map(|p| p.0).all_equal() || parts.iter().map(|p| p.1).all_equal()
}

/// Answers every query with the lexicographically smallest maximizer over
/// the visible system, and logs it.
struct RecordingLinear<'a> {
    system: &'a IndependenceSystem,
    log: RefCell<Vec<QueryRecord>>,
}

impl LinearOracle for RecordingLinear<'_> {
    fn dim(&self) -> usize {
        self.system.n()
    }

    fn maximize(&self, v: &[i64]) -> Result<GroundPoint> {
        let answer = self.system.argmax(v)?;
        self.log.borrow_mut().push(QueryRecord::Linear { query: v.to_vec(), answer: answer.clone() });
        Ok(answer)
    }

    fn queries(&self) -> u64 {
        self.log.borrow().len() as u64
    }
}

struct RecordingMembership<'a> {
    system: &'a IndependenceSystem,
    log: RefCell<Vec<QueryRecord>>,
}

impl MembershipOracle for RecordingMembership<'_> {
    fn dim(&self) -> usize {
        self.system.n()
    }

    fn contains(&self, x: &GroundPoint) -> Result<bool> {
        if x.len() != self.system.n() {
            return Err(Error::LengthMismatch { expected: self.system.n(), found: x.len() });
        }
        let member = self.system.contains(x);
        self.log.borrow_mut().push(QueryRecord::Membership { point: x.clone(), member });
        Ok(member)
    }

    fn queries(&self) -> u64 {
        self.log.borrow().len() as u64
    }
}

/// Whether `x` is wrong in `S` or in some `S_y` with `y` among `surviving`.
/// All hidden points have the same class counts, so the hidden worlds share
/// one image.
fn fooled(instance: &Instance, x: &GroundPoint, surviving: &[GroundPoint]) -> Result<bool> {
    let f = &instance.objective;
    let w = &instance.weights;
    let wx = w.weight(x);
    let best_in = |image: &mut dyn Iterator<Item = u64>| -> Result<f64> {
        let mut best = f64::INFINITY;
        for v in image {
            best = best.min(f.value(v)?);
        }
        Ok(best)
    };
    let base = instance.image()?;
    let wrong_in_s = !instance.system.contains(x) || f.value(wx)? > best_in(&mut base.iter().copied())?;
    if wrong_in_s {
        return Ok(true);
    }
    let Some(y) = surviving.first() else {
        return Ok(false);
    };
    let below_y = restricted_monoid(w.tuple(), &w.counts(y))?;
    let hidden_best = best_in(&mut base.iter().copied().chain(below_y.iter()))?;
    // x is feasible in every S_y since it lies in S.
    Ok(f.value(wx)? > hidden_best)
}

/// Runs `algorithm` on the lower-bound family at `m` against the adversary.
pub fn adversary_run<F>(algorithm: F, m: usize) -> Result<AdversaryTranscript>
where
    F: FnOnce(&dyn LinearOracle, &WeightVector, &dyn ComparisonOracle) -> Result<GroundPoint>,
{
    check_cap(m)?;
    let family = LowerBoundFamily::new(m)?;
    let oracle = RecordingLinear { system: family.system(), log: RefCell::new(Vec::new()) };
    let f = family.instance.objective.comparator();
    let output = algorithm(&oracle, family.weights(), &f)?;
    if output.len() != family.n() {
        return Err(Error::LengthMismatch { expected: family.n(), found: output.len() });
    }
    let queries = oracle.log.into_inner();

    let t1: Vec<GroundPoint> = family.t1_points().collect();
    let mut covered = vec![false; t1.len()];
    let mut exposed_per_query = Vec::with_capacity(queries.len());
    for record in &queries {
        if let QueryRecord::Linear { query, .. } = record {
            let ys = exposed(&family, &t1, query)?;
            exposed_per_query.push(ys.len());
            for k in ys {
                covered[k] = true;
            }
        }
    }
    let surviving: Vec<GroundPoint> =
        t1.iter().zip(&covered).filter(|(_, &c)| !c).map(|(y, _)| y.clone()).collect();
    let fooled = fooled(&family.instance, &output, &surviving)?;
    let mm = 2 * m as u64;
    Ok(AdversaryTranscript {
        family: FamilyName::LowerBound,
        m,
        queries,
        hidden: t1.len(),
        threshold: binomial(mm, m as u64 + 1),
        exposed_per_query,
        hidden_queries: 0,
        surviving_y: surviving.len(),
        output_weight: family.weights().weight(&output),
        output,
        fooled,
    })
}

/// Runs `algorithm` on the membership family at `m`. Membership is answered
/// honestly for `S`.
pub fn adversary_membership_run<F>(algorithm: F, m: usize) -> Result<AdversaryTranscript>
where
    F: FnOnce(&dyn MembershipOracle, &WeightVector, &dyn ComparisonOracle) -> Result<GroundPoint>,
{
    let family = MembershipFamily::new(m)?;
    let oracle = RecordingMembership { system: family.system(), log: RefCell::new(Vec::new()) };
    let f = family.instance.objective.comparator();
    let output = algorithm(&oracle, family.weights(), &f)?;
    if output.len() != family.n() {
        return Err(Error::LengthMismatch { expected: family.n(), found: output.len() });
    }
    let queries = oracle.log.into_inner();

    let mut queried = std::collections::BTreeSet::new();
    let mut hidden_queries = 0;
    for record in &queries {
        if let QueryRecord::Membership { point, .. } = record {
            if point.cardinality() == m {
                hidden_queries += 1;
                queried.insert(point.clone());
            }
        }
    }
    let surviving: Vec<GroundPoint> = family.heavy_points().filter(|y| !queried.contains(y)).collect();
    let fooled = fooled(&family.instance, &output, &surviving)?;
    Ok(AdversaryTranscript {
        family: FamilyName::Membership,
        m,
        queries,
        hidden: family.heavy_len(),
        threshold: binomial(2 * m as u64, m as u64),
        exposed_per_query: Vec::new(),
        hidden_queries,
        surviving_y: surviving.len(),
        output_weight: family.weights().weight(&output),
        output,
        fooled,
    })
}

/// Returns the answered or candidate point with the smallest `f(w . x)`;
/// earlier points win ties.
fn best_of(points: &[GroundPoint], w: &WeightVector, f: &dyn ComparisonOracle) -> Result<GroundPoint> {
    let mut best = GroundPoint::zeros(w.n());
    for x in points {
        if f.compare(w.weight(x), w.weight(&best))?.is_lt() {
            best = x.clone();
        }
    }
    Ok(best)
}

/// A linear-oracle algorithm for the lower-bound family that exposes every
/// hidden point with exactly `C(2m, m+1)` queries: for each `(m+1)`-subset
/// `A` of the first half it asks `c = 2 * 1_A - n * 1_(I \ A) + 1_J`, whose
/// `Y(c)` is every hidden point with `A`-part `A`. Returns the best answer.
pub fn exhaustive_linear_querier(
    oracle: &dyn LinearOracle,
    w: &WeightVector,
    f: &dyn ComparisonOracle,
) -> Result<GroundPoint> {
    let n = oracle.dim();
    let half = n / 2;
    let m = n / 4;
    let mut answers = Vec::new();
    for a in (0..half).combinations(m + 1) {
        let mut c = vec![1i64; n];
        for (j, cj) in c.iter_mut().enumerate().take(half) {
            *cj = if a.contains(&j) { 2 } else { -(n as i64) };
        }
        answers.push(oracle.maximize(&c)?);
    }
    best_of(&answers, w, f)
}

/// A membership algorithm for the membership family: asks about every
/// weight-`m` point, then about one weight-`(m-1)` point, and returns the
/// best member found.
pub fn exhaustive_membership_querier(
    oracle: &dyn MembershipOracle,
    w: &WeightVector,
    f: &dyn ComparisonOracle,
) -> Result<GroundPoint> {
    let n = oracle.dim();
    let m = n / 2;
    let mut members = Vec::new();
    for support in (0..n).combinations(m) {
        let x = GroundPoint::from_support(n, &support)?;
        if oracle.contains(&x)? {
            members.push(x);
        }
    }
    if m >= 1 {
        let x = GroundPoint::from_support(n, &(0..m - 1).collect::<Vec<_>>())?;
        if oracle.contains(&x)? {
            members.push(x);
        }
    }
    best_of(&members, w, f)
}

/// A linear oracle simulated with membership queries: the first call asks
/// about all `2^n` points and later calls reuse the answers.
pub struct MembershipBackedOracle<'a> {
    inner: &'a dyn MembershipOracle,
    members: OnceCell<IndependenceSystem>,
    calls: std::cell::Cell<u64>,
}

impl<'a> MembershipBackedOracle<'a> {
    pub fn new(inner: &'a dyn MembershipOracle) -> Result<Self> {
        if inner.dim() > MAX_ENUMERATION_SUPPORT {
            return Err(Error::TooLarge {
                what: "n",
                value: inner.dim() as u64,
                limit: MAX_ENUMERATION_SUPPORT as u64,
            });
        }
        Ok(MembershipBackedOracle { inner, members: OnceCell::new(), calls: Default::default() })
    }

    fn system(&self) -> Result<&IndependenceSystem> {
        if let Some(s) = self.members.get() {
            return Ok(s);
        }
        let n = self.inner.dim();
        let mut points = Vec::new();
        for x in GroundPoint::from_bits(vec![true; n]).subsets()? {
            if self.inner.contains(&x)? {
                points.push(x);
            }
        }
        Ok(self.members.get_or_init(|| {
            IndependenceSystem::explicit(n, points).expect("points have length n")
        }))
    }
}

impl LinearOracle for MembershipBackedOracle<'_> {
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn maximize(&self, v: &[i64]) -> Result<GroundPoint> {
        self.calls.set(self.calls.get() + 1);
        self.system()?.argmax(v)
    }

    fn queries(&self) -> u64 {
        self.calls.get()
    }
}
