//! Numerical semigroups generated by a weight alphabet.
//!
//! Everything here is exact integer arithmetic: gap sets and Frobenius
//! numbers by dynamic programming, restricted monoids by bounded-multiplicity
//! subset sums, saturation checks, and the two approximation-quality bounds
//! the solver reports.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::value_set::ValueSet;

/// Greatest common divisor of a nonempty list.
pub fn gcd_tuple(entries: &[u64]) -> Result<u64> {
    let (first, rest) = entries.split_first().ok_or(Error::EmptyTuple)?;
    Ok(rest.iter().fold(*first, |g, &x| g.gcd(&x)))
}

/// A weight alphabet `(a_1, ..., a_p)`: distinct positive integers with
/// gcd 1. The empty alphabet is allowed.
///
/// Entry order is kept as given; divisibility is checked in that order.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct PrimitiveTuple {
    entries: Vec<u64>,
}

impl PrimitiveTuple {
    pub fn new(entries: Vec<u64>) -> Result<Self> {
        if entries.contains(&0) {
            return Err(Error::InvalidTuple { entries, reason: "entries must be positive" });
        }
        for (i, x) in entries.iter().enumerate() {
            if entries[..i].contains(x) {
                return Err(Error::InvalidTuple { entries, reason: "entries must be distinct" });
            }
        }
        if !entries.is_empty() {
            let gcd = gcd_tuple(&entries)?;
            if gcd != 1 {
                return Err(Error::NotPrimitive { entries, gcd });
            }
        }
        Ok(PrimitiveTuple { entries })
    }

    pub fn empty() -> Self {
        PrimitiveTuple { entries: Vec::new() }
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    /// The number of entries, `p`.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `max(a)`, or 0 for the empty tuple.
    pub fn max(&self) -> u64 {
        self.entries.iter().copied().max().unwrap_or(0)
    }

    pub fn min(&self) -> Option<u64> {
        self.entries.iter().copied().min()
    }

    pub fn index_of(&self, value: u64) -> Option<usize> {
        self.entries.iter().position(|&a| a == value)
    }

    /// `a_i` divides `a_{i+1}` for every consecutive pair.
    pub fn is_divisible(&self) -> bool {
        self.entries.windows(2).all(|w| w[1] % w[0] == 0)
    }

    /// Upper bound on `F(a) + 1` for `p >= 2` and all entries at least 2:
    /// the minimum of `(min(a) - 1)(max(a) - 1)` and `(a_i - 1)(a_j - 1)`
    /// over coprime pairs. Pairs sharing a factor are skipped; `(2, 4, 5)`
    /// has `F = 3` while `(2 - 1)(4 - 1) = 3`.
    pub fn schur_bound(&self) -> Option<u64> {
        let a = &self.entries;
        if a.len() < 2 {
            return None;
        }
        let lo = *a.iter().min().expect("nonempty");
        let hi = *a.iter().max().expect("nonempty");
        let mut best = (lo - 1) * (hi - 1);
        for i in 0..a.len() {
            for j in i + 1..a.len() {
                if a[i].gcd(&a[j]) == 1 {
                    best = best.min((a[i] - 1) * (a[j] - 1));
                }
            }
        }
        Some(best)
    }

    /// The uniform multi-index `(max(a), ..., max(a))`.
    pub fn default_lambda(&self) -> MultiIndex {
        MultiIndex::uniform(self.len(), self.max())
    }
}

impl TryFrom<Vec<u64>> for PrimitiveTuple {
    type Error = Error;

    fn try_from(entries: Vec<u64>) -> Result<Self> {
        PrimitiveTuple::new(entries)
    }
}

impl From<PrimitiveTuple> for Vec<u64> {
    fn from(t: PrimitiveTuple) -> Self {
        t.entries
    }
}

impl fmt::Debug for PrimitiveTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.entries)
    }
}

impl fmt::Display for PrimitiveTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// A vector of nonnegative multiplicities, one per tuple entry.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiIndex(Vec<u64>);

impl MultiIndex {
    pub fn new(counts: Vec<u64>) -> Self {
        MultiIndex(counts)
    }

    pub fn zeros(len: usize) -> Self {
        MultiIndex(vec![0; len])
    }

    pub fn uniform(len: usize, value: u64) -> Self {
        MultiIndex(vec![value; len])
    }

    pub fn counts(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Componentwise `self <= other`. Different lengths are incomparable.
    pub fn le(&self, other: &MultiIndex) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(x, y)| x <= y)
    }

    /// `sum_i self_i * a_i`.
    pub fn dot(&self, a: &PrimitiveTuple) -> Result<u64> {
        check_len(a.len(), self.len())?;
        Ok(self.0.iter().zip(a.entries()).map(|(m, a)| m * a).sum())
    }

    /// Every `mu <= self` in lexicographic order, first coordinate slowest.
    pub fn box_below(&self) -> BoxIter {
        BoxIter { upper: self.0.clone(), next: Some(vec![0; self.len()]) }
    }

    /// Number of multi-indices below `self`, `prod (lambda_i + 1)`.
    pub fn box_size(&self) -> u64 {
        self.0.iter().map(|l| l + 1).product()
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Iterator over the integer box `0 <= mu <= lambda`.
#[derive(Debug, Clone)]
pub struct BoxIter {
    upper: Vec<u64>,
    next: Option<Vec<u64>>,
}

impl Iterator for BoxIter {
    type Item = MultiIndex;

    fn next(&mut self) -> Option<MultiIndex> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut i = succ.len();
        loop {
            if i == 0 {
                break;
            }
            i -= 1;
            if succ[i] < self.upper[i] {
                succ[i] += 1;
                self.next = Some(succ);
                break;
            }
            succ[i] = 0;
        }
        Some(MultiIndex(current))
    }
}

fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::LengthMismatch { expected, found });
    }
    Ok(())
}

/// The monoid of a tuple truncated to `[0, bound]`, with its gap set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapData {
    pub tuple: PrimitiveTuple,
    pub bound: u64,
    /// Monoid elements in `[0, bound]`.
    pub reachable: ValueSet,
    /// Gaps found in `[0, bound]`, ascending. This is all of `G(a)` when
    /// [`GapData::is_complete`] holds.
    pub gaps: Vec<u64>,
    pub frobenius: u64,
}

impl GapData {
    /// True when the bound reaches past the Frobenius number, i.e. the last
    /// `min(a)` values below the bound are all representable.
    pub fn is_complete(&self) -> bool {
        match self.tuple.min() {
            None => true,
            Some(m) if m > self.bound + 1 => false,
            Some(m) => (self.bound + 1 - m..=self.bound).all(|v| self.reachable.contains(v)),
        }
    }

    pub fn gap_count(&self) -> usize {
        self.gaps.len()
    }

    pub fn is_gap(&self, v: u64) -> bool {
        self.gaps.binary_search(&v).is_ok()
    }
}

/// Default DP bound: `schur + min(a) - 1`, at least `max(a)`. Since
/// `F(a) < schur`, this covers `F(a)` and the `min(a)` values after it that
/// certify completeness.
pub fn default_bound(a: &PrimitiveTuple) -> u64 {
    let min = a.min().unwrap_or(1);
    (a.schur_bound().unwrap_or(0) + min - 1).max(a.max())
}

/// Gap set and Frobenius number of `a`, computed over the default bound so
/// that the whole gap set is captured.
pub fn gap_data(a: &PrimitiveTuple) -> GapData {
    gap_data_with_bound(a, default_bound(a))
}

/// Representable values of `a` in `[0, bound]` by the coin-change recurrence.
pub fn gap_data_with_bound(a: &PrimitiveTuple, bound: u64) -> GapData {
    let mut reachable = ValueSet::empty(bound);
    reachable.insert(0);
    if a.is_empty() {
        // F(()) := 0 and no gaps, by convention.
        return GapData { tuple: a.clone(), bound, reachable, gaps: Vec::new(), frobenius: 0 };
    }
    for v in 1..=bound {
        if a.entries().iter().any(|&ai| ai <= v && reachable.contains(v - ai)) {
            reachable.insert(v);
        }
    }
    let gaps: Vec<u64> = (0..=bound).filter(|&v| !reachable.contains(v)).collect();
    let frobenius = gaps.last().copied().unwrap_or(0);
    GapData { tuple: a.clone(), bound, reachable, gaps, frobenius }
}

/// `F(a)`, with `F := 0` when some entry is 1 or the tuple is empty.
pub fn frobenius(a: &PrimitiveTuple) -> u64 {
    gap_data(a).frobenius
}

/// `M(a, lambda) = { mu . a : 0 <= mu <= lambda }` as a dense set over
/// `[0, lambda . a]`.
pub fn restricted_monoid(a: &PrimitiveTuple, lam: &MultiIndex) -> Result<ValueSet> {
    let top = lam.dot(a)?;
    let mut set = ValueSet::empty(top);
    set.insert(0);
    for (&ai, &li) in a.entries().iter().zip(lam.counts()) {
        for _ in 0..li {
            set.or_shifted(ai);
        }
    }
    Ok(set)
}

/// `{0..lambda.a} \ (G(a) ∪ (lambda.a - G(a)))`, the largest set the
/// restricted monoid can be.
pub fn saturation_target(a: &PrimitiveTuple, lam: &MultiIndex) -> Result<ValueSet> {
    let top = lam.dot(a)?;
    let gaps = gap_data(a);
    let mut target = ValueSet::full(top);
    for &g in &gaps.gaps {
        target.remove(g);
        if g <= top {
            target.remove(top - g);
        }
    }
    Ok(target)
}

/// Values of the saturation target missing from `M(a, lambda)`, ascending.
/// Empty exactly when `lambda` is saturated for `a`.
pub fn saturation_defect(a: &PrimitiveTuple, lam: &MultiIndex) -> Result<Vec<u64>> {
    let restricted = restricted_monoid(a, lam)?;
    let target = saturation_target(a, lam)?;
    assert!(
        restricted.is_subset(&target),
        "restricted monoid of {a} at {lam:?} escapes the gap-reflection bound"
    );
    Ok(target.difference(&restricted))
}

/// Whether `M(a, lambda)` attains the gap-reflection bound with equality.
pub fn is_saturated(a: &PrimitiveTuple, lam: &MultiIndex) -> Result<bool> {
    Ok(saturation_defect(a, lam)?.is_empty())
}

/// Indices pinned at the top of the box, `I = { i : mu_i = lambda_i }`, and
/// the entries `a_i / gcd(a_I)` for `i` in `I`.
///
/// Dividing distinct entries by a common factor keeps them distinct, so the
/// result is again a primitive tuple (empty when `I` is empty).
pub fn subtuple_for_block(
    a: &PrimitiveTuple,
    lam: &MultiIndex,
    mu: &MultiIndex,
) -> Result<(Vec<usize>, PrimitiveTuple)> {
    check_len(a.len(), lam.len())?;
    check_len(a.len(), mu.len())?;
    if !mu.le(lam) {
        return Err(Error::NotBelow { mu: mu.counts().to_vec(), lam: lam.counts().to_vec() });
    }
    let pinned: Vec<usize> = (0..a.len()).filter(|&i| mu.counts()[i] == lam.counts()[i]).collect();
    Ok((pinned.clone(), subtuple_on(a, &pinned)))
}

fn subtuple_on(a: &PrimitiveTuple, indices: &[usize]) -> PrimitiveTuple {
    let picked: Vec<u64> = indices.iter().map(|&i| a.entries()[i]).collect();
    if picked.is_empty() {
        return PrimitiveTuple::empty();
    }
    let g = gcd_tuple(&picked).expect("nonempty");
    PrimitiveTuple::new(picked.into_iter().map(|x| x / g).collect())
        .expect("entries divided by their gcd are distinct and coprime")
}

/// Sums `count(I) * weight(subtuple(I))` over all pinned sets `I`, where
/// `count(I) = prod_{i not in I} lambda_i` is the number of `mu <= lambda`
/// pinned exactly on `I`.
fn sum_over_blocks(
    a: &PrimitiveTuple,
    lam: &MultiIndex,
    weight: impl Fn(&GapData) -> u64,
) -> Result<u64> {
    check_len(a.len(), lam.len())?;
    let p = a.len();
    let mut total = 0;
    for mask in 0u64..(1 << p) {
        let pinned: Vec<usize> = (0..p).filter(|i| mask >> i & 1 == 1).collect();
        let count: u64 = (0..p).filter(|i| mask >> i & 1 == 0).map(|i| lam.counts()[i]).product();
        if count == 0 || pinned.len() < 2 {
            // |I| <= 1 leaves the tuple () or (1): no gaps.
            continue;
        }
        total += count * weight(&gap_data(&subtuple_on(a, &pinned)));
    }
    Ok(total)
}

/// `r(a) = sum_{mu <= lambda} F(a^lambda_mu)` with `lambda_i = max(a)`.
pub fn r_bound(a: &PrimitiveTuple) -> u64 {
    r_bound_with(a, &a.default_lambda()).expect("default lambda has matching length")
}

/// `r(a)` for an explicit `lambda`.
pub fn r_bound_with(a: &PrimitiveTuple, lam: &MultiIndex) -> Result<u64> {
    sum_over_blocks(a, lam, |g| g.frobenius)
}

/// `g(a) = sum_{mu <= lambda} |G(a^lambda_mu)|` with `lambda_i = max(a)`.
pub fn g_bound(a: &PrimitiveTuple) -> u64 {
    g_bound_with(a, &a.default_lambda()).expect("default lambda has matching length")
}

/// `g(a)` for an explicit `lambda`.
pub fn g_bound_with(a: &PrimitiveTuple, lam: &MultiIndex) -> Result<u64> {
    sum_over_blocks(a, lam, |g| g.gap_count() as u64)
}
