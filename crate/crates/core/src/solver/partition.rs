//! Faces and blocks of an independence system, optimized through the
//! linear oracle alone.

use std::collections::BTreeSet;

use num_integer::binomial;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::instances::{GroundPoint, LinearOracle, WeightVector};
use crate::monoid::MultiIndex;

/// The face `{ x in S : x_j = 0 for j in lower, x_j = 1 for j in upper }`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct FaceSpec {
    lower: BTreeSet<usize>,
    upper: BTreeSet<usize>,
}

impl FaceSpec {
    pub fn new(lower: impl IntoIterator<Item = usize>, upper: impl IntoIterator<Item = usize>) -> Result<Self> {
        let lower: BTreeSet<usize> = lower.into_iter().collect();
        let upper: BTreeSet<usize> = upper.into_iter().collect();
        if let Some(j) = lower.intersection(&upper).next() {
            return Err(Error::InvalidFace(format!("index {j} is pinned to both 0 and 1")));
        }
        Ok(FaceSpec { lower, upper })
    }

    /// The whole system.
    pub fn full() -> Self {
        FaceSpec::default()
    }

    pub fn lower(&self) -> &BTreeSet<usize> {
        &self.lower
    }

    pub fn upper(&self) -> &BTreeSet<usize> {
        &self.upper
    }

    pub fn contains(&self, x: &GroundPoint) -> bool {
        self.lower.iter().all(|&j| !x.get(j)) && self.upper.iter().all(|&j| x.get(j))
    }
}

/// Penalty `1 + 2n max|w_j|`, larger than twice any `|w . x|`.
pub fn face_penalty(w: &WeightVector) -> i64 {
    let max = w.weights().iter().copied().max().unwrap_or(0) as i64;
    1 + 2 * w.n() as i64 * max
}

/// `max { w . x : x in face }` with one oracle call, or `None` when the face
/// is empty.
///
/// The oracle maximizes `w + penalty * (1_upper - 1_lower)`; after removing
/// `|upper| * penalty`, a value above `-penalty / 2` means the maximizer lies
/// in the face and maximizes `w` there, and a value below means the face is
/// empty. The penalty is odd, so the value never equals `-penalty / 2`.
pub fn face_maximize(
    oracle: &dyn LinearOracle,
    w: &WeightVector,
    face: &FaceSpec,
) -> Result<Option<GroundPoint>> {
    let n = w.n();
    if oracle.dim() != n {
        return Err(Error::LengthMismatch { expected: n, found: oracle.dim() });
    }
    if let Some(&j) = face.lower.iter().chain(&face.upper).find(|&&j| j >= n) {
        return Err(Error::InvalidFace(format!("index {j} outside ground set of size {n}")));
    }
    let alpha = face_penalty(w);
    let mut v = w.as_query();
    for &j in &face.upper {
        v[j] += alpha;
    }
    for &j in &face.lower {
        v[j] -= alpha;
    }
    let x = oracle.maximize(&v)?;
    let value = x.dot(&v) - face.upper.len() as i64 * alpha;
    assert!(2 * value != -alpha, "penalized face value hit -alpha/2 exactly");
    if 2 * value > -alpha {
        debug_assert!(face.contains(&x));
        Ok(Some(x))
    } else {
        Ok(None)
    }
}

/// A block of the partition induced by `lam`: points whose class counts
/// equal `mu_i` where `mu_i < lam_i`, and are at least `mu_i` where
/// `mu_i = lam_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BlockSpec {
    pub lam: MultiIndex,
    pub mu: MultiIndex,
}

impl BlockSpec {
    pub fn new(lam: MultiIndex, mu: MultiIndex) -> Result<Self> {
        if !mu.le(&lam) {
            return Err(Error::NotBelow { mu: mu.counts().to_vec(), lam: lam.counts().to_vec() });
        }
        Ok(BlockSpec { lam, mu })
    }

    /// Whether a point with class counts `counts` lies in this block.
    pub fn contains_counts(&self, counts: &MultiIndex) -> bool {
        counts.len() == self.mu.len()
            && (0..self.mu.len()).all(|i| {
                let (c, m, l) = (counts.counts()[i], self.mu.counts()[i], self.lam.counts()[i]);
                if m < l {
                    c == m
                } else {
                    c >= m
                }
            })
    }
}

/// The unique block containing a point with class counts `counts`:
/// `mu_i = min(counts_i, lam_i)`.
pub fn block_of(counts: &MultiIndex, lam: &MultiIndex) -> Result<MultiIndex> {
    if counts.len() != lam.len() {
        return Err(Error::LengthMismatch { expected: lam.len(), found: counts.len() });
    }
    Ok(MultiIndex::new(counts.counts().iter().zip(lam.counts()).map(|(&c, &l)| c.min(l)).collect()))
}

/// Oracle calls [`block_maximize`] makes for `mu`: `prod_i C(|N_i|, mu_i)`.
fn block_calls(w: &WeightVector, mu: &MultiIndex) -> u64 {
    w.classes().iter().zip(mu.counts()).map(|(c, &m)| binomial(c.len() as u64, m)).product()
}

/// Total oracle calls of one pass over every block `mu <= lam`:
/// `sum_{mu <= lam} prod_i C(|N_i|, mu_i)`.
pub fn linear_query_budget(w: &WeightVector, lam: &MultiIndex) -> u64 {
    lam.box_below().map(|mu| block_calls(w, &mu)).sum()
}

/// `max { w . x : x in block }`, or `None` for an empty block.
///
/// Every choice of `mu_i`-subsets `S_i` of the weight classes gives one face:
/// `S_i` pinned to 1, and for classes with `mu_i < lam_i` the rest of the
/// class pinned to 0. The block is the union of these faces.
pub fn block_maximize(
    oracle: &dyn LinearOracle,
    w: &WeightVector,
    block: &BlockSpec,
) -> Result<Option<GroundPoint>> {
    let p = w.tuple().len();
    if block.lam.len() != p {
        return Err(Error::LengthMismatch { expected: p, found: block.lam.len() });
    }
    let mu = block.mu.counts();
    if w.classes().iter().zip(mu).any(|(c, &m)| m as usize > c.len()) {
        return Ok(None);
    }
    let exact: Vec<bool> = (0..p).map(|i| mu[i] < block.lam.counts()[i]).collect();
    let mut best: Option<(u64, GroundPoint)> = None;
    let mut chosen: Vec<Vec<usize>> = Vec::with_capacity(p);
    for_each_choice(w.classes(), mu, &mut chosen, &mut |choice| {
        let mut lower = Vec::new();
        let mut upper = Vec::new();
        for (i, picked) in choice.iter().enumerate() {
            upper.extend(picked);
            if exact[i] {
                lower.extend(w.classes()[i].iter().filter(|j| !picked.contains(j)));
            }
        }
        let face = FaceSpec::new(lower, upper)?;
        if let Some(x) = face_maximize(oracle, w, &face)? {
            let wx = w.weight(&x);
            if best.as_ref().is_none_or(|(bw, _)| wx > *bw) {
                best = Some((wx, x));
            }
        }
        Ok(())
    })?;
    Ok(best.map(|(_, x)| x))
}

/// Calls `visit` once per tuple `(S_1, ..., S_p)` with `S_i` a
/// `mu_i`-subset of `classes[i]`, in lexicographic order.
fn for_each_choice(
    classes: &[Vec<usize>],
    mu: &[u64],
    chosen: &mut Vec<Vec<usize>>,
    visit: &mut dyn FnMut(&[Vec<usize>]) -> Result<()>,
) -> Result<()> {
    let i = chosen.len();
    if i == classes.len() {
        return visit(chosen);
    }
    for subset in itertools::Itertools::combinations(classes[i].iter().copied(), mu[i] as usize) {
        chosen.push(subset);
        let r = for_each_choice(classes, mu, chosen, visit);
        chosen.pop();
        r?;
    }
    Ok(())
}
