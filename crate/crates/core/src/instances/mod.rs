//! Independence systems, weight vectors and objective tables, plus the
//! oracles solvers use to look at them.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monoid::{restricted_monoid, MultiIndex, PrimitiveTuple};

pub mod families;
pub mod format;
mod oracle;
pub mod random;

pub use oracle::{
    ComparisonOracle, LinearOracle, MembershipOracle, OracleStats, SystemOracle, TableComparator,
};

/// Largest support a single generator may have before its downward closure
/// is considered too big to enumerate.
pub const MAX_ENUMERATION_SUPPORT: usize = 24;

/// A 0/1 vector over the ground set. Index 0 is the leftmost character of
/// the string form.
///
/// The derived order is lexicographic with 0 < 1, the order used for all
/// deterministic tie-breaking.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroundPoint {
    bits: Vec<bool>,
}

impl GroundPoint {
    pub fn zeros(n: usize) -> Self {
        GroundPoint { bits: vec![false; n] }
    }

    pub fn from_bits(bits: Vec<bool>) -> Self {
        GroundPoint { bits }
    }

    /// The indicator vector of `support`.
    pub fn from_support(n: usize, support: &[usize]) -> Result<Self> {
        let mut p = GroundPoint::zeros(n);
        for &j in support {
            if j >= n {
                return Err(Error::InvalidPoint(format!("index {j} outside ground set of size {n}")));
            }
            p.bits[j] = true;
        }
        Ok(p)
    }

    /// Parses a string of `0`/`1` characters.
    pub fn parse(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::InvalidPoint(format!("unexpected character {other:?} in {s:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GroundPoint { bits })
    }

    pub fn to_bitstring(&self) -> String {
        self.bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn get(&self, j: usize) -> bool {
        self.bits[j]
    }

    pub fn set(&mut self, j: usize, value: bool) {
        self.bits[j] = value;
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.bits.len()).filter(|&j| self.bits[j]).collect()
    }

    pub fn cardinality(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn is_zero(&self) -> bool {
        !self.bits.iter().any(|&b| b)
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &GroundPoint) -> bool {
        self.len() == other.len() && self.bits.iter().zip(&other.bits).all(|(&x, &y)| !x || y)
    }

    /// Copy with coordinate `j` set to 0.
    pub fn without(&self, j: usize) -> GroundPoint {
        let mut p = self.clone();
        p.bits[j] = false;
        p
    }

    /// `v . self`.
    pub fn dot(&self, v: &[i64]) -> i64 {
        self.bits.iter().zip(v).filter(|(&b, _)| b).map(|(_, &vj)| vj).sum()
    }

    /// All points below `self`, in no particular order.
    pub fn subsets(&self) -> Result<Vec<GroundPoint>> {
        let support = self.support();
        if support.len() > MAX_ENUMERATION_SUPPORT {
            return Err(Error::TooLarge {
                what: "generator support",
                value: support.len() as u64,
                limit: MAX_ENUMERATION_SUPPORT as u64,
            });
        }
        let mut out = Vec::with_capacity(1 << support.len());
        for mask in 0u64..(1 << support.len()) {
            let mut p = GroundPoint::zeros(self.len());
            for (k, &j) in support.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    p.bits[j] = true;
                }
            }
            out.push(p);
        }
        Ok(out)
    }
}

impl fmt::Debug for GroundPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_bitstring())
    }
}

impl fmt::Display for GroundPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_bitstring())
    }
}

impl Serialize for GroundPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_bitstring())
    }
}

impl<'de> Deserialize<'de> for GroundPoint {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        GroundPoint::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// A weight vector whose entries all come from a primitive tuple, together
/// with the induced partition of the ground set into weight classes.
#[derive(Clone, PartialEq, Eq)]
pub struct WeightVector {
    weights: Vec<u64>,
    tuple: PrimitiveTuple,
    classes: Vec<Vec<usize>>,
}

impl WeightVector {
    pub fn new(weights: Vec<u64>, tuple: PrimitiveTuple) -> Result<Self> {
        let mut classes = vec![Vec::new(); tuple.len()];
        for (j, &w) in weights.iter().enumerate() {
            let i = tuple.index_of(w).ok_or(Error::WeightNotInTuple { index: j, weight: w })?;
            classes[i].push(j);
        }
        Ok(WeightVector { weights, tuple, classes })
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn tuple(&self) -> &PrimitiveTuple {
        &self.tuple
    }

    /// `N_i`: ground indices carrying weight `a_i`, ascending.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn n(&self) -> usize {
        self.weights.len()
    }

    pub fn as_query(&self) -> Vec<i64> {
        self.weights.iter().map(|&w| w as i64).collect()
    }

    /// `lambda(x)`: how many support elements of `x` fall in each class.
    pub fn counts(&self, x: &GroundPoint) -> MultiIndex {
        MultiIndex::new(
            self.classes.iter().map(|c| c.iter().filter(|&&j| x.get(j)).count() as u64).collect(),
        )
    }

    /// Class sizes `|N_i|`.
    pub fn class_sizes(&self) -> MultiIndex {
        MultiIndex::new(self.classes.iter().map(|c| c.len() as u64).collect())
    }

    /// `w . x`.
    pub fn weight(&self, x: &GroundPoint) -> u64 {
        x.bits().iter().zip(&self.weights).filter(|(&b, _)| b).map(|(_, &w)| w).sum()
    }
}

impl fmt::Debug for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeightVector({:?} over {})", self.weights, self.tuple)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Representation {
    /// Every point, already closed downward.
    Explicit(BTreeSet<GroundPoint>),
    /// An antichain whose downward closure is the system.
    Generators(Vec<GroundPoint>),
}

/// A nonempty downward-closed family of 0/1 vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependenceSystem {
    n: usize,
    repr: Representation,
}

fn check_points(n: usize, points: &[GroundPoint]) -> Result<()> {
    for p in points {
        if p.len() != n {
            return Err(Error::InvalidPoint(format!("{p} has length {} but n = {n}", p.len())));
        }
    }
    Ok(())
}

impl IndependenceSystem {
    /// Explicit listing; the points are closed downward and the zero point
    /// added if missing.
    pub fn explicit(n: usize, points: Vec<GroundPoint>) -> Result<Self> {
        check_points(n, &points)?;
        let mut all = BTreeSet::new();
        all.insert(GroundPoint::zeros(n));
        for p in &points {
            all.extend(p.subsets()?);
        }
        Ok(IndependenceSystem { n, repr: Representation::Explicit(all) })
    }

    /// Explicit listing that must already be downward closed and contain 0.
    pub fn explicit_strict(n: usize, points: Vec<GroundPoint>) -> Result<Self> {
        check_points(n, &points)?;
        let all: BTreeSet<GroundPoint> = points.into_iter().collect();
        let zero = GroundPoint::zeros(n);
        if !all.contains(&zero) {
            return Err(Error::NotClosed(zero.to_bitstring()));
        }
        for p in &all {
            for j in p.support() {
                let q = p.without(j);
                if !all.contains(&q) {
                    return Err(Error::NotClosed(q.to_bitstring()));
                }
            }
        }
        Ok(IndependenceSystem { n, repr: Representation::Explicit(all) })
    }

    /// Downward closure of `generators`. Dominated generators are dropped;
    /// an empty list gives `{0}`.
    pub fn generators(n: usize, generators: Vec<GroundPoint>) -> Result<Self> {
        check_points(n, &generators)?;
        let mut distinct: Vec<GroundPoint> =
            generators.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        if distinct.is_empty() {
            distinct.push(GroundPoint::zeros(n));
        }
        let antichain: Vec<GroundPoint> = distinct
            .iter()
            .filter(|&g| !distinct.iter().any(|h| h != g && g.le(h)))
            .cloned()
            .collect();
        Ok(IndependenceSystem { n, repr: Representation::Generators(antichain) })
    }

    /// Ground-set size.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_explicit(&self) -> bool {
        matches!(self.repr, Representation::Explicit(_))
    }

    /// The listed points: every point for explicit systems, the generating
    /// antichain otherwise.
    pub fn listed_points(&self) -> Vec<GroundPoint> {
        match &self.repr {
            Representation::Explicit(all) => all.iter().cloned().collect(),
            Representation::Generators(gens) => gens.clone(),
        }
    }

    /// Membership test.
    pub fn contains(&self, x: &GroundPoint) -> bool {
        if x.len() != self.n {
            return false;
        }
        match &self.repr {
            Representation::Explicit(all) => all.contains(x),
            Representation::Generators(gens) => gens.iter().any(|g| x.le(g)),
        }
    }

    /// Some `x` in the system maximizing `v . x`; the lexicographically
    /// smallest one.
    pub fn argmax(&self, v: &[i64]) -> Result<GroundPoint> {
        if v.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, found: v.len() });
        }
        let mut best: Option<(i64, GroundPoint)> = None;
        let mut consider = |x: GroundPoint| {
            let value = x.dot(v);
            let better = match &best {
                None => true,
                Some((bv, bx)) => value > *bv || (value == *bv && x < *bx),
            };
            if better {
                best = Some((value, x));
            }
        };
        match &self.repr {
            Representation::Explicit(all) => all.iter().cloned().for_each(&mut consider),
            Representation::Generators(gens) => {
                // Below g, the smallest maximizer keeps exactly the strictly
                // profitable coordinates.
                for g in gens {
                    let bits = g.bits().iter().zip(v).map(|(&b, &vj)| b && vj > 0).collect();
                    consider(GroundPoint::from_bits(bits));
                }
            }
        }
        Ok(best.expect("system is nonempty").1)
    }

    /// Every point of the system, sorted lexicographically.
    pub fn enumerate(&self) -> Result<Vec<GroundPoint>> {
        match &self.repr {
            Representation::Explicit(all) => Ok(all.iter().cloned().collect()),
            Representation::Generators(gens) => {
                let mut all = BTreeSet::new();
                for g in gens {
                    all.extend(g.subsets()?);
                }
                Ok(all.into_iter().collect())
            }
        }
    }

    /// The same system in explicit form.
    pub fn to_explicit(&self) -> Result<IndependenceSystem> {
        Ok(IndependenceSystem {
            n: self.n,
            repr: Representation::Explicit(self.enumerate()?.into_iter().collect()),
        })
    }

    /// The system with one more generator, `S ∪ ↓{y}`.
    pub fn with_point(&self, y: GroundPoint) -> Result<IndependenceSystem> {
        let mut listed = self.listed_points();
        listed.push(y);
        match self.repr {
            Representation::Explicit(_) => IndependenceSystem::explicit(self.n, listed),
            Representation::Generators(_) => IndependenceSystem::generators(self.n, listed),
        }
    }

    /// `w . S = { w . x : x in S }`. Explicit systems are scanned; for
    /// generators the image below each generator is the restricted monoid
    /// at its class counts.
    pub fn image(&self, w: &WeightVector) -> Result<BTreeSet<u64>> {
        if w.n() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, found: w.n() });
        }
        match &self.repr {
            Representation::Explicit(all) => Ok(all.iter().map(|x| w.weight(x)).collect()),
            Representation::Generators(gens) => {
                let mut out = BTreeSet::new();
                for g in gens {
                    out.extend(restricted_monoid(w.tuple(), &w.counts(g))?.iter());
                }
                Ok(out)
            }
        }
    }
}

/// Objective values `f(0), f(1), ..., f(W)` over the attainable weights.
///
/// Solvers never read this table; they only get a [`ComparisonOracle`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ObjectiveTable {
    values: Vec<f64>,
}

impl ObjectiveTable {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidObjective("table is empty".into()));
        }
        if let Some(k) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::InvalidObjective(format!("value {k} is not finite")));
        }
        Ok(ObjectiveTable { values })
    }

    /// Tabulates `f` on `0..=max`.
    pub fn from_fn(max: u64, f: impl FnMut(u64) -> f64) -> Result<Self> {
        ObjectiveTable::new((0..=max).map(f).collect())
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn value(&self, k: u64) -> Result<f64> {
        self.values
            .get(k as usize)
            .copied()
            .ok_or(Error::TableTooShort { index: k, len: self.values.len() })
    }

    /// Order of `f(x)` relative to `f(y)`, uncounted.
    pub fn compare(&self, x: u64, y: u64) -> Result<Ordering> {
        Ok(self.value(x)?.total_cmp(&self.value(y)?))
    }

    /// Counting comparison oracle over this table.
    pub fn comparator(&self) -> TableComparator<'_> {
        TableComparator::new(self)
    }
}

/// A complete problem: system, weights and objective.
#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    pub name: String,
    pub system: IndependenceSystem,
    pub weights: WeightVector,
    pub objective: ObjectiveTable,
}

impl Instance {
    /// Checks that the dimensions agree and that the table covers
    /// `max { w . x : x in S }`.
    pub fn new(
        name: impl Into<String>,
        system: IndependenceSystem,
        weights: WeightVector,
        objective: ObjectiveTable,
    ) -> Result<Self> {
        if weights.n() != system.n() {
            return Err(Error::LengthMismatch { expected: system.n(), found: weights.n() });
        }
        let top = weights.weight(&system.argmax(&weights.as_query())?);
        objective.value(top)?;
        Ok(Instance { name: name.into(), system, weights, objective })
    }

    pub fn n(&self) -> usize {
        self.system.n()
    }

    pub fn tuple(&self) -> &PrimitiveTuple {
        self.weights.tuple()
    }

    pub fn image(&self) -> Result<BTreeSet<u64>> {
        self.system.image(&self.weights)
    }

    /// Same weights and objective over a different system.
    pub fn with_system(&self, system: IndependenceSystem) -> Result<Instance> {
        Instance::new(self.name.clone(), system, self.weights.clone(), self.objective.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(s: &str) -> GroundPoint {
        GroundPoint::parse(s).unwrap()
    }

    #[test]
    fn argmax_below_single_generator() {
        let s = IndependenceSystem::generators(3, vec![pt("110")]).unwrap();
        assert_eq!(s.argmax(&[2, -1, 5]).unwrap(), pt("100"));
        let e = s.to_explicit().unwrap();
        assert_eq!(e.argmax(&[2, -1, 5]).unwrap(), pt("100"));
        assert_eq!(s.argmax(&[0, 0, 0]).unwrap(), pt("000"));
        assert_eq!(e.argmax(&[0, 0, 0]).unwrap(), pt("000"));
        assert!(matches!(s.argmax(&[1]), Err(Error::LengthMismatch { .. })));
    }

    #[test]
    fn explicit_closure_on_load() {
        let s = IndependenceSystem::explicit(3, vec![pt("101")]).unwrap();
        assert_eq!(s.enumerate().unwrap(), vec![pt("000"), pt("001"), pt("100"), pt("101")]);
        assert!(matches!(
            IndependenceSystem::explicit_strict(3, vec![pt("000"), pt("101")]),
            Err(Error::NotClosed(_))
        ));
        assert!(IndependenceSystem::explicit_strict(2, vec![pt("00"), pt("01")]).is_ok());
    }

    #[test]
    fn generators_reduce_to_antichain() {
        let s = IndependenceSystem::generators(3, vec![pt("100"), pt("110"), pt("001")]).unwrap();
        assert_eq!(s.listed_points(), vec![pt("001"), pt("110")]);
        let empty = IndependenceSystem::generators(2, vec![]).unwrap();
        assert_eq!(empty.enumerate().unwrap(), vec![pt("00")]);
    }

    #[test]
    fn weight_classes_and_counts() {
        let a = PrimitiveTuple::new(vec![2, 3]).unwrap();
        let w = WeightVector::new(vec![2, 3, 3, 2], a.clone()).unwrap();
        assert_eq!(w.classes(), &[vec![0, 3], vec![1, 2]]);
        let x = pt("1110");
        assert_eq!(w.counts(&x).counts(), &[1, 2]);
        assert_eq!(w.weight(&x), w.counts(&x).dot(&a).unwrap());
        assert!(matches!(
            WeightVector::new(vec![2, 5], a),
            Err(Error::WeightNotInTuple { index: 1, weight: 5 })
        ));
    }

    #[test]
    fn image_of_zero_system() {
        let a = PrimitiveTuple::new(vec![1]).unwrap();
        let w = WeightVector::new(vec![1, 1], a).unwrap();
        let s = IndependenceSystem::generators(2, vec![]).unwrap();
        assert_eq!(s.image(&w).unwrap().into_iter().collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn table_compare() {
        let f = ObjectiveTable::new(vec![3.0, 1.0, 1.0]).unwrap();
        assert_eq!(f.compare(0, 1).unwrap(), Ordering::Greater);
        assert_eq!(f.compare(1, 2).unwrap(), Ordering::Equal);
        assert_eq!(f.compare(2, 2).unwrap(), Ordering::Equal);
        assert_eq!(f.compare(0, 3), Err(Error::TableTooShort { index: 3, len: 3 }));
        assert!(ObjectiveTable::new(vec![f64::NAN]).is_err());
    }

    #[test]
    fn instance_requires_covering_table() {
        let a = PrimitiveTuple::new(vec![1]).unwrap();
        let w = WeightVector::new(vec![1, 1], a).unwrap();
        let s = IndependenceSystem::generators(2, vec![pt("11")]).unwrap();
        let short = ObjectiveTable::new(vec![0.0, 1.0]).unwrap();
        assert!(matches!(
            Instance::new("t", s.clone(), w.clone(), short),
            Err(Error::TableTooShort { index: 2, .. })
        ));
        let ok = ObjectiveTable::new(vec![0.0, 1.0, 2.0]).unwrap();
        assert!(Instance::new("t", s, w, ok).is_ok());
    }
}
