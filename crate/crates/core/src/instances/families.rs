//! Named instance families.
//!
//! * `example_3_1`: two disjoint generators over weights `(1, 2)` on which
//!   maximizing `w . x` and then searching below the maximizer misses every
//!   odd weight.
//! * `lower_bound`: the `(2, 3)` system whose image lacks `5m - 1`, together
//!   with the hidden points `y` whose addition restores that value.
//! * `membership`: all-ones weights over `{x : |supp x| <= m - 1}`, with the
//!   hidden weight-`m` points.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::{GroundPoint, IndependenceSystem, Instance, ObjectiveTable, WeightVector};
use crate::error::{Error, Result};
use crate::monoid::PrimitiveTuple;

/// Largest `m` for which the lower-bound family is built.
pub const LOWER_BOUND_MAX_M: usize = 6;
/// Largest `m` for which the membership family is built.
pub const MEMBERSHIP_MAX_M: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyName {
    #[serde(rename = "example_3_1")]
    Example31,
    LowerBound,
    Membership,
}

impl FamilyName {
    pub const ALL: [FamilyName; 3] =
        [FamilyName::Example31, FamilyName::LowerBound, FamilyName::Membership];

    pub fn as_str(self) -> &'static str {
        match self {
            FamilyName::Example31 => "example_3_1",
            FamilyName::LowerBound => "lower_bound",
            FamilyName::Membership => "membership",
        }
    }

    /// The family's instance with its default objective.
    pub fn instance(self, m: usize) -> Result<Instance> {
        match self {
            FamilyName::Example31 => example_3_1(m),
            FamilyName::LowerBound => Ok(LowerBoundFamily::new(m)?.instance),
            FamilyName::Membership => Ok(MembershipFamily::new(m)?.instance),
        }
    }

    /// Just the default objective table of the family at `m`.
    pub fn objective(self, m: usize) -> Result<ObjectiveTable> {
        match self {
            FamilyName::Example31 => example_3_1_objective(m),
            FamilyName::LowerBound => distance_objective(5 * m as u64, 5 * m as u64 - 1),
            FamilyName::Membership => distance_objective(2 * m as u64, m as u64),
        }
    }
}

impl fmt::Display for FamilyName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FamilyName {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        FamilyName::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| format!("unknown family {s:?}; expected example_3_1, lower_bound or membership"))
    }
}

fn require_m(m: usize, min: usize, max: Option<usize>) -> Result<()> {
    if m < min {
        return Err(Error::InvalidParameter { name: "m", value: m as u64, reason: "too small for this family" });
    }
    if let Some(max) = max {
        if m > max {
            return Err(Error::TooLarge { what: "m", value: m as u64, limit: max as u64 });
        }
    }
    Ok(())
}

/// `f(k) = |k - target|` on `0..=max`.
fn distance_objective(max: u64, target: u64) -> Result<ObjectiveTable> {
    ObjectiveTable::from_fn(max, |k| k.abs_diff(target) as f64)
}

fn example_3_1_objective(m: usize) -> Result<ObjectiveTable> {
    require_m(m, 1, None)?;
    let m = m as u64;
    ObjectiveTable::from_fn(4 * m, |k| if k % 2 == 1 { k as f64 } else { (2 * m) as f64 })
}

/// `n = 4m`, generators `y = 1` on the first half and `z = 1` on the second,
/// `w = y + 2z`, and `f(k) = k` for odd `k`, `2m` for even `k`.
pub fn example_3_1(m: usize) -> Result<Instance> {
    require_m(m, 1, None)?;
    let n = 4 * m;
    let y = GroundPoint::from_support(n, &(0..2 * m).collect::<Vec<_>>())?;
    let z = GroundPoint::from_support(n, &(2 * m..n).collect::<Vec<_>>())?;
    let tuple = PrimitiveTuple::new(vec![1, 2])?;
    let weights = WeightVector::new((0..n).map(|j| if j < 2 * m { 1 } else { 2 }).collect(), tuple)?;
    let system = IndependenceSystem::generators(n, vec![y, z])?;
    Instance::new(format!("example_3_1(m={m})"), system, weights, example_3_1_objective(m)?)
}

/// The `(2, 3)` lower-bound construction on `n = 4m` elements.
///
/// With `I` the first `2m` indices and `J` the rest, `T_i` is the set of
/// points with `m + i` ones in `I` and `m - i` ones in `J`. The visible
/// system is `S = ↓(T_0 ∪ T_2)`; each `y` in `T_1` gives a world
/// `S_y = S ∪ {y}` whose image additionally contains `5m - 1`.
///
/// `T_1` is indexed rather than stored: index `k` names the `A`-part
/// `k / |C(J, m-1)|` and `B`-part `k % |C(J, m-1)|` in lexicographic order.
#[derive(Debug, Clone)]
pub struct LowerBoundFamily {
    m: usize,
    /// `S` with objective `f(k) = |k - (5m - 1)|`.
    pub instance: Instance,
    t1_a: Vec<Vec<usize>>,
    t1_b: Vec<Vec<usize>>,
}

impl LowerBoundFamily {
    pub fn new(m: usize) -> Result<Self> {
        require_m(m, 2, Some(LOWER_BOUND_MAX_M))?;
        let n = 4 * m;
        let tuple = PrimitiveTuple::new(vec![2, 3])?;
        let weights = WeightVector::new((0..n).map(|j| if j < 2 * m { 2 } else { 3 }).collect(), tuple)?;
        let mut generators = layer(m, 0)?;
        generators.extend(layer(m, 2)?);
        let system = IndependenceSystem::generators(n, generators)?;
        let objective = FamilyName::LowerBound.objective(m)?;
        let instance = Instance::new(format!("lower_bound(m={m})"), system, weights, objective)?;
        Ok(LowerBoundFamily {
            m,
            instance,
            t1_a: (0..2 * m).combinations(m + 1).collect(),
            t1_b: (2 * m..n).combinations(m - 1).collect(),
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        4 * self.m
    }

    /// The image value present only in the hidden worlds, `5m - 1`.
    pub fn hidden_value(&self) -> u64 {
        5 * self.m as u64 - 1
    }

    pub fn system(&self) -> &IndependenceSystem {
        &self.instance.system
    }

    pub fn weights(&self) -> &WeightVector {
        &self.instance.weights
    }

    /// `T_i` for `i` in `{0, 1, 2}`.
    pub fn layer(&self, i: usize) -> Result<Vec<GroundPoint>> {
        layer(self.m, i)
    }

    /// `|T_1| = C(2m, m+1) * C(2m, m-1)`.
    pub fn t1_len(&self) -> usize {
        self.t1_a.len() * self.t1_b.len()
    }

    /// The `A` and `B` index sets of the `k`-th member of `T_1`.
    pub fn t1_parts(&self, k: usize) -> (&[usize], &[usize]) {
        let nb = self.t1_b.len();
        (&self.t1_a[k / nb], &self.t1_b[k % nb])
    }

    pub fn t1(&self, k: usize) -> GroundPoint {
        let (a, b) = self.t1_parts(k);
        let support: Vec<usize> = a.iter().chain(b).copied().collect();
        GroundPoint::from_support(self.n(), &support).expect("indices are in range")
    }

    pub fn t1_points(&self) -> impl Iterator<Item = GroundPoint> + '_ {
        (0..self.t1_len()).map(|k| self.t1(k))
    }

    /// `S_y` for the `k`-th member `y` of `T_1`.
    pub fn system_with(&self, k: usize) -> Result<IndependenceSystem> {
        self.system().with_point(self.t1(k))
    }

    pub fn instance_with(&self, k: usize) -> Result<Instance> {
        let mut inst = self.instance.with_system(self.system_with(k)?)?;
        inst.name = format!("lower_bound(m={}, y={})", self.m, self.t1(k));
        Ok(inst)
    }
}

fn layer(m: usize, i: usize) -> Result<Vec<GroundPoint>> {
    if i > 2 {
        return Err(Error::InvalidParameter { name: "layer", value: i as u64, reason: "must be 0, 1 or 2" });
    }
    let n = 4 * m;
    let mut out = Vec::new();
    for a in (0..2 * m).combinations(m + i) {
        for b in (2 * m..n).combinations(m - i) {
            let support: Vec<usize> = a.iter().chain(&b).copied().collect();
            out.push(GroundPoint::from_support(n, &support)?);
        }
    }
    Ok(out)
}

/// All-ones weights on `n = 2m` elements over `S = {x : |supp x| <= m - 1}`.
/// The hidden worlds add one weight-`m` point each.
#[derive(Debug, Clone)]
pub struct MembershipFamily {
    m: usize,
    /// `S` with objective `f(k) = |k - m|`.
    pub instance: Instance,
    heavy: Vec<Vec<usize>>,
}

impl MembershipFamily {
    pub fn new(m: usize) -> Result<Self> {
        require_m(m, 1, Some(MEMBERSHIP_MAX_M))?;
        let n = 2 * m;
        let tuple = PrimitiveTuple::new(vec![1])?;
        let weights = WeightVector::new(vec![1; n], tuple)?;
        let generators = (0..n)
            .combinations(m - 1)
            .map(|c| GroundPoint::from_support(n, &c))
            .collect::<Result<Vec<_>>>()?;
        let system = IndependenceSystem::generators(n, generators)?;
        let objective = FamilyName::Membership.objective(m)?;
        let instance = Instance::new(format!("membership(m={m})"), system, weights, objective)?;
        Ok(MembershipFamily { m, instance, heavy: (0..n).combinations(m).collect() })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        2 * self.m
    }

    pub fn hidden_value(&self) -> u64 {
        self.m as u64
    }

    pub fn system(&self) -> &IndependenceSystem {
        &self.instance.system
    }

    pub fn weights(&self) -> &WeightVector {
        &self.instance.weights
    }

    /// Number of weight-`m` points, `C(2m, m)`.
    pub fn heavy_len(&self) -> usize {
        self.heavy.len()
    }

    pub fn heavy(&self, k: usize) -> GroundPoint {
        GroundPoint::from_support(self.n(), &self.heavy[k]).expect("indices are in range")
    }

    pub fn heavy_points(&self) -> impl Iterator<Item = GroundPoint> + '_ {
        (0..self.heavy_len()).map(|k| self.heavy(k))
    }

    pub fn system_with(&self, k: usize) -> Result<IndependenceSystem> {
        self.system().with_point(self.heavy(k))
    }

    pub fn instance_with(&self, k: usize) -> Result<Instance> {
        let mut inst = self.instance.with_system(self.system_with(k)?)?;
        inst.name = format!("membership(m={}, y={})", self.m, self.heavy(k));
        Ok(inst)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn values(set: std::collections::BTreeSet<u64>) -> Vec<u64> {
        set.into_iter().collect()
    }

    #[test]
    fn trap_family_shape() {
        let inst = example_3_1(1).unwrap();
        assert_eq!(inst.weights.weights(), &[1, 1, 2, 2]);
        assert!(inst.system.contains(&GroundPoint::zeros(4)));
        let inst = example_3_1(2).unwrap();
        let expected: Vec<u64> = (0..=4).chain([6, 8]).collect();
        assert_eq!(values(inst.image().unwrap()), expected);
        assert_eq!(inst.system.argmax(&inst.weights.as_query()).unwrap().to_bitstring(), "00001111");
        assert!(example_3_1(0).is_err());
    }

    #[test]
    fn example_3_1_objective_values() {
        let f = FamilyName::Example31.objective(3).unwrap();
        assert_eq!(f.value(5).unwrap(), 5.0);
        assert_eq!(f.value(6).unwrap(), 6.0);
        assert_eq!(f.value(4).unwrap(), 6.0);
    }

    #[test]
    fn lower_bound_sizes_and_images() {
        let fam = LowerBoundFamily::new(2).unwrap();
        assert_eq!(fam.t1_len(), 16);
        assert_eq!(fam.t1_points().collect::<std::collections::BTreeSet<_>>().len(), 16);
        let expected: Vec<u64> = (0..=10).filter(|v| *v != 1 && *v != 9).collect();
        assert_eq!(values(fam.instance.image().unwrap()), expected);
        let with_y = fam.system_with(5).unwrap();
        let expected: Vec<u64> = (0..=10).filter(|v| *v != 1).collect();
        assert_eq!(values(with_y.image(fam.weights()).unwrap()), expected);
        for x in fam.layer(0).unwrap() {
            assert_eq!(fam.weights().weight(&x), 10);
        }
        assert!(LowerBoundFamily::new(1).is_err());
        assert!(matches!(LowerBoundFamily::new(7), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn membership_family() {
        let fam = MembershipFamily::new(2).unwrap();
        assert_eq!(values(fam.instance.image().unwrap()), vec![0, 1]);
        assert_eq!(values(fam.system_with(0).unwrap().image(fam.weights()).unwrap()), vec![0, 1, 2]);
        assert_eq!(fam.heavy_len(), 6);
        let one = MembershipFamily::new(1).unwrap();
        assert_eq!(one.system().enumerate().unwrap(), vec![GroundPoint::zeros(2)]);
        assert_eq!(MembershipFamily::new(3).unwrap().heavy_len(), 20);
    }

    #[test]
    fn family_names_parse() {
        for f in FamilyName::ALL {
            assert_eq!(f.as_str().parse::<FamilyName>().unwrap(), f);
        }
        assert!("nope".parse::<FamilyName>().is_err());
    }
}
