//! Seeded random instances for property sweeps and the `gen` command.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{GroundPoint, IndependenceSystem, Instance, ObjectiveTable, WeightVector};
use crate::error::{Error, Result};
use crate::monoid::PrimitiveTuple;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RandomConfig {
    pub n: usize,
    pub tuple: PrimitiveTuple,
    /// Number of random generators drawn.
    pub generators: usize,
    /// Probability that a coordinate is set in a generator.
    pub density: f64,
    /// Objective values are drawn from `0..levels`; few levels mean many ties.
    pub levels: u32,
}

impl RandomConfig {
    pub fn new(n: usize, tuple: PrimitiveTuple) -> Self {
        RandomConfig { n, tuple, generators: 3, density: 0.5, levels: 8 }
    }
}

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random generator-form instance with a random tabulated objective.
pub fn random_instance<R: Rng>(config: &RandomConfig, rng: &mut R) -> Result<Instance> {
    if config.tuple.is_empty() {
        return Err(Error::InvalidParameter { name: "tuple length", value: 0, reason: "need at least one weight" });
    }
    if !(0.0..=1.0).contains(&config.density) {
        return Err(Error::InvalidParameter { name: "density", value: 0, reason: "must lie in [0, 1]" });
    }
    let n = config.n;
    let entries = config.tuple.entries();
    let weights: Vec<u64> = (0..n).map(|_| entries[rng.random_range(0..entries.len())]).collect();
    let weights = WeightVector::new(weights, config.tuple.clone())?;
    let generators = (0..config.generators)
        .map(|_| GroundPoint::from_bits((0..n).map(|_| rng.random_bool(config.density)).collect()))
        .collect();
    let system = IndependenceSystem::generators(n, generators)?;
    let top: u64 = weights.weights().iter().sum();
    let levels = config.levels.max(1);
    let objective = ObjectiveTable::from_fn(top, |_| rng.random_range(0..levels) as f64)?;
    Instance::new(format!("random(n={n}, a={})", config.tuple), system, weights, objective)
}

/// `f(z) = (z - t)^2` on `0..=max` for a random real centre `t` in
/// `[0, max]`.
pub fn random_convex_table<R: Rng>(max: u64, rng: &mut R) -> Result<ObjectiveTable> {
    let centre = rng.random_range(0.0..=max as f64);
    ObjectiveTable::from_fn(max, |z| (z as f64 - centre).powi(2))
}
