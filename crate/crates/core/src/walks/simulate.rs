use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::WalkError;

/// Sampled end positions, and how many sampled walks visited each position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Histogram {
    pub steps: i64,
    pub samples: u64,
    pub seed: u64,
    pub ends: BTreeMap<i64, u64>,
    pub touches: BTreeMap<i64, u64>,
}

impl Histogram {
    pub fn frequency(&self, end: i64) -> f64 {
        self.ends.get(&end).copied().unwrap_or(0) as f64 / self.samples as f64
    }
}

/// Samples `samples` walks of `steps` fair steps from a ChaCha8 stream seeded
/// with `seed`. Each step consumes one bit of a `u64` draw; the same inputs
/// always give the same histogram.
pub fn simulate(steps: i64, samples: u64, seed: u64) -> Result<Histogram, WalkError> {
    if steps < 0 {
        return Err(WalkError::NegativeSteps(steps));
    }
    if samples == 0 {
        return Err(WalkError::NoSamples);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ends = BTreeMap::new();
    let mut touches = BTreeMap::new();
    for _ in 0..samples {
        let mut pos = 0i64;
        let (mut lo, mut hi) = (0i64, 0i64);
        let mut bits = 0u64;
        for i in 0..steps {
            if i % 64 == 0 {
                bits = rng.gen();
            }
            pos += if bits & 1 == 0 { 1 } else { -1 };
            bits >>= 1;
            lo = lo.min(pos);
            hi = hi.max(pos);
        }
        *ends.entry(pos).or_insert(0) += 1;
        // a ±1 walk visits every position between its extremes
        for p in lo..=hi {
            *touches.entry(p).or_insert(0) += 1;
        }
    }
    Ok(Histogram { steps, samples, seed, ends, touches })
}
