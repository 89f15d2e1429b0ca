//! Seeded random instances shared by the integration tests.
#![allow(dead_code)]

use combstab::{CombCurve, GeneratedPairData, Polarization, Rational};
use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Debug, Clone)]
pub struct Sample {
    pub curve: CombCurve,
    pub pair: GeneratedPairData,
}

/// Spreads `total` over `n` slots uniformly at random.
pub fn split(rng: &mut impl Rng, total: i64, n: usize) -> Vec<i64> {
    let mut parts = vec![0; n];
    for _ in 0..total {
        parts[rng.gen_range(0..n)] += 1;
    }
    parts
}

pub struct Ranges {
    pub n: (usize, usize),
    pub genus: (u32, u32),
    pub rank: (i64, i64),
    pub excess: (i64, i64),
    /// Kernel ranks are drawn from `min_kernel..=l-r`.
    pub min_kernel: i64,
}

pub const THEOREM: Ranges = Ranges {
    n: (2, 6),
    genus: (0, 5),
    rank: (1, 3),
    excess: (1, 5),
    min_kernel: 1,
};

/// Instances with every `t_i >= 1` and `d > (n - 1)(l - r)`.
pub fn theorem_instance(rng: &mut impl Rng, ranges: &Ranges) -> Sample {
    let n = rng.gen_range(ranges.n.0..=ranges.n.1);
    let genera = (0..n)
        .map(|_| rng.gen_range(ranges.genus.0..=ranges.genus.1))
        .collect();
    let r = rng.gen_range(ranges.rank.0..=ranges.rank.1);
    let excess = rng.gen_range(ranges.excess.0..=ranges.excess.1);
    let threshold = (n as i64 - 1) * excess;
    let d = threshold + rng.gen_range(1..=3 * excess + 5);
    let degrees = split(rng, d, n);
    let t: Vec<i64> = (0..n)
        .map(|_| rng.gen_range(ranges.min_kernel.max(1)..=excess))
        .collect();
    Sample {
        curve: CombCurve::new(genera).unwrap(),
        pair: GeneratedPairData::from_kernel_ranks(r, degrees, r + excess, &t).unwrap(),
    }
}

/// Any valid instance: kernels may vanish and `d` may sit on either side of
/// the theorem threshold.
pub fn any_instance(rng: &mut impl Rng, max_n: usize) -> Sample {
    let n = rng.gen_range(2..=max_n);
    let genera = (0..n).map(|_| rng.gen_range(0..=5)).collect();
    let r = rng.gen_range(1..=3);
    let excess = rng.gen_range(1..=5);
    let d = rng.gen_range(0..=(n as i64 + 1) * excess);
    let degrees = split(rng, d, n);
    let t: Vec<i64> = (0..n)
        .map(|_| {
            if rng.gen_bool(0.15) {
                0
            } else {
                rng.gen_range(1..=excess)
            }
        })
        .collect();
    Sample {
        curve: CombCurve::new(genera).unwrap(),
        pair: GeneratedPairData::from_kernel_ranks(r, degrees, r + excess, &t).unwrap(),
    }
}

/// Uniformly random positive integer weights, normalized.
pub fn polarization(rng: &mut impl Rng, n: usize) -> Polarization {
    let parts: Vec<i64> = (0..n).map(|_| rng.gen_range(1..=1000)).collect();
    let total: i64 = parts.iter().sum();
    Polarization::new(
        parts
            .iter()
            .map(|&a| Rational::new(BigInt::from(a), BigInt::from(total)))
            .collect(),
    )
    .unwrap()
}
