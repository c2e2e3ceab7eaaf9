//! Seeded low-discrepancy parameter sampling for the soundness sweep.
//!
//! Point `i` is the Halton point `i + 1` shifted modulo 1 by a vector that
//! depends only on the seed (a Cranley–Patterson rotation), so two runs
//! with the same seed visit the same configurations in the same order.

use crate::corpus::{radical_inverse, AFFINE, CUBIC, EXPONENTIAL, POWER_MATCH, QUADRATIC};
use crate::identity::EvalParams;

/// Families with analytically certified hypotheses.
pub const CERTIFIED_FAMILIES: [&str; 5] = [POWER_MATCH, CUBIC, QUADRATIC, EXPONENTIAL, AFFINE];

/// Share of configurations drawn with q = 1.
pub const Q_ONE_SHARE: f64 = 0.2;

/// Upper end of every sampled interval, so that `[a, b]` stays inside the
/// domain of the exponential family.
pub const SWEEP_UPPER: f64 = 1.5;

const DIMS: usize = 9;
const PRIMES: [u64; DIMS] = [2, 3, 5, 7, 11, 13, 17, 19, 23];

/// One sampled configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepPoint {
    pub index: usize,
    pub family: &'static str,
    pub params: EvalParams,
}

/// Shift vector for `seed`.
pub fn seed_shift(seed: u64) -> [f64; DIMS] {
    let mut out = [0.0; DIMS];
    for (d, p) in PRIMES.iter().enumerate() {
        // use a base different from the sequence's own in each coordinate
        out[d] = radical_inverse(seed.wrapping_mul(2_654_435_761).wrapping_add(1), PRIMES[(d + 4) % DIMS] * p);
    }
    out
}

/// The `i`-th shifted Halton point in the unit hypercube.
pub fn shifted_point(seed_shift: &[f64; DIMS], i: usize) -> [f64; DIMS] {
    let mut out = [0.0; DIMS];
    for (d, p) in PRIMES.iter().enumerate() {
        let v = radical_inverse(i as u64 + 1, *p) + seed_shift[d];
        out[d] = v - v.floor();
    }
    out
}

/// `n` configurations over the certified families.
///
/// q = 1 for about a fifth of them, otherwise q ∈ (1, 4]; α ∈ [0.1, 3];
/// s ∈ [0.05, 1]; a ∈ [0, 0.5]; b ≤ 1.5; the position of x is snapped to
/// the nearest endpoint when within 5 % of it.
pub fn soundness_points(seed: u64, n: usize, families: &[&'static str]) -> Vec<SweepPoint> {
    assert!(!families.is_empty(), "at least one family is needed");
    let shift = seed_shift(seed);
    (0..n)
        .map(|i| {
            let u = shifted_point(&shift, i);
            let family = families[((u[0] * families.len() as f64) as usize).min(families.len() - 1)];
            let q = if u[1] < Q_ONE_SHARE { 1.0 } else { 1.0 + 3.0 * (1.0 - u[2]) };
            let alpha = 0.1 + 2.9 * u[3];
            let s = 0.05 + 0.95 * (1.0 - u[4]);
            let a = 0.5 * u[5];
            let b = a + 0.05 + (SWEEP_UPPER - a - 0.05) * u[6];
            let frac = match u[7] {
                f if f < 0.05 => 0.0,
                f if f > 0.95 => 1.0,
                f => f,
            };
            let x = if frac == 1.0 { b } else { a + frac * (b - a) };
            let lambda = u[8];
            SweepPoint {
                index: i,
                family,
                params: EvalParams::new(a, b, x, lambda, alpha, s, q).expect("sampled parameters are in range"),
            }
        })
        .collect()
}
