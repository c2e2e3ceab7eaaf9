//! Adaptive Gauss–Kronrod quadrature.
//!
//! This is the brute-force oracle behind every closed form in the crate.
//! The base rule is the 7-point Gauss / 15-point Kronrod pair with the
//! QUADPACK error heuristic; panels are bisected globally, worst first.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use serde::Serialize;

use crate::error::{domain, Error, Result};

/// Default absolute tolerance.
pub const DEFAULT_TOL: f64 = 1e-11;

/// Smallest tolerance accepted.
pub const MIN_TOL: f64 = 1e-14;

/// Maximum number of panels before giving up.
pub const MAX_PANELS: usize = 10_000;

/// Largest substitution power used by [`integrate_endpoint_power`].
const MAX_POWER_SUBSTITUTION: f64 = 10_000.0;

// Kronrod abscissae; odd indices are the Gauss nodes.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// Value of an integral with its absolute error estimate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuadResult {
    pub value: f64,
    pub abs_error_estimate: f64,
    pub subdivisions: usize,
}

impl QuadResult {
    /// Multiplies value and error estimate by `factor`.
    pub fn scaled(self, factor: f64) -> QuadResult {
        QuadResult {
            value: self.value * factor,
            abs_error_estimate: self.abs_error_estimate * factor.abs(),
            subdivisions: self.subdivisions,
        }
    }

    /// Sum of two independent results.
    pub fn combine(self, other: QuadResult) -> QuadResult {
        QuadResult {
            value: self.value + other.value,
            abs_error_estimate: self.abs_error_estimate + other.abs_error_estimate,
            subdivisions: self.subdivisions + other.subdivisions,
        }
    }

    pub(crate) fn zero() -> QuadResult {
        QuadResult {
            value: 0.0,
            abs_error_estimate: 0.0,
            subdivisions: 0,
        }
    }
}

/// Which end of the interval carries the power weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SingularEnd {
    Lower,
    Upper,
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    lo: f64,
    hi: f64,
    value: f64,
    error: f64,
    resabs: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        // ties broken by position so the heap order is deterministic
        self.error
            .total_cmp(&other.error)
            .then_with(|| other.lo.total_cmp(&self.lo))
    }
}

fn eval<F: Fn(f64) -> f64>(f: &F, t: f64) -> Result<f64> {
    let v = f(t);
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFinite { at: t })
    }
}

fn kronrod15<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64) -> Result<Panel> {
    let center = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);

    let fc = eval(f, center)?;
    let mut resk = fc * WGK[7];
    let mut resg = fc * WG[3];
    let mut resabs = resk.abs();
    let mut fv1 = [0.0; 7];
    let mut fv2 = [0.0; 7];

    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = eval(f, center - dx)?;
        let f2 = eval(f, center + dx)?;
        fv1[j] = f1;
        fv2[j] = f2;
        resk += WGK[j] * (f1 + f2);
        resabs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            resg += WG[j / 2] * (f1 + f2);
        }
    }

    let reskh = 0.5 * resk;
    let mut resasc = WGK[7] * (fc - reskh).abs();
    for j in 0..7 {
        resasc += WGK[j] * ((fv1[j] - reskh).abs() + (fv2[j] - reskh).abs());
    }

    let value = resk * half;
    let resabs = resabs * half.abs();
    let resasc = resasc * half.abs();
    let mut error = ((resk - resg) * half).abs();
    if resasc != 0.0 && error != 0.0 {
        error = resasc * (200.0 * error / resasc).powf(1.5).min(1.0);
    }
    if resabs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        error = error.max(50.0 * f64::EPSILON * resabs);
    }
    Ok(Panel {
        lo,
        hi,
        value,
        error,
        resabs,
    })
}

fn check_tol(tol: f64) -> Result<()> {
    if !(tol.is_finite() && tol >= MIN_TOL) {
        return Err(domain("integrate", format!("tolerance {tol} below {MIN_TOL}")));
    }
    Ok(())
}

/// Integrates `f` over `[lo, hi]` to absolute tolerance `tol`.
///
/// Converges when the summed panel error estimate drops below `tol`, or
/// below the round-off floor `100·ε·∫|f|` when that is larger. Fails with
/// [`Error::QuadNonConvergence`] after [`MAX_PANELS`] panels and with
/// [`Error::NonFinite`] as soon as `f` produces NaN or ±∞.
pub fn integrate<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, tol: f64) -> Result<QuadResult> {
    check_tol(tol)?;
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(domain("integrate", format!("invalid interval [{lo}, {hi}]")));
    }

    let first = kronrod15(&f, lo, hi)?;
    let mut heap = BinaryHeap::with_capacity(64);
    heap.push(first);
    let mut error = first.error;
    let mut resabs = first.resabs;

    loop {
        let floor = 100.0 * f64::EPSILON * resabs;
        if error <= tol.max(floor) {
            break;
        }
        if heap.len() >= MAX_PANELS {
            return Err(Error::QuadNonConvergence {
                estimate: error,
                tol,
                panels: heap.len(),
            });
        }
        let worst = heap.pop().expect("heap is never empty");
        let mid = 0.5 * (worst.lo + worst.hi);
        if mid <= worst.lo || mid >= worst.hi {
            // panel cannot be split any further
            return Err(Error::QuadNonConvergence {
                estimate: error,
                tol,
                panels: heap.len() + 1,
            });
        }
        let left = kronrod15(&f, worst.lo, mid)?;
        let right = kronrod15(&f, mid, worst.hi)?;
        error += left.error + right.error - worst.error;
        resabs += left.resabs + right.resabs - worst.resabs;
        heap.push(left);
        heap.push(right);

        if heap.len() % 64 == 0 {
            // resum to stop drift in the running totals
            error = heap.iter().map(|p| p.error).sum();
        }
    }

    // final totals are summed in interval order for determinism
    let mut panels = heap.into_vec();
    panels.sort_by(|p, q| p.lo.total_cmp(&q.lo));
    let value: f64 = panels.iter().map(|p| p.value).sum();
    let error: f64 = panels.iter().map(|p| p.error).sum();
    Ok(QuadResult {
        value,
        abs_error_estimate: error,
        subdivisions: panels.len(),
    })
}

/// Integrates over consecutive pieces `[points[i], points[i+1]]`.
///
/// `points` must be strictly increasing; the tolerance is shared evenly.
pub fn integrate_pieces<F: Fn(f64) -> f64>(f: F, points: &[f64], tol: f64) -> Result<QuadResult> {
    if points.len() < 2 || points.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(domain("integrate_pieces", "break points must be strictly increasing"));
    }
    let share = (tol / (points.len() - 1) as f64).max(MIN_TOL);
    points.windows(2).try_fold(QuadResult::zero(), |acc, w| {
        Ok(acc.combine(integrate(&f, w[0], w[1], share)?))
    })
}

/// Integrates `w(t)·f(t)` over `[lo, hi]` with the power weight
/// `w(t) = (t−lo)^gamma` or `(hi−t)^gamma`, gamma > −1.
///
/// With `t−lo = u^k` (mirrored for the upper end) the integrand becomes
/// `k·u^(k(gamma+1)−1)·f(lo+u^k)`. `k` is the smallest integer putting
/// that exponent at 3 or above, so what is left of the weight is smooth
/// enough for the Kronrod error estimate to be trusted.
pub fn integrate_endpoint_power<F: Fn(f64) -> f64>(
    f: F,
    lo: f64,
    hi: f64,
    gamma: f64,
    end: SingularEnd,
    tol: f64,
) -> Result<QuadResult> {
    if !(gamma.is_finite() && gamma > -1.0) {
        return Err(domain("integrate_endpoint_power", format!("gamma = {gamma} must exceed -1")));
    }
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(domain("integrate_endpoint_power", format!("invalid interval [{lo}, {hi}]")));
    }
    if gamma == 0.0 {
        return integrate(f, lo, hi, tol);
    }
    let e = gamma + 1.0;
    let k = (4.0 / e).ceil().max(1.0);
    if k > MAX_POWER_SUBSTITUTION {
        return Err(domain("integrate_endpoint_power", format!("gamma = {gamma} too close to -1")));
    }
    let m = k * e - 1.0;
    let ki = k as i32;
    let width = hi - lo;
    let upper = width.powf(1.0 / k);
    let g = |u: f64| {
        let d = u.powi(ki).min(width);
        let v = match end {
            SingularEnd::Lower => f(lo + d),
            SingularEnd::Upper => f(hi - d),
        };
        k * u.powf(m) * v
    };
    integrate(g, 0.0, upper, tol.max(MIN_TOL))
}
