//! Bound constants and their defining integrals.
//!
//! With `L = (α+1)λ` and kink `k = L^(1/α)`:
//!
//! ```text
//! C1(α,λ)   = ∫₀¹ t |L − t^α| dt
//! C2(α,λ,s) = ∫₀¹ t |L − t^α| t^s dt
//! C3(α,λ,s) = ∫₀¹ t |L − t^α| (1−t)^s dt
//! C4(α,λ,p) = ∫₀¹ t^p |L − t^α|^p dt
//! H1, H2, H3 = C1, C2, C3 at α = 1
//! ```
//!
//! Closed forms switch branch at `λ = 1/(α+1)` (where `k` reaches 1). The
//! integrals are normative: [`kernel_oracle`] evaluates them by quadrature
//! with the interval split at the kink, and [`audit`] compares the two.
//!
//! Three alternative closed forms that circulate for special cases are
//! kept here so the audit can show they disagree with the integrals:
//! [`h3_flipped`], [`c4_simpson_unnormalized`] and
//! [`C3_SIMPSON_TABULATED`].

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{domain, ensure_finite, Error, Result};
use crate::quad::{integrate, integrate_endpoint_power, QuadResult, SingularEnd};
use crate::specfun::{beta, hyp2f1, hyp2f1_value, inc_beta, ln_beta, ln_gamma, ln_inc_beta};

/// Tolerance used for kernel oracles.
pub const ORACLE_TOL: f64 = 1e-13;

/// Default audit threshold on |closed form − oracle|.
pub const AUDIT_TOL: f64 = 1e-9;

/// Tabulated value of C3(1, 1/3, 1); the integral gives 37/972.
pub const C3_SIMPSON_TABULATED: f64 = 27.0 / 972.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum KernelName {
    C1,
    C2,
    C3,
    C4,
    H1,
    H2,
    H3,
    /// H3 with the sign of its leading pair reversed on λ ≤ 1/2.
    H3Flipped,
    /// C4(1, 1/3, p) without the 1/(p+1) factor on the ₂F₁ term.
    C4SimpsonUnnormalized,
    /// The constant 27/972 used in place of C3(1, 1/3, 1).
    C3SimpsonTabulated,
}

impl KernelName {
    pub const PRIMARY: [KernelName; 7] = [
        KernelName::C1,
        KernelName::C2,
        KernelName::C3,
        KernelName::C4,
        KernelName::H1,
        KernelName::H2,
        KernelName::H3,
    ];

    pub const ALTERNATIVES: [KernelName; 3] = [
        KernelName::C3SimpsonTabulated,
        KernelName::H3Flipped,
        KernelName::C4SimpsonUnnormalized,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            KernelName::C1 => "C1",
            KernelName::C2 => "C2",
            KernelName::C3 => "C3",
            KernelName::C4 => "C4",
            KernelName::H1 => "H1",
            KernelName::H2 => "H2",
            KernelName::H3 => "H3",
            KernelName::H3Flipped => "H3-flipped",
            KernelName::C4SimpsonUnnormalized => "C4-simpson-unnormalized",
            KernelName::C3SimpsonTabulated => "C3-simpson-tabulated",
        }
    }

    /// True for the alternative forms whose disagreement is expected.
    pub fn is_known_discrepancy(self) -> bool {
        Self::ALTERNATIVES.contains(&self)
    }

    pub fn needs_s(self) -> bool {
        matches!(
            self,
            KernelName::C2 | KernelName::C3 | KernelName::H2 | KernelName::H3 | KernelName::H3Flipped
        )
    }

    pub fn needs_p(self) -> bool {
        matches!(self, KernelName::C4 | KernelName::C4SimpsonUnnormalized)
    }

    /// H-kernels and the fixed-point alternatives ignore α.
    pub fn uses_alpha(self) -> bool {
        matches!(self, KernelName::C1 | KernelName::C2 | KernelName::C3 | KernelName::C4)
    }
}

impl fmt::Display for KernelName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for KernelName {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        KernelName::PRIMARY
            .iter()
            .chain(KernelName::ALTERNATIVES.iter())
            .find(|k| k.as_str().eq_ignore_ascii_case(s))
            .copied()
            .ok_or_else(|| format!("unknown kernel `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct KernelParams {
    pub alpha: f64,
    pub lambda: f64,
    pub s: Option<f64>,
    pub p: Option<f64>,
}

impl KernelParams {
    pub fn new(alpha: f64, lambda: f64) -> Self {
        KernelParams {
            alpha,
            lambda,
            s: None,
            p: None,
        }
    }

    pub fn with_s(mut self, s: f64) -> Self {
        self.s = Some(s);
        self
    }

    pub fn with_p(mut self, p: f64) -> Self {
        self.p = Some(p);
        self
    }

    fn s(&self) -> Result<f64> {
        self.s.ok_or_else(|| domain("kernel", "parameter s is required"))
    }

    fn p(&self) -> Result<f64> {
        self.p.ok_or_else(|| domain("kernel", "parameter p is required"))
    }
}

fn check_alpha_lambda(func: &'static str, alpha: f64, lambda: f64) -> Result<()> {
    ensure_finite(func, &[alpha, lambda])?;
    if alpha <= 0.0 {
        return Err(domain(func, format!("alpha = {alpha} must be positive")));
    }
    if !(0.0..=1.0).contains(&lambda) {
        return Err(domain(func, format!("lambda = {lambda} not in [0, 1]")));
    }
    Ok(())
}

fn check_s(func: &'static str, s: f64) -> Result<()> {
    ensure_finite(func, &[s])?;
    if !(s > 0.0 && s <= 1.0) {
        return Err(domain(func, format!("s = {s} not in (0, 1]")));
    }
    Ok(())
}

fn check_p(func: &'static str, p: f64) -> Result<()> {
    ensure_finite(func, &[p])?;
    if p < 1.0 {
        return Err(domain(func, format!("p = {p} must be at least 1")));
    }
    Ok(())
}

/// β(k; x, y) extended to the closed interval: 0 at k = 0, β(x, y) at k = 1.
fn inc_beta_closed(k: f64, x: f64, y: f64) -> Result<f64> {
    if k <= 0.0 {
        Ok(0.0)
    } else if k >= 1.0 {
        beta(x, y)
    } else {
        inc_beta(k, x, y)
    }
}

/// `(α+1)λ`
fn level(alpha: f64, lambda: f64) -> f64 {
    (alpha + 1.0) * lambda
}

/// Point where `t^α` crosses `(α+1)λ`, if it lies inside (0, 1).
pub fn kink(alpha: f64, lambda: f64) -> Option<f64> {
    let l = level(alpha, lambda);
    if l <= 0.0 || l >= 1.0 {
        return None;
    }
    let k = l.powf(1.0 / alpha);
    (k > 0.0 && k < 1.0).then_some(k)
}

pub fn c1(alpha: f64, lambda: f64) -> Result<f64> {
    check_alpha_lambda("c1", alpha, lambda)?;
    let l = level(alpha, lambda);
    Ok(if l < 1.0 {
        alpha * l.powf(1.0 + 2.0 / alpha) / (alpha + 2.0) - l / 2.0 + 1.0 / (alpha + 2.0)
    } else {
        l / 2.0 - 1.0 / (alpha + 2.0)
    })
}

pub fn c2(alpha: f64, lambda: f64, s: f64) -> Result<f64> {
    check_alpha_lambda("c2", alpha, lambda)?;
    check_s("c2", s)?;
    let l = level(alpha, lambda);
    Ok(if l < 1.0 {
        2.0 * alpha * l.powf((alpha + s + 2.0) / alpha) / ((s + 2.0) * (alpha + s + 2.0))
            - l / (s + 2.0)
            + 1.0 / (alpha + s + 2.0)
    } else {
        l / (s + 2.0) - 1.0 / (alpha + s + 2.0)
    })
}

pub fn c3(alpha: f64, lambda: f64, s: f64) -> Result<f64> {
    check_alpha_lambda("c3", alpha, lambda)?;
    check_s("c3", s)?;
    let l = level(alpha, lambda);
    let b2 = beta(2.0, s + 1.0)?;
    let ba = beta(alpha + 2.0, s + 1.0)?;
    if l < 1.0 {
        let k = if l > 0.0 { l.powf(1.0 / alpha) } else { 0.0 };
        Ok(ba - l * b2 + 2.0 * l * inc_beta_closed(k, 2.0, s + 1.0)?
            - 2.0 * inc_beta_closed(k, alpha + 2.0, s + 1.0)?)
    } else {
        Ok(l * b2 - ba)
    }
}

pub fn c4(alpha: f64, lambda: f64, p: f64) -> Result<f64> {
    check_alpha_lambda("c4", alpha, lambda)?;
    check_p("c4", p)?;
    if lambda == 0.0 {
        return Ok(1.0 / (p * (alpha + 1.0) + 1.0));
    }
    let v = ln_c4(alpha, lambda, p)?.exp();
    if !v.is_finite() {
        return Err(Error::Overflow { func: "c4" });
    }
    Ok(v)
}

/// `C4^(1/p)`, finite even where C4 itself over- or underflows.
pub fn c4_root(alpha: f64, lambda: f64, p: f64) -> Result<f64> {
    check_alpha_lambda("c4", alpha, lambda)?;
    check_p("c4", p)?;
    if lambda == 0.0 {
        return Ok((p * (alpha + 1.0) + 1.0).powf(-1.0 / p));
    }
    Ok((ln_c4(alpha, lambda, p)? / p).exp())
}

/// ln C4 for λ > 0: `L^((1+(α+1)p)/α)/α · β(1/L; (1+p)/α, 1+p)` when
/// `L = (α+1)λ ≥ 1`, otherwise the same with β complete plus the tail
/// beyond the crossing point.
fn ln_c4(alpha: f64, lambda: f64, p: f64) -> Result<f64> {
    let l = level(alpha, lambda);
    let shape = (1.0 + p) / alpha;
    let exponent = (1.0 + (alpha + 1.0) * p) / alpha;
    let lead = exponent * l.ln() - alpha.ln();
    if l >= 1.0 {
        return Ok(lead + ln_inc_beta(1.0 / l, shape, 1.0 + p)?);
    }
    let head = lead + ln_beta(shape, 1.0 + p)?;
    let tail = ln_c4_tail(alpha, l, p)?;
    let (hi, lo) = if head >= tail { (head, tail) } else { (tail, head) };
    Ok(hi + (lo - hi).exp().ln_1p())
}

/// Relative accuracy below which the ₂F₁ form of the C4 tail is replaced.
const C4_TAIL_RTOL: f64 = 1e-13;

/// Term cap for the positive-term form of the C4 tail.
const C4_TAIL_MAX_TERMS: usize = 10_000_000;

/// ln of `∫ t^p (t^α − L)^p dt` over `[L^(1/α), 1]` for `0 < L < 1`.
///
/// The ₂F₁ form `(1−L)^(p+1)/(α(p+1)) ₂F₁(1−(1+p)/α, 1; p+2; 1−L)` loses
/// everything to cancellation once (1+p)/α is large; then the
/// positive-term expansion is summed instead.
fn ln_c4_tail(alpha: f64, l: f64, p: f64) -> Result<f64> {
    let shape = (1.0 + p) / alpha;
    let z = 1.0 - l;
    if let Ok(f) = hyp2f1_value(1.0 - shape, 1.0, p + 2.0, z) {
        if f.value > 0.0 && f.value.is_finite() && f.abs_error_bound <= C4_TAIL_RTOL * f.value {
            return Ok((p + 1.0) * z.ln() - (alpha * (p + 1.0)).ln() + f.value.ln());
        }
    }
    if l <= 0.1 && p * l <= 1.0 {
        return ln_c4_tail_binomial(alpha, l, p);
    }
    ln_c4_tail_positive(alpha, l, p)
}

/// ln of `(1/α) Σ_k C(p,k) (−L)^k (1 − L^(N−k))/(N−k)`, the expansion of
/// `(1/α)∫_L^1 u^(N−1) (1 − L/u)^p du` with `N = (1+p)/α + p`. Well
/// conditioned for `pL ≲ 1`.
///
/// `C(p,k)(−L)^k` is carried as a log magnitude and a sign: the binomial
/// coefficient alone overflows for p in the hundreds.
fn ln_c4_tail_binomial(alpha: f64, l: f64, p: f64) -> Result<f64> {
    let n = (1.0 + p) / alpha + p;
    let ln_l = l.ln();
    let mut ln_c = 0.0_f64;
    let mut sign = 1.0_f64;
    let mut sum = 0.0_f64;
    for k in 0..C4_TAIL_MAX_TERMS {
        let kf = k as f64;
        let gap = n - kf;
        let x = gap * ln_l;
        // C(p,k)(−L)^k (1 − L^gap)/gap
        let term = if gap.abs() < 1e-12 {
            -sign * ln_c.exp() * ln_l
        } else if x < 700.0 {
            -sign * ln_c.exp() * x.exp_m1() / gap
        } else {
            -sign * (ln_c + x).exp() * -(-x).exp_m1() / gap
        };
        sum += term;
        if kf > p && term.abs() * (kf + ln_l.abs()) <= 1e-17 * sum.abs() {
            break;
        }
        let step = kf - p;
        if step == 0.0 {
            break;
        }
        ln_c += step.abs().ln() - (kf + 1.0).ln() + ln_l;
        sign *= step.signum();
        if kf + 1.0 >= C4_TAIL_MAX_TERMS as f64 {
            return Err(Error::Convergence { func: "c4", iterations: C4_TAIL_MAX_TERMS });
        }
    }
    if !(sum > 0.0 && sum.is_finite()) {
        return Err(Error::Convergence { func: "c4", iterations: C4_TAIL_MAX_TERMS });
    }
    Ok(sum.ln() - alpha.ln())
}

/// ln of `L^N z^(p+1)/α Σ_k (N+1)_k/k! z^k/(p+1+k)` with
/// `N = (1+p)/α + p`, `z = 1 − L`, summed outward from the largest term.
fn ln_c4_tail_positive(alpha: f64, l: f64, p: f64) -> Result<f64> {
    let n = (1.0 + p) / alpha + p;
    let z = 1.0 - l;
    let ratio = |k: f64| (n + 1.0 + k) / (k + 1.0) * z * (p + 1.0 + k) / (p + 2.0 + k);
    let peak = ((n + 1.0) * z / l).floor().max(0.0);
    let ln_peak = ln_gamma(n + 1.0 + peak)? - ln_gamma(n + 1.0)? - ln_gamma(peak + 1.0)? + peak * z.ln()
        - (p + 1.0 + peak).ln();
    let mut sum = 1.0;
    let mut steps = 0;
    let mut term = 1.0;
    let mut k = peak;
    loop {
        let r = ratio(k);
        term *= r;
        sum += term;
        k += 1.0;
        steps += 1;
        if r < 1.0 && term * r / (1.0 - r) <= 0.25 * f64::EPSILON * sum {
            break;
        }
        if steps > C4_TAIL_MAX_TERMS {
            return Err(Error::Convergence { func: "c4", iterations: C4_TAIL_MAX_TERMS });
        }
    }
    let mut term = 1.0;
    let mut k = peak;
    while k >= 1.0 {
        let back = 1.0 / ratio(k - 1.0);
        term *= back;
        sum += term;
        k -= 1.0;
        steps += 1;
        if back < 1.0 && term * back / (1.0 - back) <= 0.25 * f64::EPSILON * sum {
            break;
        }
        if steps > C4_TAIL_MAX_TERMS {
            return Err(Error::Convergence { func: "c4", iterations: C4_TAIL_MAX_TERMS });
        }
    }
    Ok(n * l.ln() + (p + 1.0) * z.ln() - alpha.ln() + ln_peak + sum.ln())
}

pub fn h1(lambda: f64) -> Result<f64> {
    check_alpha_lambda("h1", 1.0, lambda)?;
    Ok(if lambda <= 0.5 {
        (8.0 * lambda.powi(3) - 3.0 * lambda + 1.0) / 3.0
    } else {
        (3.0 * lambda - 1.0) / 3.0
    })
}

pub fn h2(lambda: f64, s: f64) -> Result<f64> {
    check_alpha_lambda("h2", 1.0, lambda)?;
    check_s("h2", s)?;
    Ok(if lambda <= 0.5 {
        2.0 * (2.0 * lambda).powf(s + 3.0) / ((s + 2.0) * (s + 3.0)) - 2.0 * lambda / (s + 2.0)
            + 1.0 / (s + 3.0)
    } else {
        2.0 * lambda / (s + 2.0) - 1.0 / (s + 3.0)
    })
}

/// H3 consistent with its defining integral ∫₀¹ t|2λ − t|(1−t)^s dt.
pub fn h3(lambda: f64, s: f64) -> Result<f64> {
    check_alpha_lambda("h3", 1.0, lambda)?;
    check_s("h3", s)?;
    let b2 = beta(2.0, s + 1.0)?;
    let b3 = beta(3.0, s + 1.0)?;
    if lambda < 0.5 {
        let k = 2.0 * lambda;
        Ok(b3 - 2.0 * lambda * b2 + 4.0 * lambda * inc_beta_closed(k, 2.0, s + 1.0)?
            - 2.0 * inc_beta_closed(k, 3.0, s + 1.0)?)
    } else {
        Ok(2.0 * lambda * b2 - b3)
    }
}

/// H3 with the leading pair `2λβ(2,s+1) − β(3,s+1)` kept with its
/// second-branch sign on λ ≤ 1/2. Disagrees with the integral there.
pub fn h3_flipped(lambda: f64, s: f64) -> Result<f64> {
    check_alpha_lambda("h3_flipped", 1.0, lambda)?;
    check_s("h3_flipped", s)?;
    let b2 = beta(2.0, s + 1.0)?;
    let b3 = beta(3.0, s + 1.0)?;
    let lead = 2.0 * lambda * b2 - b3;
    if lambda <= 0.5 {
        let k = 2.0 * lambda;
        Ok(lead + 4.0 * lambda * inc_beta_closed(k, 2.0, s + 1.0)?
            - 2.0 * inc_beta_closed(k, 3.0, s + 1.0)?)
    } else {
        Ok(lead)
    }
}

/// `(2/3)^(1+2p) β(1+p,1+p) + (1/3)^(1+p) ₂F₁(−p,1;p+2;1/3)`: C4(1, 1/3, p)
/// without the 1/(p+1) normalisation of the second term.
pub fn c4_simpson_unnormalized(p: f64) -> Result<f64> {
    check_p("c4_simpson_unnormalized", p)?;
    Ok((2.0_f64 / 3.0).powf(1.0 + 2.0 * p) * beta(1.0 + p, 1.0 + p)?
        + (1.0_f64 / 3.0).powf(1.0 + p) * hyp2f1(-p, 1.0, p + 2.0, 1.0 / 3.0)?)
}

/// Kernel of the Hölder-type Simpson-like bound with parameter r ≥ 2:
/// `((r−2)/r)^(2p+1) β(1+p,1+p) + 2^(p+1)/(r^(p+1)(p+1)) ₂F₁(−p,1;p+2;2/r)`.
pub fn park(r: f64, p: f64) -> Result<f64> {
    ensure_finite("park", &[r, p])?;
    if r < 2.0 {
        return Err(domain("park", format!("r = {r} must be at least 2")));
    }
    check_p("park", p)?;
    let z = 2.0 / r;
    let f = if z < 1.0 {
        hyp2f1(-p, 1.0, p + 2.0, z)?
    } else {
        // r = 2: ₂F₁(−p,1;p+2;1) = Γ(p+2)Γ(2p+1)/(Γ(2p+2)Γ(p+1)) = (p+1)/(2p+1)
        (p + 1.0) / (2.0 * p + 1.0)
    };
    let v = ((r - 2.0) / r).powf(2.0 * p + 1.0) * beta(1.0 + p, 1.0 + p)?
        + 2.0_f64.powf(p + 1.0) / (r.powf(p + 1.0) * (p + 1.0)) * f;
    if v.is_nan() || v <= 0.0 {
        return Err(Error::Underflow { func: "park" });
    }
    Ok(v)
}

/// Closed-form value of `name` at `params`.
pub fn closed_form(name: KernelName, params: &KernelParams) -> Result<f64> {
    let KernelParams { alpha, lambda, .. } = *params;
    match name {
        KernelName::C1 => c1(alpha, lambda),
        KernelName::C2 => c2(alpha, lambda, params.s()?),
        KernelName::C3 => c3(alpha, lambda, params.s()?),
        KernelName::C4 => c4(alpha, lambda, params.p()?),
        KernelName::H1 => h1(lambda),
        KernelName::H2 => h2(lambda, params.s()?),
        KernelName::H3 => h3(lambda, params.s()?),
        KernelName::H3Flipped => h3_flipped(lambda, params.s()?),
        KernelName::C4SimpsonUnnormalized => c4_simpson_unnormalized(params.p()?),
        KernelName::C3SimpsonTabulated => Ok(C3_SIMPSON_TABULATED),
    }
}

#[derive(Debug, Clone, Copy)]
enum Weight {
    One,
    PowT(f64),
    PowOneMinusT(f64),
}

/// ∫₀¹ t^m |L − t^α|^m w(t) dt, split at the kink.
fn defining_integral(alpha: f64, lambda: f64, m: f64, weight: Weight) -> Result<QuadResult> {
    let l = level(alpha, lambda);
    let base = move |t: f64| (t * (l - t.powf(alpha)).abs()).powf(m);
    let pieces: Vec<f64> = match kink(alpha, lambda) {
        Some(k) => vec![0.0, k, 1.0],
        None => vec![0.0, 1.0],
    };
    let share = ORACLE_TOL / (pieces.len() - 1) as f64;
    let mut total = QuadResult {
        value: 0.0,
        abs_error_estimate: 0.0,
        subdivisions: 0,
    };
    for w in pieces.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        let piece = match weight {
            Weight::One => integrate(base, lo, hi, share)?,
            Weight::PowT(s) => integrate(|t: f64| base(t) * t.powf(s), lo, hi, share)?,
            Weight::PowOneMinusT(s) if hi == 1.0 => {
                integrate_endpoint_power(base, lo, hi, s, SingularEnd::Upper, share)?
            }
            Weight::PowOneMinusT(s) => {
                integrate(|t: f64| base(t) * (1.0 - t).powf(s), lo, hi, share)?
            }
        };
        total = total.combine(piece);
    }
    Ok(total)
}

/// Quadrature value of the integral that defines `name`.
///
/// Alternative forms share the oracle of the constant they stand in for.
pub fn kernel_oracle(name: KernelName, params: &KernelParams) -> Result<QuadResult> {
    let KernelParams { alpha, lambda, .. } = *params;
    match name {
        KernelName::C1 | KernelName::C2 | KernelName::C3 | KernelName::C4 => {
            check_alpha_lambda("kernel_oracle", alpha, lambda)?
        }
        _ => check_alpha_lambda("kernel_oracle", 1.0, lambda)?,
    }
    match name {
        KernelName::C1 => defining_integral(alpha, lambda, 1.0, Weight::One),
        KernelName::C2 => {
            let s = params.s()?;
            check_s("kernel_oracle", s)?;
            defining_integral(alpha, lambda, 1.0, Weight::PowT(s))
        }
        KernelName::C3 => {
            let s = params.s()?;
            check_s("kernel_oracle", s)?;
            defining_integral(alpha, lambda, 1.0, Weight::PowOneMinusT(s))
        }
        KernelName::C4 => {
            let p = params.p()?;
            check_p("kernel_oracle", p)?;
            defining_integral(alpha, lambda, p, Weight::One)
        }
        KernelName::H1 => defining_integral(1.0, lambda, 1.0, Weight::One),
        KernelName::H2 => {
            let s = params.s()?;
            check_s("kernel_oracle", s)?;
            defining_integral(1.0, lambda, 1.0, Weight::PowT(s))
        }
        KernelName::H3 | KernelName::H3Flipped => {
            let s = params.s()?;
            check_s("kernel_oracle", s)?;
            defining_integral(1.0, lambda, 1.0, Weight::PowOneMinusT(s))
        }
        KernelName::C4SimpsonUnnormalized => {
            let p = params.p()?;
            check_p("kernel_oracle", p)?;
            defining_integral(1.0, 1.0 / 3.0, p, Weight::One)
        }
        KernelName::C3SimpsonTabulated => defining_integral(1.0, 1.0 / 3.0, 1.0, Weight::PowOneMinusT(1.0)),
    }
}

/// Closed form against oracle for one kernel at one parameter point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct KernelAudit {
    pub kernel_name: KernelName,
    pub params: KernelParams,
    pub closed_form: f64,
    pub oracle: f64,
    pub oracle_error: f64,
    pub abs_diff: f64,
    pub flagged: bool,
}

pub fn audit(name: KernelName, params: &KernelParams, tol: f64) -> Result<KernelAudit> {
    let closed_form = closed_form(name, params)?;
    let oracle = kernel_oracle(name, params)?;
    let abs_diff = (closed_form - oracle.value).abs();
    Ok(KernelAudit {
        kernel_name: name,
        params: *params,
        closed_form,
        oracle: oracle.value,
        oracle_error: oracle.abs_error_estimate,
        abs_diff,
        flagged: abs_diff > tol,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn c1_values() {
        assert!(close(c1(1.0, 1.0 / 3.0).unwrap(), 8.0 / 81.0, 1e-15));
        // second branch: 3·0.8/2 − 1/4 = ∫₀¹ t(2.4 − t²) dt
        assert!(close(c1(2.0, 0.8).unwrap(), 0.95, 1e-15));
        for &alpha in &[0.5, 1.0, 2.0] {
            let lam = 1.0 / (alpha + 1.0);
            let l = 1.0;
            let first = alpha * l / (alpha + 2.0) - l / 2.0 + 1.0 / (alpha + 2.0);
            let second = l / 2.0 - 1.0 / (alpha + 2.0);
            assert!(close(first, second, 1e-15));
            assert!(close(c1(alpha, lam).unwrap(), second, 1e-15));
        }
    }

    #[test]
    fn c2_values() {
        assert!(close(c2(1.0, 1.0 / 3.0, 1.0).unwrap(), 59.0 / 972.0, 1e-15));
        assert!(close(c2(1.0, 1.0, 1.0).unwrap(), 5.0 / 12.0, 1e-15));
        // λ = 0: ∫ t^(s+2) dt
        assert!(close(c2(1.0, 0.0, 0.5).unwrap(), 1.0 / 3.5, 1e-15));
    }

    #[test]
    fn c3_values() {
        assert!(close(c3(1.0, 1.0, 1.0).unwrap(), 0.25, 1e-15));
        assert!(close(c3(1.0, 1.0 / 3.0, 1.0).unwrap(), 37.0 / 972.0, 1e-14));
        assert!(close(c3(1.0, 0.0, 1.0).unwrap(), 1.0 / 12.0, 1e-15));
    }

    #[test]
    fn c4_values() {
        for &alpha in &[0.5, 1.0, 2.0, 3.0] {
            for &p in &[1.5, 2.0, 3.0, 4.0] {
                let v = c4(alpha, 0.0, p).unwrap();
                assert!(close(v, 1.0 / (p * (alpha + 1.0) + 1.0), 1e-15));
            }
        }
        assert!(close(c4(1.0, 1.0, 1.0).unwrap(), 2.0 / 3.0, 1e-14));
        assert!(close(c4(1.0, 1.0 / 3.0, 1.0).unwrap(), 8.0 / 81.0, 1e-14));
    }

    #[test]
    fn h_values() {
        assert!(close(h1(1.0 / 3.0).unwrap(), 8.0 / 81.0, 1e-15));
        assert!(close(h1(1.0).unwrap(), 2.0 / 3.0, 1e-15));
        assert!(close(h1(0.5).unwrap(), 1.0 / 6.0, 1e-15));
        assert!(close(h2(1.0 / 3.0, 1.0).unwrap(), 59.0 / 972.0, 1e-15));
        assert!(close(h2(1.0, 1.0).unwrap(), 5.0 / 12.0, 1e-15));
        assert!(close(h3(1.0, 1.0).unwrap(), 0.25, 1e-15));
        assert!(close(h3(1.0 / 3.0, 1.0).unwrap(), 37.0 / 972.0, 1e-14));
    }

    #[test]
    fn flipped_h3_differs_only_on_first_branch() {
        for &s in &[0.25, 0.5, 1.0] {
            assert!(!close(h3_flipped(0.2, s).unwrap(), h3(0.2, s).unwrap(), 1e-3));
            assert!(close(h3_flipped(0.8, s).unwrap(), h3(0.8, s).unwrap(), 1e-15));
        }
    }

    #[test]
    fn oracle_examples() {
        let p = KernelParams::new(1.0, 1.0 / 3.0);
        let v = kernel_oracle(KernelName::C1, &p).unwrap().value;
        assert!(close(v, 8.0 / 81.0, 1e-13));
        let v = kernel_oracle(KernelName::H3, &p.with_s(1.0)).unwrap().value;
        assert!(close(v, 37.0 / 972.0, 1e-13));
        let q = p.with_p(2.0);
        let closed = (2.0_f64 / 3.0).powi(5) * beta(3.0, 3.0).unwrap()
            + (1.0_f64 / 3.0).powi(3) / 3.0 * hyp2f1(-2.0, 1.0, 4.0, 1.0 / 3.0).unwrap();
        let v = kernel_oracle(KernelName::C4, &q).unwrap().value;
        assert!(close(v, closed, 1e-12));
        assert!(close(c4(1.0, 1.0 / 3.0, 2.0).unwrap(), closed, 1e-14));
    }

    #[test]
    fn park_matches_c4_at_r4() {
        for &p in &[1.5, 2.0, 3.0] {
            let a = park(4.0, p).unwrap();
            let b = c4(1.0, 0.25, p).unwrap();
            assert!(close(a, b, 1e-14));
        }
    }

    #[test]
    fn domain_checks() {
        assert!(c1(0.0, 0.5).is_err());
        assert!(c1(1.0, 1.5).is_err());
        assert!(c2(1.0, 0.5, 0.0).is_err());
        assert!(c3(1.0, 0.5, 1.5).is_err());
        assert!(c4(1.0, 0.5, 0.5).is_err());
        assert!(park(1.5, 2.0).is_err());
        assert!(closed_form(KernelName::C2, &KernelParams::new(1.0, 0.5)).is_err());
    }

    #[test]
    fn names_round_trip() {
        for k in KernelName::PRIMARY.iter().chain(KernelName::ALTERNATIVES.iter()) {
            assert_eq!(k.as_str().parse::<KernelName>().unwrap(), *k);
        }
    }
    #[test]
    fn c4_far_outside_audit_grid() {
        // high-precision references for (α, λ, p): C4 and C4^(1/p)
        let cases = [
            (0.5, 0.5, 100.0, 2.0605896952537598022e-63, 0.23612388232642229052),
            (0.1, 0.3, 100.0, 3.493638566287524615e-20, 0.63889984052902378328),
            (0.5, 0.1, 1000.0, 1.6509297159166066812e-74, 0.84375766002526809881),
            (0.1, 0.0001, 100.0, 0.00891035918051278406, 0.95389144123600839679),
            (0.1, 0.0001, 1000.0, 0.00081364192848314852042, 0.99291125434951647229),
            (0.9288281642895457, 0.0016138203059878897, 3.6053370287554642 / 2.6053370287554642, 0.27097105493405027822, 0.38923432963484259682),
            (0.1, 3.783435233172124e-5, 1207.6793798763174, 0.00071531728734436575691, 0.99402067357782517561),
        ];
        for (alpha, lambda, p, value, root) in cases {
            let v = c4(alpha, lambda, p).unwrap();
            assert!(((v - value) / value).abs() < 1e-10, "C4({alpha}, {lambda}, {p}) = {v}");
            let r = c4_root(alpha, lambda, p).unwrap();
            assert!(((r - root) / root).abs() < 1e-12, "root at ({alpha}, {lambda}, {p}) = {r}");
        }
    }

    #[test]
    fn c4_root_survives_overflow_and_underflow() {
        assert!(c4(3.0, 1.0, 1000.0).is_err());
        let r = c4_root(3.0, 1.0, 1000.0).unwrap();
        assert!((r - 2.9882836667789281314).abs() < 1e-12);
        assert_eq!(c4(0.1, 0.99, 1000.0).unwrap(), 0.0);
        let r = c4_root(0.1, 0.99, 1000.0).unwrap();
        assert!((r - 0.089293857355126213407).abs() < 1e-13);
    }
}
