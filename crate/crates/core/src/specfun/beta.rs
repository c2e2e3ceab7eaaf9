use super::gamma::{gamma, ln_gamma};
use super::SpecialValue;
use crate::error::{domain, ensure_finite, Error, Result};

const CF_MAX_ITER: usize = 10_000;
const CF_TINY: f64 = 1e-300;

/// Above this the direct Γ ratio is no longer safe.
const DIRECT_GAMMA_LIMIT: f64 = 170.0;

/// Euler beta function β(x, y) = Γ(x)Γ(y)/Γ(x+y).
///
/// The arguments are ordered before evaluation, so `beta(x, y)` and
/// `beta(y, x)` are bitwise identical.
pub fn beta(x: f64, y: f64) -> Result<f64> {
    beta_value(x, y).map(|v| v.value)
}

pub fn beta_value(x: f64, y: f64) -> Result<SpecialValue> {
    ensure_finite("beta", &[x, y])?;
    if x <= 0.0 || y <= 0.0 {
        return Err(domain("beta", format!("({x}, {y}) must both be positive")));
    }
    let (lo, hi) = if x <= y { (x, y) } else { (y, x) };
    let value = if lo + hi < DIRECT_GAMMA_LIMIT && lo > 1e-10 {
        gamma(lo)? * (gamma(hi)? / gamma(lo + hi)?)
    } else {
        (ln_gamma(lo)? + ln_gamma(hi)? - ln_gamma(lo + hi)?).exp()
    };
    if !value.is_finite() {
        return Err(Error::Overflow { func: "beta" });
    }
    Ok(SpecialValue::new(value, 8.0 * f64::EPSILON * value))
}

/// Non-regularized incomplete beta function
/// β(a0; x, y) = ∫₀^a0 t^(x−1) (1−t)^(y−1) dt for 0 < a0 < 1.
pub fn inc_beta(a0: f64, x: f64, y: f64) -> Result<f64> {
    inc_beta_value(a0, x, y).map(|v| v.value)
}

pub fn inc_beta_value(a0: f64, x: f64, y: f64) -> Result<SpecialValue> {
    ensure_finite("inc_beta", &[a0, x, y])?;
    if !(a0 > 0.0 && a0 < 1.0) {
        return Err(domain("inc_beta", format!("upper limit {a0} not in (0, 1)")));
    }
    if x <= 0.0 || y <= 0.0 {
        return Err(domain("inc_beta", format!("({x}, {y}) must both be positive")));
    }
    if a0 > x / (x + y) {
        // β(a0; x, y) = β(x, y) − β(1 − a0; y, x)
        let full = beta(x, y)?;
        let tail = lower_part(1.0 - a0, y, x)?;
        let value = (full - tail).max(0.0);
        return Ok(SpecialValue::new(value, 16.0 * f64::EPSILON * full));
    }
    let value = lower_part(a0, x, y)?;
    Ok(SpecialValue::new(value, 16.0 * f64::EPSILON * value))
}

/// ln β(x, y), finite wherever Γ's logarithm is.
pub fn ln_beta(x: f64, y: f64) -> Result<f64> {
    match beta(x, y) {
        Ok(b) if b > 0.0 => Ok(b.ln()),
        _ => Ok(ln_gamma(x)? + ln_gamma(y)? - ln_gamma(x + y)?),
    }
}

/// ln β(a0; x, y) for 0 < a0 ≤ 1, without forming β(a0; x, y) itself.
pub fn ln_inc_beta(a0: f64, x: f64, y: f64) -> Result<f64> {
    ensure_finite("inc_beta", &[a0, x, y])?;
    if !(a0 > 0.0 && a0 <= 1.0) {
        return Err(domain("inc_beta", format!("upper limit {a0} not in (0, 1]")));
    }
    if x <= 0.0 || y <= 0.0 {
        return Err(domain("inc_beta", format!("({x}, {y}) must both be positive")));
    }
    if a0 == 1.0 {
        return ln_beta(x, y);
    }
    let ln_lower = |a0: f64, x: f64, y: f64| -> Result<f64> {
        Ok(x * a0.ln() + y * (-a0).ln_1p() + continued_fraction(a0, x, y)?.ln() - x.ln())
    };
    if a0 <= x / (x + y) {
        return ln_lower(a0, x, y);
    }
    let full = ln_beta(x, y)?;
    let tail = ln_lower(1.0 - a0, y, x)?;
    Ok(full + (-(tail - full).exp()).ln_1p())
}

/// `a0^x (1−a0)^y / x · CF(a0; x, y)`, accurate when `a0` is below the mean
/// of the beta density.
fn lower_part(a0: f64, x: f64, y: f64) -> Result<f64> {
    let log_front = x * a0.ln() + y * (-a0).ln_1p();
    let front = log_front.exp();
    if front == 0.0 {
        return Ok(0.0);
    }
    Ok(front * continued_fraction(a0, x, y)? / x)
}

/// Continued fraction for the incomplete beta integral, modified Lentz.
fn continued_fraction(z: f64, a: f64, b: f64) -> Result<f64> {
    let qab = a + b;
    let qap = a + 1.0;
    let qam = a - 1.0;

    let mut c = 1.0;
    let mut d = 1.0 - qab * z / qap;
    if d.abs() < CF_TINY {
        d = CF_TINY;
    }
    d = 1.0 / d;
    let mut h = d;

    for m in 1..=CF_MAX_ITER {
        let m = m as f64;
        let m2 = 2.0 * m;

        // even step
        let aa = m * (b - m) * z / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if d.abs() < CF_TINY {
            d = CF_TINY;
        }
        c = 1.0 + aa / c;
        if c.abs() < CF_TINY {
            c = CF_TINY;
        }
        d = 1.0 / d;
        h *= d * c;

        // odd step
        let aa = -(a + m) * (qab + m) * z / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if d.abs() < CF_TINY {
            d = CF_TINY;
        }
        c = 1.0 + aa / c;
        if c.abs() < CF_TINY {
            c = CF_TINY;
        }
        d = 1.0 / d;
        let delta = d * c;
        h *= delta;

        if (delta - 1.0).abs() < f64::EPSILON {
            return Ok(h);
        }
    }
    Err(Error::Convergence {
        func: "inc_beta",
        iterations: CF_MAX_ITER,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn beta_small_values() {
        assert!((beta(1.0, 1.0).unwrap() - 1.0).abs() < 1e-15);
        assert!((beta(2.0, 2.0).unwrap() - 1.0 / 6.0).abs() < 1e-15);
        assert!((beta(3.0, 2.0).unwrap() - 1.0 / 12.0).abs() < 1e-15);
        assert!((beta(0.5, 0.5).unwrap() - std::f64::consts::PI).abs() < 1e-13);
    }

    #[test]
    fn beta_large_arguments_use_log_path() {
        // β(100, 100) = Γ(100)² / Γ(200)
        let expected = (2.0 * ln_gamma(100.0).unwrap() - ln_gamma(200.0).unwrap()).exp();
        let got = beta(100.0, 100.0).unwrap();
        assert!(((got - expected) / expected).abs() < 1e-12);
    }

    #[test]
    fn inc_beta_polynomial_cases() {
        assert!((inc_beta(0.5, 1.0, 1.0).unwrap() - 0.5).abs() < 1e-15);
        assert!((inc_beta(2.0 / 3.0, 2.0, 2.0).unwrap() - 10.0 / 81.0).abs() < 1e-14);
        assert!((inc_beta(2.0 / 3.0, 3.0, 2.0).unwrap() - 4.0 / 81.0).abs() < 1e-14);
        // ∫₀^¼ t² dt
        assert!((inc_beta(0.25, 3.0, 1.0).unwrap() - 1.0 / 192.0).abs() < 1e-15);
    }

    #[test]
    fn inc_beta_rejects_endpoints() {
        assert!(inc_beta(0.0, 1.0, 1.0).is_err());
        assert!(inc_beta(1.0, 1.0, 1.0).is_err());
        assert!(inc_beta(0.5, 0.0, 1.0).is_err());
        assert!(inc_beta(0.5, 1.0, f64::NAN).is_err());
    }
}
