use super::SpecialValue;
use crate::error::{domain, ensure_finite, Error, Result};

/// Iteration cap for every hypergeometric series evaluation.
pub const MAX_TERMS: usize = 10_000;

/// Largest positive argument summed directly.
const DIRECT_LIMIT: f64 = 0.7;

/// Gauss hypergeometric function ₂F₁(a, b; c; z) for c > b > 0, |z| < 1.
///
/// The domain is the one on which the Euler integral representation
/// holds. Arguments in [0, 0.7] are summed directly; z < 0 is mapped to
/// (0, 1/2) with Pfaff's transformation; z in (0.7, 1) goes through
/// Euler's transformation whenever that makes every term positive.
pub fn hyp2f1(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    hyp2f1_value(a, b, c, z).map(|v| v.value)
}

pub fn hyp2f1_value(a: f64, b: f64, c: f64, z: f64) -> Result<SpecialValue> {
    ensure_finite("hyp2f1", &[a, b, c, z])?;
    if b <= 0.0 {
        return Err(domain("hyp2f1", format!("b = {b} must be positive")));
    }
    if c <= b {
        return Err(domain("hyp2f1", format!("c = {c} must exceed b = {b}")));
    }
    if z.abs() >= 1.0 {
        return Err(domain("hyp2f1", format!("|z| = {} must be below 1", z.abs())));
    }

    if z == 0.0 {
        return Ok(SpecialValue::new(1.0, 0.0));
    }
    if z < 0.0 {
        // ₂F₁(a,b;c;z) = (1−z)^(−b) ₂F₁(c−a, b; c; z/(z−1))
        let w = z / (z - 1.0);
        let scale = (1.0 - z).powf(-b);
        let inner = gauss_series(c - a, b, c, w)?;
        return Ok(scaled(inner, scale));
    }
    if z <= DIRECT_LIMIT || c - a <= 0.0 {
        return gauss_series(a, b, c, z);
    }
    // ₂F₁(a,b;c;z) = (1−z)^(c−a−b) ₂F₁(c−a, c−b; c; z)
    let scale = (1.0 - z).powf(c - a - b);
    let inner = gauss_series(c - a, c - b, c, z)?;
    Ok(scaled(inner, scale))
}

fn scaled(inner: SpecialValue, scale: f64) -> SpecialValue {
    let value = inner.value * scale;
    let err = inner.abs_error_bound * scale.abs() + 2.0 * f64::EPSILON * value.abs();
    SpecialValue::new(value, err)
}

/// Direct summation of Σ (a)ₙ(b)ₙ/((c)ₙ n!) zⁿ with a ratio-test tail bound.
fn gauss_series(a: f64, b: f64, c: f64, z: f64) -> Result<SpecialValue> {
    let mut term = 1.0_f64;
    let mut sum = 1.0_f64;
    let mut abs_sum = 1.0_f64;
    // Beyond this index the term ratio is monotone in n.
    let settled = a.abs() + b.abs() + c.abs() + 2.0;

    for n in 0..MAX_TERMS {
        let nf = n as f64;
        let ratio = (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * z;
        term *= ratio;
        if term == 0.0 {
            // a or b is a non-positive integer: the series terminates.
            return Ok(SpecialValue::new(sum, 4.0 * f64::EPSILON * abs_sum));
        }
        sum += term;
        abs_sum += term.abs();
        if !sum.is_finite() {
            return Err(Error::Overflow { func: "hyp2f1" });
        }

        if nf + 1.0 > settled {
            let next = nf + 1.0;
            let rho = ((a + next) * (b + next) / ((c + next) * (next + 1.0)) * z)
                .abs()
                .max(z.abs());
            if rho < 1.0 {
                let tail = term.abs() * rho / (1.0 - rho);
                if tail <= 0.5 * f64::EPSILON * sum.abs() {
                    let err = tail + 4.0 * f64::EPSILON * abs_sum;
                    return Ok(SpecialValue::new(sum, err));
                }
            }
        }
    }
    Err(Error::Convergence {
        func: "hyp2f1",
        iterations: MAX_TERMS,
    })
}
