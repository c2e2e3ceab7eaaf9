//! Riemann–Liouville fractional integrals.
//!
//! ```text
//! J_{a+}^α f(x) = 1/Γ(α) ∫_a^x (x−t)^(α−1) f(t) dt,   x > a
//! J_{b−}^α f(x) = 1/Γ(α) ∫_x^b (t−x)^(α−1) f(t) dt,   x < b
//! ```
//!
//! The kernel singularity is removed by
//! [`integrate_endpoint_power`](crate::quad::integrate_endpoint_power).
//! Order 0 is the identity and a degenerate interval (x equal to the base
//! point) gives 0.

use crate::error::{domain, ensure_finite, Result};
use crate::quad::{integrate_endpoint_power, QuadResult, SingularEnd, DEFAULT_TOL};
use crate::specfun::gamma;

/// Left (`J_{a+}`) or right (`J_{b−}`) operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A single fractional-integral evaluation request.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RlRequest {
    pub order_alpha: f64,
    pub base_point: f64,
    pub eval_point: f64,
    pub side: Side,
}

impl RlRequest {
    pub fn new(order_alpha: f64, base_point: f64, eval_point: f64, side: Side) -> Result<Self> {
        ensure_finite("fractional integral", &[order_alpha, base_point, eval_point])?;
        if order_alpha < 0.0 {
            return Err(domain("fractional integral", format!("order {order_alpha} is negative")));
        }
        let ordered = match side {
            Side::Left => eval_point >= base_point,
            Side::Right => eval_point <= base_point,
        };
        if !ordered {
            return Err(domain(
                "fractional integral",
                format!("evaluation point {eval_point} on the wrong side of {base_point}"),
            ));
        }
        Ok(RlRequest {
            order_alpha,
            base_point,
            eval_point,
            side,
        })
    }

    pub fn evaluate<F: Fn(f64) -> f64>(&self, f: F, tol: f64) -> Result<QuadResult> {
        let alpha = self.order_alpha;
        let (lo, hi, end) = match self.side {
            Side::Left => (self.base_point, self.eval_point, SingularEnd::Upper),
            Side::Right => (self.eval_point, self.base_point, SingularEnd::Lower),
        };
        if alpha == 0.0 {
            return Ok(QuadResult {
                value: f(self.eval_point),
                abs_error_estimate: 0.0,
                subdivisions: 0,
            });
        }
        if lo == hi {
            return Ok(QuadResult::zero());
        }
        let g = gamma(alpha)?;
        Ok(integrate_endpoint_power(f, lo, hi, alpha - 1.0, end, tol * g)?.scaled(1.0 / g))
    }
}

/// `J_{a+}^α f(x)` at the default tolerance.
pub fn rl_left<F: Fn(f64) -> f64>(f: F, a: f64, alpha: f64, x: f64) -> Result<QuadResult> {
    rl_left_tol(f, a, alpha, x, DEFAULT_TOL)
}

pub fn rl_left_tol<F: Fn(f64) -> f64>(f: F, a: f64, alpha: f64, x: f64, tol: f64) -> Result<QuadResult> {
    RlRequest::new(alpha, a, x, Side::Left)?.evaluate(f, tol)
}

/// `J_{b−}^α f(x)` at the default tolerance.
pub fn rl_right<F: Fn(f64) -> f64>(f: F, b: f64, alpha: f64, x: f64) -> Result<QuadResult> {
    rl_right_tol(f, b, alpha, x, DEFAULT_TOL)
}

pub fn rl_right_tol<F: Fn(f64) -> f64>(f: F, b: f64, alpha: f64, x: f64, tol: f64) -> Result<QuadResult> {
    RlRequest::new(alpha, b, x, Side::Right)?.evaluate(f, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::integrate;

    const TWO_OVER_SQRT_PI: f64 = std::f64::consts::FRAC_2_SQRT_PI;

    #[test]
    fn constant_half_order() {
        let v = rl_left(|_| 1.0, 0.0, 0.5, 1.0).unwrap().value;
        assert!((v - TWO_OVER_SQRT_PI).abs() < 1e-9);
        let v = rl_right(|_| 1.0, 1.0, 0.5, 0.0).unwrap().value;
        assert!((v - TWO_OVER_SQRT_PI).abs() < 1e-9);
    }

    #[test]
    fn order_one_is_classical_integral() {
        assert!((rl_left(|t| t, 0.0, 1.0, 1.0).unwrap().value - 0.5).abs() < 1e-12);
        assert!((rl_right(|t| t, 1.0, 1.0, 0.0).unwrap().value - 0.5).abs() < 1e-12);
        let f = |t: f64| (2.0 * t).cos() + t.powi(3);
        let direct = integrate(f, 0.3, 1.7, 1e-12).unwrap().value;
        assert!((rl_left(f, 0.3, 1.0, 1.7).unwrap().value - direct).abs() < 1e-10);
    }

    #[test]
    fn quadratic_half_order() {
        // Γ(3)/Γ(3.5)
        let expected = 0.601_802_222_450_940_04;
        let v = rl_left(|t| t * t, 0.0, 0.5, 1.0).unwrap().value;
        assert!((v - expected).abs() < 1e-9);
        let v = rl_right(|t| (1.0 - t) * (1.0 - t), 1.0, 0.5, 0.0).unwrap().value;
        assert!((v - expected).abs() < 1e-9);
    }

    #[test]
    fn degenerate_and_zero_order() {
        assert_eq!(rl_left(|t| t + 5.0, 0.4, 0.7, 0.4).unwrap().value, 0.0);
        assert_eq!(rl_right(|t| t + 5.0, 0.4, 0.7, 0.4).unwrap().value, 0.0);
        assert_eq!(rl_left(|t| t * 3.0, 0.0, 0.0, 0.5).unwrap().value, 1.5);
    }

    #[test]
    fn wrong_side_is_rejected() {
        assert!(rl_left(|t| t, 1.0, 0.5, 0.5).is_err());
        assert!(rl_right(|t| t, 0.0, 0.5, 0.5).is_err());
        assert!(rl_left(|t| t, 0.0, -0.5, 0.5).is_err());
    }
}
