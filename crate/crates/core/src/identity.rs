//! Both sides of the integral identity for the functional
//!
//! ```text
//! I_f(x,λ,α,a,b) = (1−λ)·((x−a)^α + (b−x)^α)/(b−a)·f(x)
//!                + λ·((x−a)^α f(a) + (b−x)^α f(b))/(b−a)
//!                + (1/(α+1) − λ)·((b−x)^(α+1) − (x−a)^(α+1))/(b−a)·f′(x)
//!                − Γ(α+1)/(b−a)·[J_{x−}^α f(a) + J_{x+}^α f(b)]
//! ```
//!
//! which equals
//!
//! ```text
//! (x−a)^(α+2)/((α+1)(b−a)) ∫₀¹ t((α+1)λ − t^α) f″(tx + (1−t)a) dt
//! + (b−x)^(α+2)/((α+1)(b−a)) ∫₀¹ t((α+1)λ − t^α) f″(tx + (1−t)b) dt.
//! ```
//!
//! `J_{x−}^α f(a)` is the right-sided operator with terminal point x,
//! evaluated at a, i.e. kernel `(t−a)^(α−1)` on `[a, x]`; symmetrically
//! `J_{x+}^α f(b)` has kernel `(b−t)^(α−1)` on `[x, b]`.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{domain, ensure_finite, Error, Result};
use crate::fracint::{rl_left_tol, rl_right_tol};
use crate::quad::{integrate, QuadResult};
use crate::specfun::gamma;

/// Tolerance for each quadrature on either side of the identity.
pub const IDENTITY_QUAD_TOL: f64 = 1e-12;

/// Default residual tolerance (scaled by `max(1, |lhs|)`).
pub const IDENTITY_TOL: f64 = 1e-8;

pub type ScalarFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// A function with its first two derivatives on a closed interval.
#[derive(Clone)]
pub struct FunctionTriple {
    pub f: ScalarFn,
    pub d1: ScalarFn,
    pub d2: ScalarFn,
    pub domain: (f64, f64),
    pub label: String,
}

impl fmt::Debug for FunctionTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FunctionTriple")
            .field("label", &self.label)
            .field("domain", &self.domain)
            .finish_non_exhaustive()
    }
}

impl FunctionTriple {
    pub fn new<F, D1, D2>(label: impl Into<String>, domain: (f64, f64), f: F, d1: D1, d2: D2) -> Self
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
        D1: Fn(f64) -> f64 + Send + Sync + 'static,
        D2: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        FunctionTriple {
            f: Arc::new(f),
            d1: Arc::new(d1),
            d2: Arc::new(d2),
            domain,
            label: label.into(),
        }
    }

    pub fn with_domain(&self, domain: (f64, f64)) -> Self {
        FunctionTriple {
            domain,
            ..self.clone()
        }
    }

    pub fn covers(&self, a: f64, b: f64) -> bool {
        self.domain.0 <= a && b <= self.domain.1
    }

    /// Largest relative mismatch between `d1`/`d2` and central differences
    /// of `f`/`d1` at `n` interior points, step `1e-5·(b−a)`.
    pub fn derivative_mismatch(&self, n: usize) -> (f64, f64) {
        let (lo, hi) = self.domain;
        let h = 1e-5 * (hi - lo);
        let mut worst = (0.0_f64, 0.0_f64);
        for i in 0..n {
            let x = lo + (hi - lo) * (i as f64 + 0.5) / n as f64;
            let fd1 = ((self.f)(x + h) - (self.f)(x - h)) / (2.0 * h);
            let fd2 = ((self.d1)(x + h) - (self.d1)(x - h)) / (2.0 * h);
            let r1 = rel_mismatch(fd1, (self.d1)(x));
            let r2 = rel_mismatch(fd2, (self.d2)(x));
            worst = (worst.0.max(r1), worst.1.max(r2));
        }
        worst
    }
}

fn rel_mismatch(approx: f64, exact: f64) -> f64 {
    (approx - exact).abs() / exact.abs().max(1.0)
}

/// Every free parameter of the functional and of the bounds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EvalParams {
    pub a: f64,
    pub b: f64,
    pub x: f64,
    pub lambda: f64,
    pub alpha: f64,
    pub s: f64,
    pub q: f64,
}

impl EvalParams {
    pub fn new(a: f64, b: f64, x: f64, lambda: f64, alpha: f64, s: f64, q: f64) -> Result<Self> {
        let p = EvalParams {
            a,
            b,
            x,
            lambda,
            alpha,
            s,
            q,
        };
        p.validate()?;
        Ok(p)
    }

    /// Parameters with `x` at the midpoint and placeholder `s = q = 1`.
    pub fn midpoint(a: f64, b: f64, lambda: f64, alpha: f64) -> Result<Self> {
        Self::new(a, b, 0.5 * (a + b), lambda, alpha, 1.0, 1.0)
    }

    pub fn validate(&self) -> Result<()> {
        let func = "EvalParams";
        ensure_finite(func, &[self.a, self.b, self.x, self.lambda, self.alpha, self.s, self.q])?;
        if self.a < 0.0 {
            return Err(domain(func, format!("a = {} must be non-negative", self.a)));
        }
        if self.a >= self.b {
            return Err(domain(func, format!("need a < b, got [{}, {}]", self.a, self.b)));
        }
        if !(self.a..=self.b).contains(&self.x) {
            return Err(domain(func, format!("x = {} outside [a, b]", self.x)));
        }
        if !(0.0..=1.0).contains(&self.lambda) {
            return Err(domain(func, format!("lambda = {} not in [0, 1]", self.lambda)));
        }
        if self.alpha <= 0.0 {
            return Err(domain(func, format!("alpha = {} must be positive", self.alpha)));
        }
        if !(self.s > 0.0 && self.s <= 1.0) {
            return Err(domain(func, format!("s = {} not in (0, 1]", self.s)));
        }
        if self.q < 1.0 {
            return Err(domain(func, format!("q = {} must be at least 1", self.q)));
        }
        Ok(())
    }

    /// Hölder conjugate `q/(q−1)`, absent for q = 1.
    pub fn p(&self) -> Option<f64> {
        (self.q > 1.0).then(|| self.q / (self.q - 1.0))
    }

    pub fn width(&self) -> f64 {
        self.b - self.a
    }

    pub fn mid(&self) -> f64 {
        0.5 * (self.a + self.b)
    }

    pub fn with_x(mut self, x: f64) -> Self {
        self.x = x;
        self
    }
}

fn check_covered(func: &FunctionTriple, params: &EvalParams) -> Result<()> {
    params.validate()?;
    if !func.covers(params.a, params.b) {
        return Err(Error::Precondition(format!(
            "[{}, {}] not inside the domain of `{}`",
            params.a, params.b, func.label
        )));
    }
    Ok(())
}

/// `Γ(α+1)·J_{x−}^α f(a)` and `Γ(α+1)·J_{x+}^α f(b)`.
pub fn scaled_fractional_terms(func: &FunctionTriple, params: &EvalParams) -> Result<(QuadResult, QuadResult)> {
    let EvalParams { a, b, x, alpha, .. } = *params;
    let g1 = gamma(alpha + 1.0)?;
    let f = &func.f;
    let tol = IDENTITY_QUAD_TOL / g1;
    let left = rl_right_tol(|t| f(t), x, alpha, a, tol)?.scaled(g1);
    let right = rl_left_tol(|t| f(t), x, alpha, b, tol)?.scaled(g1);
    Ok((left, right))
}

/// Left-hand side `I_f(x,λ,α,a,b)` evaluated term by term.
pub fn i_f_lhs(func: &FunctionTriple, params: &EvalParams) -> Result<QuadResult> {
    check_covered(func, params)?;
    let EvalParams {
        a,
        b,
        x,
        lambda,
        alpha,
        ..
    } = *params;
    let w = b - a;
    let left_len = x - a;
    let right_len = b - x;
    let (f, d1) = (&func.f, &func.d1);

    let mut value = (1.0 - lambda) * (left_len.powf(alpha) + right_len.powf(alpha)) / w * f(x)
        + lambda * (left_len.powf(alpha) * f(a) + right_len.powf(alpha) * f(b)) / w
        + (1.0 / (alpha + 1.0) - lambda) * (right_len.powf(alpha + 1.0) - left_len.powf(alpha + 1.0)) / w
            * d1(x);

    let (left, right) = scaled_fractional_terms(func, params)?;
    value -= (left.value + right.value) / w;
    Ok(QuadResult {
        value,
        abs_error_estimate: (left.abs_error_estimate + right.abs_error_estimate) / w,
        subdivisions: left.subdivisions + right.subdivisions,
    })
}

/// `∫₀¹ t((α+1)λ − t^α) f″(t·x + (1−t)·end) dt`
fn weighted_second_derivative(func: &FunctionTriple, params: &EvalParams, end: f64) -> Result<QuadResult> {
    let EvalParams { x, lambda, alpha, .. } = *params;
    let l = (alpha + 1.0) * lambda;
    let d2 = &func.d2;
    integrate(
        |t: f64| t * (l - t.powf(alpha)) * d2(t * x + (1.0 - t) * end),
        0.0,
        1.0,
        IDENTITY_QUAD_TOL,
    )
}

/// Right-hand side of the identity; a vanishing prefactor at x = a or
/// x = b drops its integral, which leaves the single-term endpoint forms.
pub fn i_f_rhs(func: &FunctionTriple, params: &EvalParams) -> Result<QuadResult> {
    check_covered(func, params)?;
    let EvalParams { a, b, x, alpha, .. } = *params;
    let denom = (alpha + 1.0) * (b - a);
    let mut total = QuadResult::zero();
    if x > a {
        let pre = (x - a).powf(alpha + 2.0) / denom;
        total = total.combine(weighted_second_derivative(func, params, a)?.scaled(pre));
    }
    if x < b {
        let pre = (b - x).powf(alpha + 2.0) / denom;
        total = total.combine(weighted_second_derivative(func, params, b)?.scaled(pre));
    }
    Ok(total)
}

/// Outcome of one identity check.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IdentityCheck {
    pub lhs: f64,
    pub rhs: f64,
    pub residual: f64,
    pub threshold: f64,
    pub passed: bool,
}

/// `|i_f_lhs − i_f_rhs|`, passing when at most `tol·max(1, |lhs|)`.
pub fn check_identity(func: &FunctionTriple, params: &EvalParams, tol: f64) -> Result<IdentityCheck> {
    let lhs = i_f_lhs(func, params)?.value;
    let rhs = i_f_rhs(func, params)?.value;
    let residual = (lhs - rhs).abs();
    let threshold = tol * lhs.abs().max(1.0);
    Ok(IdentityCheck {
        lhs,
        rhs,
        residual,
        threshold,
        passed: residual <= threshold,
    })
}
