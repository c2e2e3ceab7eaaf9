//! Right-hand sides of the power-mean and Hölder bounds on `|I_f|`, their
//! specialisations, the classical comparison bounds, and checks of each
//! inequality against numerically evaluated left-hand sides.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::corpus::FunctionFamily;
use crate::error::{domain, Error, Result};
use crate::identity::{i_f_lhs, i_f_rhs, scaled_fractional_terms, EvalParams, FunctionTriple, IDENTITY_QUAD_TOL};
use crate::kernels::{c1, c2, c3, c4, c4_root, h1, h2, h3, h3_flipped, park, C3_SIMPSON_TABULATED};
use crate::quad::integrate;
use crate::specfun::{beta, ln_inc_beta};

/// Default margin tolerance for inequality checks.
pub const MARGIN_TOL: f64 = 1e-8;

/// Largest allowed disagreement between the two left-hand-side paths,
/// relative to `max(1, |lhs|)`.
pub const LHS_PATH_TOL: f64 = 1e-9;

/// Two bound values closer than this (relative to `max(1, |v|)`) tie.
pub const TIE_TOL: f64 = 1e-12;

/// The left-hand quantity a bound controls.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TargetForm {
    /// `|I_f(x,λ,α,a,b)|`
    General,
    /// `|2^(α−1)/(b−a)^(α−1)·I_f((a+b)/2, λ, α, a, b)|`
    CenteredFrac,
    MidpointFrac,
    SimpsonFrac,
    TrapezoidFrac,
    /// `|(1−λ)f(m) + λ(f(a)+f(b))/2 − (1/(b−a))∫f|`
    CenteredClassical,
    MidpointClassical,
    SimpsonClassical,
    TrapezoidClassical,
    /// Centered classical form with `λ = 1/2 − 1/r`, `r ≥ 2`.
    ParkH,
}

impl TargetForm {
    pub const ALL: [TargetForm; 10] = [
        TargetForm::General,
        TargetForm::CenteredFrac,
        TargetForm::MidpointFrac,
        TargetForm::SimpsonFrac,
        TargetForm::TrapezoidFrac,
        TargetForm::CenteredClassical,
        TargetForm::MidpointClassical,
        TargetForm::SimpsonClassical,
        TargetForm::TrapezoidClassical,
        TargetForm::ParkH,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TargetForm::General => "general",
            TargetForm::CenteredFrac => "centered-frac",
            TargetForm::MidpointFrac => "midpoint-frac",
            TargetForm::SimpsonFrac => "simpson-frac",
            TargetForm::TrapezoidFrac => "trapezoid-frac",
            TargetForm::CenteredClassical => "centered-classical",
            TargetForm::MidpointClassical => "midpoint-classical",
            TargetForm::SimpsonClassical => "simpson-classical",
            TargetForm::TrapezoidClassical => "trapezoid-classical",
            TargetForm::ParkH => "park-h",
        }
    }

    fn fixed_lambda(self) -> Option<f64> {
        match self {
            TargetForm::MidpointFrac | TargetForm::MidpointClassical => Some(0.0),
            TargetForm::SimpsonFrac | TargetForm::SimpsonClassical => Some(1.0 / 3.0),
            TargetForm::TrapezoidFrac | TargetForm::TrapezoidClassical => Some(1.0),
            _ => None,
        }
    }

    fn is_classical(self) -> bool {
        matches!(
            self,
            TargetForm::CenteredClassical
                | TargetForm::MidpointClassical
                | TargetForm::SimpsonClassical
                | TargetForm::TrapezoidClassical
                | TargetForm::ParkH
        )
    }

    pub fn is_centered(self) -> bool {
        self != TargetForm::General
    }

    /// Pins the parameters this form fixes.
    pub fn specialize(self, params: &EvalParams) -> Result<EvalParams> {
        let mut sp = *params;
        if self.is_centered() {
            sp.x = sp.mid();
        }
        if let Some(l) = self.fixed_lambda() {
            sp.lambda = l;
        }
        if self.is_classical() {
            sp.alpha = 1.0;
        }
        if self == TargetForm::ParkH && sp.lambda >= 0.5 {
            return Err(domain("TargetForm::specialize", format!("park form needs lambda < 1/2, got {}", sp.lambda)));
        }
        sp.validate()?;
        Ok(sp)
    }

    /// Factor turning `I_f` into the displayed quantity.
    pub fn scale(self, params: &EvalParams) -> f64 {
        if self.is_centered() {
            (2.0 / params.width()).powf(params.alpha - 1.0)
        } else {
            1.0
        }
    }
}

impl fmt::Display for TargetForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TargetForm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        TargetForm::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown target form `{s}`")))
    }
}

/// Left-hand side computed along the `I_f` path and the displayed path.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TargetValue {
    /// Absolute value along the `I_f` path.
    pub value: f64,
    /// Absolute value of the explicit display.
    pub display: f64,
    pub quad_error: f64,
    /// `| I_f path − display path |` before taking absolute values.
    pub path_gap: f64,
}

impl TargetValue {
    pub fn paths_agree(&self) -> bool {
        self.path_gap <= LHS_PATH_TOL * self.value.abs().max(1.0)
    }
}

/// The displayed left-hand quantity for `form`, at parameters already
/// specialised by `form`.
pub fn target_lhs(func: &FunctionTriple, params: &EvalParams, form: TargetForm) -> Result<TargetValue> {
    let sp = form.specialize(params)?;
    let via_if = i_f_lhs(func, &sp)?;
    let scale = form.scale(&sp);
    let signed = via_if.value * scale;

    let (display, display_err) = if !form.is_centered() {
        let r = i_f_rhs(func, &sp)?;
        (r.value, r.abs_error_estimate)
    } else {
        let EvalParams { a, b, lambda, alpha, .. } = sp;
        let f = &func.f;
        let m = sp.mid();
        let w = sp.width();
        let point_part = (1.0 - lambda) * f(m) + lambda * 0.5 * (f(a) + f(b));
        if form.is_classical() {
            let avg = integrate(|t| f(t), a, b, IDENTITY_QUAD_TOL)?;
            (point_part - avg.value / w, avg.abs_error_estimate / w)
        } else {
            let (l, r) = scaled_fractional_terms(func, &sp)?;
            let k = 2f64.powf(alpha - 1.0) / w.powf(alpha);
            (
                point_part - k * (l.value + r.value),
                k * (l.abs_error_estimate + r.abs_error_estimate),
            )
        }
    };
    Ok(TargetValue {
        value: signed.abs(),
        display: display.abs(),
        quad_error: (via_if.abs_error_estimate * scale).max(display_err),
        path_gap: (signed - display).abs(),
    })
}

/// `|f″|` at the evaluation point and the two endpoints, and optionally
/// `sup |f⁗|` on `[a, b]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Curvature {
    pub at_x: f64,
    pub at_a: f64,
    pub at_b: f64,
    pub fourth_sup: Option<f64>,
}

impl Curvature {
    pub fn of(func: &FunctionTriple, params: &EvalParams) -> Self {
        let d2 = &func.d2;
        Curvature {
            at_x: d2(params.x).abs(),
            at_a: d2(params.a).abs(),
            at_b: d2(params.b).abs(),
            fourth_sup: None,
        }
    }

    pub fn of_family(family: &FunctionFamily, params: &EvalParams) -> Self {
        Curvature {
            fourth_sup: family.fourth_derivative_sup.map(|sup| sup(params.a, params.b)),
            ..Curvature::of(&family.triple, params)
        }
    }

    /// `|f″| ≡ m`.
    pub fn constant(m: f64) -> Self {
        Curvature {
            at_x: m.abs(),
            at_a: m.abs(),
            at_b: m.abs(),
            fourth_sup: Some(0.0),
        }
    }
}

/// Every bound the checker knows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundId {
    PowerMean,
    PowerMeanConvex,
    PowerMeanLinear,
    PowerMeanCentered,
    PowerMeanSimpsonFrac,
    PowerMeanSimpson,
    PowerMeanMidpointFrac,
    PowerMeanMidpoint,
    PowerMeanTrapezoidFrac,
    PowerMeanTrapezoid,
    /// Simpson form with s = 1 and the tabulated constant 27/972.
    PowerMeanSimpsonTabulated,
    Holder,
    HolderConvex,
    HolderCentered,
    HolderSimpsonFrac,
    HolderSimpson,
    HolderMidpointFrac,
    HolderTrapezoidFrac,
    HolderTrapezoid,
    Sarikaya,
    XiQi,
    /// Xi–Qi bound with the flipped-sign H3.
    XiQiFlipped,
    Park,
    SimpsonFourthDerivative,
}

/// Which hypothesis a bound needs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hypothesis {
    /// `|f″|^q` s-convex.
    SConvex,
    /// `|f″|^q` s-convex with q > 1.
    SConvexHolder,
    /// `|f″|^q` convex.
    Convex,
    /// `f⁗` bounded.
    FourthDerivative,
}

impl BoundId {
    pub const ALL: [BoundId; 24] = [
        BoundId::PowerMean,
        BoundId::PowerMeanConvex,
        BoundId::PowerMeanLinear,
        BoundId::PowerMeanCentered,
        BoundId::PowerMeanSimpsonFrac,
        BoundId::PowerMeanSimpson,
        BoundId::PowerMeanMidpointFrac,
        BoundId::PowerMeanMidpoint,
        BoundId::PowerMeanTrapezoidFrac,
        BoundId::PowerMeanTrapezoid,
        BoundId::PowerMeanSimpsonTabulated,
        BoundId::Holder,
        BoundId::HolderConvex,
        BoundId::HolderCentered,
        BoundId::HolderSimpsonFrac,
        BoundId::HolderSimpson,
        BoundId::HolderMidpointFrac,
        BoundId::HolderTrapezoidFrac,
        BoundId::HolderTrapezoid,
        BoundId::Sarikaya,
        BoundId::XiQi,
        BoundId::XiQiFlipped,
        BoundId::Park,
        BoundId::SimpsonFourthDerivative,
    ];

    /// Specialisations of the two general bounds.
    pub const COROLLARIES: [BoundId; 16] = [
        BoundId::PowerMeanConvex,
        BoundId::PowerMeanLinear,
        BoundId::PowerMeanCentered,
        BoundId::PowerMeanSimpsonFrac,
        BoundId::PowerMeanSimpson,
        BoundId::PowerMeanMidpointFrac,
        BoundId::PowerMeanMidpoint,
        BoundId::PowerMeanTrapezoidFrac,
        BoundId::PowerMeanTrapezoid,
        BoundId::HolderConvex,
        BoundId::HolderCentered,
        BoundId::HolderSimpsonFrac,
        BoundId::HolderSimpson,
        BoundId::HolderMidpointFrac,
        BoundId::HolderTrapezoidFrac,
        BoundId::HolderTrapezoid,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            BoundId::PowerMean => "power-mean",
            BoundId::PowerMeanConvex => "power-mean-convex",
            BoundId::PowerMeanLinear => "power-mean-linear",
            BoundId::PowerMeanCentered => "power-mean-centered",
            BoundId::PowerMeanSimpsonFrac => "power-mean-simpson-frac",
            BoundId::PowerMeanSimpson => "power-mean-simpson",
            BoundId::PowerMeanMidpointFrac => "power-mean-midpoint-frac",
            BoundId::PowerMeanMidpoint => "power-mean-midpoint",
            BoundId::PowerMeanTrapezoidFrac => "power-mean-trapezoid-frac",
            BoundId::PowerMeanTrapezoid => "power-mean-trapezoid",
            BoundId::PowerMeanSimpsonTabulated => "power-mean-simpson-tabulated",
            BoundId::Holder => "holder",
            BoundId::HolderConvex => "holder-convex",
            BoundId::HolderCentered => "holder-centered",
            BoundId::HolderSimpsonFrac => "holder-simpson-frac",
            BoundId::HolderSimpson => "holder-simpson",
            BoundId::HolderMidpointFrac => "holder-midpoint-frac",
            BoundId::HolderTrapezoidFrac => "holder-trapezoid-frac",
            BoundId::HolderTrapezoid => "holder-trapezoid",
            BoundId::Sarikaya => "sarikaya",
            BoundId::XiQi => "xi-qi",
            BoundId::XiQiFlipped => "xi-qi-flipped",
            BoundId::Park => "park",
            BoundId::SimpsonFourthDerivative => "simpson-fourth-derivative",
        }
    }

    pub fn is_holder(self) -> bool {
        matches!(
            self,
            BoundId::Holder
                | BoundId::HolderConvex
                | BoundId::HolderCentered
                | BoundId::HolderSimpsonFrac
                | BoundId::HolderSimpson
                | BoundId::HolderMidpointFrac
                | BoundId::HolderTrapezoidFrac
                | BoundId::HolderTrapezoid
                | BoundId::Park
        )
    }

    pub fn is_classical(self) -> bool {
        matches!(
            self,
            BoundId::Sarikaya | BoundId::XiQi | BoundId::XiQiFlipped | BoundId::Park | BoundId::SimpsonFourthDerivative
        )
    }

    pub fn hypothesis(self) -> Hypothesis {
        match self {
            BoundId::SimpsonFourthDerivative => Hypothesis::FourthDerivative,
            BoundId::Sarikaya => Hypothesis::Convex,
            b if b.is_holder() => Hypothesis::SConvexHolder,
            _ => Hypothesis::SConvex,
        }
    }

    pub fn target_form(self) -> TargetForm {
        match self {
            BoundId::PowerMean
            | BoundId::PowerMeanConvex
            | BoundId::PowerMeanLinear
            | BoundId::Holder
            | BoundId::HolderConvex
            | BoundId::HolderCentered => TargetForm::General,
            BoundId::PowerMeanCentered => TargetForm::CenteredFrac,
            BoundId::PowerMeanSimpsonFrac | BoundId::HolderSimpsonFrac => TargetForm::SimpsonFrac,
            BoundId::PowerMeanMidpointFrac | BoundId::HolderMidpointFrac => TargetForm::MidpointFrac,
            BoundId::PowerMeanTrapezoidFrac | BoundId::HolderTrapezoidFrac => TargetForm::TrapezoidFrac,
            BoundId::PowerMeanSimpson
            | BoundId::PowerMeanSimpsonTabulated
            | BoundId::HolderSimpson
            | BoundId::Sarikaya
            | BoundId::SimpsonFourthDerivative => TargetForm::SimpsonClassical,
            BoundId::PowerMeanMidpoint => TargetForm::MidpointClassical,
            BoundId::PowerMeanTrapezoid | BoundId::HolderTrapezoid => TargetForm::TrapezoidClassical,
            BoundId::XiQi | BoundId::XiQiFlipped => TargetForm::CenteredClassical,
            BoundId::Park => TargetForm::ParkH,
        }
    }

    /// The general bound this one specialises, if any.
    pub fn general_counterpart(self) -> Option<BoundId> {
        if !BoundId::COROLLARIES.contains(&self) {
            None
        } else if self.is_holder() {
            Some(BoundId::Holder)
        } else {
            Some(BoundId::PowerMean)
        }
    }

    /// Pins every parameter the bound fixes and checks the rest.
    pub fn specialize(self, params: &EvalParams) -> Result<EvalParams> {
        let mut sp = self.target_form().specialize(params)?;
        match self {
            BoundId::PowerMeanConvex | BoundId::HolderConvex | BoundId::PowerMeanSimpsonTabulated | BoundId::Sarikaya => {
                sp.s = 1.0
            }
            BoundId::PowerMeanLinear => sp.q = 1.0,
            BoundId::HolderCentered => sp.x = sp.mid(),
            _ => {}
        }
        if self.is_holder() && sp.q <= 1.0 {
            return Err(domain("BoundId::specialize", format!("{self} needs q > 1, got {}", sp.q)));
        }
        Ok(sp)
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BoundId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        BoundId::ALL
            .into_iter()
            .find(|b| b.as_str() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown bound `{s}`")))
    }
}

impl Serialize for BoundId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

fn finite_bound(which: BoundId, v: f64) -> Result<f64> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(domain("bound_rhs", format!("{which} evaluates to {v}")))
    }
}

/// `(M^q·k2 + E^q·k3)^(1/q)`
fn mixed(q: f64, m: f64, e: f64, k2: f64, k3: f64) -> f64 {
    (m.powf(q) * k2 + e.powf(q) * k3).powf(1.0 / q)
}

/// `((M^q + E^q)/(s+1))^(1/q)`
fn averaged(q: f64, s: f64, m: f64, e: f64) -> f64 {
    ((m.powf(q) + e.powf(q)) / (s + 1.0)).powf(1.0 / q)
}

fn side_weights(p: &EvalParams) -> (f64, f64) {
    let denom = (p.alpha + 1.0) * p.width();
    (
        (p.x - p.a).powf(p.alpha + 2.0) / denom,
        (p.b - p.x).powf(p.alpha + 2.0) / denom,
    )
}

fn centered_factor(p: &EvalParams) -> f64 {
    p.width().powi(2) / (8.0 * (p.alpha + 1.0))
}

/// Power-mean form with explicit constants and a common factor.
fn power_mean_shape(factor: f64, k1: f64, k2: f64, k3: f64, p: &EvalParams, c: &Curvature) -> f64 {
    let q = p.q;
    factor * k1.powf(1.0 - 1.0 / q) * (mixed(q, c.at_x, c.at_a, k2, k3) + mixed(q, c.at_x, c.at_b, k2, k3))
}

fn holder_shape(factor: f64, k4_root: f64, p: &EvalParams, c: &Curvature) -> f64 {
    factor * k4_root * (averaged(p.q, p.s, c.at_x, c.at_a) + averaged(p.q, p.s, c.at_x, c.at_b))
}

/// Power-mean bound on `|I_f|` for `|f″|^q` s-convex, q ≥ 1.
pub fn power_mean_rhs(p: &EvalParams, c: &Curvature) -> Result<f64> {
    let (wa, wb) = side_weights(p);
    let (k1, k2, k3) = (c1(p.alpha, p.lambda)?, c2(p.alpha, p.lambda, p.s)?, c3(p.alpha, p.lambda, p.s)?);
    let q = p.q;
    Ok(k1.powf(1.0 - 1.0 / q) * (wa * mixed(q, c.at_x, c.at_a, k2, k3) + wb * mixed(q, c.at_x, c.at_b, k2, k3)))
}

/// Hölder bound on `|I_f|` for `|f″|^q` s-convex, q > 1.
pub fn holder_rhs(p: &EvalParams, c: &Curvature) -> Result<f64> {
    let conj = p
        .p()
        .ok_or_else(|| domain("holder_rhs", format!("q = {} must exceed 1", p.q)))?;
    let (wa, wb) = side_weights(p);
    Ok(c4_root(p.alpha, p.lambda, conj)? * (wa * averaged(p.q, p.s, c.at_x, c.at_a) + wb * averaged(p.q, p.s, c.at_x, c.at_b)))
}

fn holder_conj(which: BoundId, p: &EvalParams) -> Result<f64> {
    p.p()
        .ok_or_else(|| domain("bound_rhs", format!("{which} needs q > 1, got {}", p.q)))
}

/// Right-hand side of `which` at `params` (after specialisation).
pub fn bound_rhs(which: BoundId, params: &EvalParams, c: &Curvature) -> Result<f64> {
    let p = which.specialize(params)?;
    let (alpha, s, q, w) = (p.alpha, p.s, p.q, p.width());
    let v = match which {
        BoundId::PowerMean | BoundId::PowerMeanConvex | BoundId::PowerMeanLinear => power_mean_rhs(&p, c)?,
        BoundId::PowerMeanCentered | BoundId::PowerMeanSimpsonFrac => power_mean_shape(
            centered_factor(&p),
            c1(alpha, p.lambda)?,
            c2(alpha, p.lambda, s)?,
            c3(alpha, p.lambda, s)?,
            &p,
            c,
        ),
        BoundId::PowerMeanSimpson => {
            let k = 81.0_f64 / 8.0;
            w * w / 162.0
                * k.powf(1.0 / q)
                * (mixed(q, c.at_x, c.at_a, c2(1.0, 1.0 / 3.0, s)?, c3(1.0, 1.0 / 3.0, s)?)
                    + mixed(q, c.at_x, c.at_b, c2(1.0, 1.0 / 3.0, s)?, c3(1.0, 1.0 / 3.0, s)?))
        }
        BoundId::PowerMeanMidpointFrac => power_mean_shape(
            centered_factor(&p),
            1.0 / (alpha + 2.0),
            1.0 / (alpha + s + 2.0),
            beta(alpha + 2.0, s + 1.0)?,
            &p,
            c,
        ),
        BoundId::PowerMeanMidpoint => {
            power_mean_shape(w * w / 16.0, 1.0 / 3.0, 1.0 / (s + 3.0), beta(3.0, s + 1.0)?, &p, c)
        }
        BoundId::PowerMeanTrapezoidFrac => power_mean_shape(
            centered_factor(&p),
            alpha * (alpha + 3.0) / (2.0 * (alpha + 2.0)),
            alpha * (alpha + s + 3.0) / ((s + 2.0) * (alpha + s + 2.0)),
            (alpha + 1.0) * beta(2.0, s + 1.0)? - beta(alpha + 2.0, s + 1.0)?,
            &p,
            c,
        ),
        BoundId::PowerMeanTrapezoid => power_mean_shape(
            w * w / 16.0,
            2.0 / 3.0,
            (s + 4.0) / ((s + 2.0) * (s + 3.0)),
            2.0 * beta(2.0, s + 1.0)? - beta(3.0, s + 1.0)?,
            &p,
            c,
        ),
        BoundId::PowerMeanSimpsonTabulated => power_mean_shape(
            w * w / 16.0,
            8.0 / 81.0,
            59.0 / 972.0,
            C3_SIMPSON_TABULATED,
            &p,
            c,
        ),
        BoundId::Holder | BoundId::HolderConvex => holder_rhs(&p, c)?,
        BoundId::HolderCentered => {
            let conj = holder_conj(which, &p)?;
            let factor = w.powf(alpha + 1.0) / ((alpha + 1.0) * 2f64.powf(alpha + 2.0));
            holder_shape(factor, c4_root(alpha, p.lambda, conj)?, &p, c)
        }
        BoundId::HolderSimpsonFrac => {
            let conj = holder_conj(which, &p)?;
            holder_shape(centered_factor(&p), c4_root(alpha, 1.0 / 3.0, conj)?, &p, c)
        }
        BoundId::HolderSimpson => {
            let conj = holder_conj(which, &p)?;
            holder_shape(w * w / 16.0, c4_root(1.0, 1.0 / 3.0, conj)?, &p, c)
        }
        BoundId::HolderMidpointFrac => {
            let conj = holder_conj(which, &p)?;
            let k4 = 1.0 / (conj * (alpha + 1.0) + 1.0);
            holder_shape(centered_factor(&p), k4.powf(1.0 / conj), &p, c)
        }
        BoundId::HolderTrapezoidFrac => {
            let conj = holder_conj(which, &p)?;
            let ln_k4 = (conj * (alpha + 1.0) + 1.0) / alpha * alpha.ln_1p() - alpha.ln()
                + ln_inc_beta(1.0 / (1.0 + alpha), (1.0 + conj) / alpha, 1.0 + conj)?;
            holder_shape(centered_factor(&p), (ln_k4 / conj).exp(), &p, c)
        }
        BoundId::HolderTrapezoid => {
            let conj = holder_conj(which, &p)?;
            let ln_k = std::f64::consts::LN_2 + ln_inc_beta(0.5, 1.0 + conj, 1.0 + conj)?;
            holder_shape(w * w / 4.0, (ln_k / conj).exp(), &p, c)
        }
        BoundId::Sarikaya => {
            let (ea, eb) = (c.at_a.powf(q), c.at_b.powf(q));
            w * w / 162.0
                * (((59.0 * ea + 133.0 * eb) / 192.0).powf(1.0 / q) + ((59.0 * eb + 133.0 * ea) / 192.0).powf(1.0 / q))
        }
        BoundId::XiQi => power_mean_shape(w * w / 16.0, h1(p.lambda)?, h2(p.lambda, s)?, h3(p.lambda, s)?, &p, c),
        BoundId::XiQiFlipped => power_mean_shape(
            w * w / 16.0,
            h1(p.lambda)?,
            h2(p.lambda, s)?,
            h3_flipped(p.lambda, s)?,
            &p,
            c,
        ),
        BoundId::Park => {
            let conj = holder_conj(which, &p)?;
            let r = 2.0 / (1.0 - 2.0 * p.lambda);
            holder_shape(w * w / 16.0, park(r, conj)?.powf(1.0 / conj), &p, c)
        }
        BoundId::SimpsonFourthDerivative => {
            let sup = c
                .fourth_sup
                .ok_or_else(|| Error::MissingData("sup |f⁗| on [a, b] is not available".into()))?;
            sup * w.powi(4) / 2880.0
        }
    };
    finite_bound(which, v)
}

/// A corollary's right-hand side recomputed from its general theorem at the
/// specialised parameters, rescaled to the corollary's left-hand quantity.
pub fn via_general_theorem(which: BoundId, params: &EvalParams, c: &Curvature) -> Result<Option<f64>> {
    let Some(general) = which.general_counterpart() else {
        return Ok(None);
    };
    let sp = which.specialize(params)?;
    let scale = which.target_form().scale(&sp);
    Ok(Some(bound_rhs(general, &sp, c)? * scale))
}

/// Bound on the classical Simpson functional via `sup |f⁗|`, or the
/// classical comparison bounds evaluated on `family`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassicalBound {
    Sarikaya,
    XiQi,
    /// Xi–Qi with the flipped H3, reported next to the corrected one.
    XiQiFlipped,
    Park,
    HadamardUpper,
    SimpsonFourthDerivative,
}

impl ClassicalBound {
    pub fn bound_id(self) -> Option<BoundId> {
        match self {
            ClassicalBound::Sarikaya => Some(BoundId::Sarikaya),
            ClassicalBound::XiQi => Some(BoundId::XiQi),
            ClassicalBound::XiQiFlipped => Some(BoundId::XiQiFlipped),
            ClassicalBound::Park => Some(BoundId::Park),
            ClassicalBound::HadamardUpper => None,
            ClassicalBound::SimpsonFourthDerivative => Some(BoundId::SimpsonFourthDerivative),
        }
    }
}

/// The printed right-hand side of a classical bound.
pub fn classical_rhs(family: &FunctionFamily, params: &EvalParams, which: ClassicalBound) -> Result<f64> {
    match which.bound_id() {
        Some(id) => {
            let sp = id.specialize(params)?;
            bound_rhs(id, &sp, &Curvature::of_family(family, &sp))
        }
        None => {
            let f = &family.triple.f;
            Ok(0.5 * (f(params.a) + f(params.b)))
        }
    }
}

/// Outcome of one inequality check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Holds,
    Violated,
    Indeterminate,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Holds => "holds",
            Status::Violated => "violated",
            Status::Indeterminate => "indeterminate",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Holds within `tol`; violated only when the quadrature error is at most
/// half the shortfall.
pub fn classify(margin: f64, tol: f64, quad_error: f64) -> Status {
    if margin >= -tol {
        Status::Holds
    } else if quad_error <= 0.5 * margin.abs() {
        Status::Violated
    } else {
        Status::Indeterminate
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationRecord {
    pub which: BoundId,
    pub params: EvalParams,
    pub function_label: String,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub status: Status,
    pub tolerance: f64,
    pub quad_error: f64,
}

fn check_hypothesis(family: &FunctionFamily, which: BoundId, sp: &EvalParams) -> Result<()> {
    if family.is_identity_only() {
        return Err(Error::Precondition(format!(
            "family `{}` is for identity checks only",
            family.label
        )));
    }
    match which.hypothesis() {
        Hypothesis::SConvex | Hypothesis::SConvexHolder => family.require_certified(sp.s, sp.q).map(|_| ()),
        Hypothesis::Convex => family.require_certified(1.0, sp.q).map(|_| ()),
        Hypothesis::FourthDerivative => family
            .fourth_derivative_sup
            .map(|_| ())
            .ok_or_else(|| Error::MissingData(format!("family `{}` has no fourth-derivative bound", family.label))),
    }
}

/// Evaluates both sides of `which` for `family` at `params`.
pub fn check_inequality(family: &FunctionFamily, params: &EvalParams, which: BoundId) -> Result<VerificationRecord> {
    check_inequality_tol(family, params, which, MARGIN_TOL)
}

pub fn check_inequality_tol(
    family: &FunctionFamily,
    params: &EvalParams,
    which: BoundId,
    tol: f64,
) -> Result<VerificationRecord> {
    let sp = which.specialize(params)?;
    check_hypothesis(family, which, &sp)?;
    let target = target_lhs(&family.triple, &sp, which.target_form())?;
    let rhs = bound_rhs(which, &sp, &Curvature::of_family(family, &sp))?;
    let margin = rhs - target.value;
    let mut quad_error = target.quad_error.max(target.path_gap);
    let mut status = classify(margin, tol, quad_error);
    if !target.paths_agree() {
        quad_error = quad_error.max(margin.abs() * 2.0);
        status = Status::Indeterminate;
    }
    Ok(VerificationRecord {
        which,
        params: sp,
        function_label: family.label.clone(),
        lhs: target.value,
        rhs,
        margin,
        status,
        tolerance: tol,
        quad_error,
    })
}

/// Both sides of `f(m) ≤ (1/(b−a))∫f ≤ (f(a)+f(b))/2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HadamardCheck {
    pub midpoint_value: f64,
    pub average: f64,
    pub endpoint_mean: f64,
    pub holds: bool,
}

pub fn hadamard_check(family: &FunctionFamily, a: f64, b: f64, tol: f64) -> Result<HadamardCheck> {
    if !family.convex {
        return Err(Error::Precondition(format!("family `{}` is not convex", family.label)));
    }
    if !family.triple.covers(a, b) || a >= b {
        return Err(Error::Precondition(format!("[{a}, {b}] not inside the domain of `{}`", family.label)));
    }
    let f = &family.triple.f;
    let average = integrate(|t| f(t), a, b, IDENTITY_QUAD_TOL)?.value / (b - a);
    let midpoint_value = f(0.5 * (a + b));
    let endpoint_mean = 0.5 * (f(a) + f(b));
    Ok(HadamardCheck {
        midpoint_value,
        average,
        endpoint_mean,
        holds: midpoint_value <= average + tol && average <= endpoint_mean + tol,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Tighter {
    A,
    B,
    Tie,
}

impl Tighter {
    pub fn as_str(self) -> &'static str {
        match self {
            Tighter::A => "a",
            Tighter::B => "b",
            Tighter::Tie => "tie",
        }
    }
}

/// Two bound (or kernel) values at one parameter point.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComparisonRecord {
    pub bound_a: String,
    pub bound_b: String,
    pub params: EvalParams,
    pub values: (f64, f64),
    pub tighter: Tighter,
}

impl ComparisonRecord {
    pub fn new(bound_a: impl Into<String>, bound_b: impl Into<String>, params: EvalParams, values: (f64, f64)) -> Self {
        let (va, vb) = values;
        let scale = va.abs().max(vb.abs()).max(1.0);
        let tighter = if (va - vb).abs() <= TIE_TOL * scale {
            Tighter::Tie
        } else if va < vb {
            Tighter::A
        } else {
            Tighter::B
        };
        ComparisonRecord {
            bound_a: bound_a.into(),
            bound_b: bound_b.into(),
            params,
            values,
            tighter,
        }
    }

    pub fn difference(&self) -> f64 {
        (self.values.0 - self.values.1).abs()
    }
}

/// Both bounds for `family` at `params`; each is specialised separately.
pub fn compare(family: &FunctionFamily, params: &EvalParams, a: BoundId, b: BoundId) -> Result<ComparisonRecord> {
    let value = |id: BoundId| -> Result<f64> {
        let sp = id.specialize(params)?;
        bound_rhs(id, &sp, &Curvature::of_family(family, &sp))
    };
    Ok(ComparisonRecord::new(a.as_str(), b.as_str(), *params, (value(a)?, value(b)?)))
}

/// Which claimed reduction to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReductionKind {
    /// Centered power-mean bound at α = 1 against the Xi–Qi bound.
    CToXiQi,
    /// Simpson-type bound at s = 1, α = 1 against Sarikaya's bound, once
    /// with the integral constant and once with the tabulated 27/972.
    SimpsonToSarikaya,
    /// `C4(1, 1/2 − 1/r, p)` against the Park kernel, `λ = 1/2 − 1/r`.
    HolderToPark,
}

impl ReductionKind {
    pub const ALL: [ReductionKind; 3] = [
        ReductionKind::CToXiQi,
        ReductionKind::SimpsonToSarikaya,
        ReductionKind::HolderToPark,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ReductionKind::CToXiQi => "c-to-xi-qi",
            ReductionKind::SimpsonToSarikaya => "simpson-to-sarikaya",
            ReductionKind::HolderToPark => "holder-to-park",
        }
    }

    /// Whether the two sides are claimed to coincide.
    pub fn expects_equality(self) -> bool {
        !matches!(self, ReductionKind::SimpsonToSarikaya)
    }
}

impl FromStr for ReductionKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ReductionKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown reduction `{s}`")))
    }
}

/// `λ = 1/2 − 1/r`
pub fn park_lambda(r: f64) -> f64 {
    0.5 - 1.0 / r
}

/// Evaluates `kind` at each point with the curvature of `family`.
pub fn reduction_check(kind: ReductionKind, family: &FunctionFamily, points: &[EvalParams]) -> Result<Vec<ComparisonRecord>> {
    let mut out = Vec::with_capacity(points.len() * 2);
    for point in points {
        let mut sp = *point;
        sp.alpha = 1.0;
        sp.x = sp.mid();
        match kind {
            ReductionKind::CToXiQi => {
                let c = Curvature::of_family(family, &sp);
                out.push(ComparisonRecord::new(
                    BoundId::PowerMeanCentered.as_str(),
                    BoundId::XiQi.as_str(),
                    sp,
                    (bound_rhs(BoundId::PowerMeanCentered, &sp, &c)?, bound_rhs(BoundId::XiQi, &sp, &c)?),
                ));
            }
            ReductionKind::SimpsonToSarikaya => {
                sp.s = 1.0;
                sp.lambda = 1.0 / 3.0;
                let c = Curvature::of_family(family, &sp);
                let sarikaya = bound_rhs(BoundId::Sarikaya, &sp, &c)?;
                for id in [BoundId::PowerMeanSimpson, BoundId::PowerMeanSimpsonTabulated] {
                    out.push(ComparisonRecord::new(id.as_str(), BoundId::Sarikaya.as_str(), sp, (bound_rhs(id, &sp, &c)?, sarikaya)));
                }
            }
            ReductionKind::HolderToPark => {
                let conj = sp
                    .p()
                    .ok_or_else(|| domain("reduction_check", format!("holder-to-park needs q > 1, got {}", sp.q)))?;
                if sp.lambda >= 0.5 {
                    return Err(domain("reduction_check", format!("holder-to-park needs lambda < 1/2, got {}", sp.lambda)));
                }
                let r = 2.0 / (1.0 - 2.0 * sp.lambda);
                out.push(ComparisonRecord::new("c4", "park-kernel", sp, (c4(1.0, sp.lambda, conj)?, park(r, conj)?)));
            }
        }
    }
    Ok(out)
}
