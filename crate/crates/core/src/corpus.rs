//! Test-function families with certified hypotheses, and a sampled
//! s-convexity checker.
//!
//! A function `g` on `[0, ∞)` is s-convex in the second sense when
//! `g(αx + βy) ≤ α^s g(x) + β^s g(y)` for all `α + β = 1`, `α, β ≥ 0`.
//! The bounds need this property for `|f″|^q`.

use std::fmt;

use serde::Serialize;

use crate::error::{domain, ensure_finite, Error, Result};
use crate::identity::FunctionTriple;

/// Offset into the Halton sequence used for all sampling.
pub const SAMPLING_SEED: u64 = 20_240_301;

/// Largest tolerated `g(αx+βy) − α^s g(x) − β^s g(y)`.
pub const S_CONVEXITY_TOL: f64 = 1e-10;

/// Radical inverse of `index` in base `base`.
pub fn radical_inverse(mut index: u64, base: u64) -> f64 {
    let inv = 1.0 / base as f64;
    let mut factor = inv;
    let mut value = 0.0;
    while index > 0 {
        value += (index % base) as f64 * factor;
        index /= base;
        factor *= inv;
    }
    value
}

/// Point `index` of the Halton sequence in `dims` dimensions.
pub fn halton(index: u64, dims: usize) -> Vec<f64> {
    const PRIMES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    assert!(dims <= PRIMES.len(), "at most {} Halton dimensions", PRIMES.len());
    PRIMES[..dims].iter().map(|&p| radical_inverse(index, p)).collect()
}

/// Why a family satisfies the hypothesis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Certification {
    /// `|f″|^q = u^s` by construction.
    Construction,
    /// `|f″|^q` is convex and non-negative, hence s-convex for every s.
    NonnegativeConvex,
    /// `|f″|^q` is a non-negative constant.
    Constant,
}

impl fmt::Display for Certification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Certification::Construction => "construction",
            Certification::NonnegativeConvex => "nonnegative-convex",
            Certification::Constant => "constant",
        })
    }
}

/// The (s, q) pairs for which a family is certified.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CertifiedFor {
    Nothing,
    Every(Certification),
    Exactly { s: f64, q: f64, tag: Certification },
}

#[derive(Debug, Clone)]
pub struct FunctionFamily {
    pub label: String,
    pub triple: FunctionTriple,
    pub certified_for: CertifiedFor,
    /// f itself is convex on the domain.
    pub convex: bool,
    /// sup |f⁗| on a subinterval, when known.
    pub fourth_derivative_sup: Option<fn(f64, f64) -> f64>,
}

impl FunctionFamily {
    pub fn domain(&self) -> (f64, f64) {
        self.triple.domain
    }

    pub fn certification(&self, s: f64, q: f64) -> Option<Certification> {
        match self.certified_for {
            CertifiedFor::Nothing => None,
            CertifiedFor::Every(tag) => Some(tag),
            CertifiedFor::Exactly { s: cs, q: cq, tag } => {
                ((cs - s).abs() <= 1e-12 && (cq - q).abs() <= 1e-12).then_some(tag)
            }
        }
    }

    /// Fails with a precondition error unless `(s, q)` is certified.
    pub fn require_certified(&self, s: f64, q: f64) -> Result<Certification> {
        self.certification(s, q).ok_or_else(|| {
            Error::Precondition(format!("family `{}` is not certified for s = {s}, q = {q}", self.label))
        })
    }

    pub fn is_identity_only(&self) -> bool {
        matches!(self.certified_for, CertifiedFor::Nothing)
    }

    /// `|f″|^q` as a plain function.
    pub fn second_derivative_power(&self, q: f64) -> impl Fn(f64) -> f64 + '_ {
        move |u| (self.triple.d2)(u).abs().powf(q)
    }

    pub fn with_domain(&self, domain: (f64, f64)) -> Self {
        FunctionFamily {
            triple: self.triple.with_domain(domain),
            ..self.clone()
        }
    }
}

/// Result of a sampled s-convexity check.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SConvexityCheck {
    pub pass: bool,
    pub worst_violation: f64,
    /// `(x, y, weight)` where the worst violation occurred.
    pub witness: (f64, f64, f64),
}

/// Samples `n` triples `(x, y, α)` from a Halton sequence and returns the
/// worst value of `g(αx+βy) − α^s g(x) − β^s g(y)`.
///
/// Every tenth sample is placed on the diagonal `x = y`, where the
/// condition reduces to `(α^s + β^s − 1) g(x) ≥ 0`.
pub fn is_s_convex_sampled<G: Fn(f64) -> f64>(g: G, s: f64, dom: (f64, f64), n: usize) -> Result<SConvexityCheck> {
    ensure_finite("is_s_convex_sampled", &[s, dom.0, dom.1])?;
    if !(s > 0.0 && s <= 1.0) {
        return Err(domain("is_s_convex_sampled", format!("s = {s} not in (0, 1]")));
    }
    if dom.0 < 0.0 || dom.0 >= dom.1 {
        return Err(domain("is_s_convex_sampled", format!("bad domain [{}, {}]", dom.0, dom.1)));
    }
    if n < 100 {
        return Err(domain("is_s_convex_sampled", format!("n = {n} below 100")));
    }

    let eval = |t: f64| {
        let v = g(t);
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::NonFinite { at: t })
        }
    };
    let width = dom.1 - dom.0;
    let mut worst = f64::NEG_INFINITY;
    let mut witness = (dom.0, dom.0, 0.0);
    for i in 0..n {
        let u = halton(SAMPLING_SEED + i as u64, 3);
        let x = dom.0 + width * u[0];
        let y = if i % 10 == 9 { x } else { dom.0 + width * u[1] };
        let w = u[2];
        let mixed = (w * x + (1.0 - w) * y).clamp(dom.0, dom.1);
        let violation = eval(mixed)? - w.powf(s) * eval(x)? - (1.0 - w).powf(s) * eval(y)?;
        if violation > worst {
            worst = violation;
            witness = (x, y, w);
        }
    }
    Ok(SConvexityCheck {
        pass: worst <= S_CONVEXITY_TOL,
        worst_violation: worst,
        witness,
    })
}

pub const POWER_MATCH: &str = "power-match";
pub const CUBIC: &str = "cubic";
pub const QUADRATIC: &str = "quadratic";
pub const EXPONENTIAL: &str = "exponential";
pub const AFFINE: &str = "affine";
pub const SINE: &str = "sine";

pub const FAMILY_LABELS: [&str; 6] = [POWER_MATCH, CUBIC, QUADRATIC, EXPONENTIAL, AFFINE, SINE];

/// Default domain of the exponential family.
pub const EXPONENTIAL_DOMAIN: (f64, f64) = (0.0, 1.5);

/// `f(u) = u^(e+2)/((e+1)(e+2))` with `e = s/q`, so `|f″|^q = u^s`.
pub fn power_match(domain: (f64, f64), s: f64, q: f64) -> FunctionFamily {
    let e = s / q;
    let norm = (e + 1.0) * (e + 2.0);
    FunctionFamily {
        label: POWER_MATCH.to_string(),
        triple: FunctionTriple::new(
            POWER_MATCH,
            domain,
            move |u: f64| u.powf(e + 2.0) / norm,
            move |u: f64| u.powf(e + 1.0) / (e + 1.0),
            move |u: f64| u.powf(e),
        ),
        certified_for: CertifiedFor::Exactly {
            s,
            q,
            tag: Certification::Construction,
        },
        convex: true,
        fourth_derivative_sup: None,
    }
}

pub fn cubic(domain: (f64, f64)) -> FunctionFamily {
    FunctionFamily {
        label: CUBIC.to_string(),
        triple: FunctionTriple::new(CUBIC, domain, |u: f64| u.powi(3), |u| 3.0 * u * u, |u| 6.0 * u),
        certified_for: CertifiedFor::Every(Certification::NonnegativeConvex),
        convex: true,
        fourth_derivative_sup: Some(|_, _| 0.0),
    }
}

pub fn quadratic(domain: (f64, f64)) -> FunctionFamily {
    FunctionFamily {
        label: QUADRATIC.to_string(),
        triple: FunctionTriple::new(QUADRATIC, domain, |u| u * u, |u| 2.0 * u, |_| 2.0),
        certified_for: CertifiedFor::Every(Certification::Constant),
        convex: true,
        fourth_derivative_sup: Some(|_, _| 0.0),
    }
}

pub fn exponential(domain: (f64, f64)) -> FunctionFamily {
    FunctionFamily {
        label: EXPONENTIAL.to_string(),
        triple: FunctionTriple::new(EXPONENTIAL, domain, f64::exp, f64::exp, f64::exp),
        certified_for: CertifiedFor::Every(Certification::NonnegativeConvex),
        convex: true,
        fourth_derivative_sup: Some(|_, b| b.exp()),
    }
}

pub fn affine(domain: (f64, f64)) -> FunctionFamily {
    FunctionFamily {
        label: AFFINE.to_string(),
        triple: FunctionTriple::new(AFFINE, domain, |u| 1.0 + u, |_| 1.0, |_| 0.0),
        certified_for: CertifiedFor::Every(Certification::Constant),
        convex: true,
        fourth_derivative_sup: Some(|_, _| 0.0),
    }
}

/// `sin(u) + 2u`: smooth, not convex, never certified. Identity checks only.
pub fn sine(domain: (f64, f64)) -> FunctionFamily {
    FunctionFamily {
        label: SINE.to_string(),
        triple: FunctionTriple::new(SINE, domain, |u: f64| u.sin() + 2.0 * u, |u: f64| u.cos() + 2.0, |u: f64| -u.sin()),
        certified_for: CertifiedFor::Nothing,
        convex: false,
        fourth_derivative_sup: Some(|a, b| {
            // sup |sin| over [a, b]
            let peak = std::f64::consts::FRAC_PI_2;
            let k = ((a - peak) / std::f64::consts::PI).ceil();
            if peak + k * std::f64::consts::PI <= b {
                1.0
            } else {
                a.sin().abs().max(b.sin().abs())
            }
        }),
    }
}

/// Family by label; `s`, `q` parametrise the power-match family.
pub fn family(label: &str, domain: (f64, f64), s: f64, q: f64) -> Option<FunctionFamily> {
    Some(match label {
        POWER_MATCH => power_match(domain, s, q),
        CUBIC => cubic(domain),
        QUADRATIC => quadratic(domain),
        EXPONENTIAL => exponential(domain),
        AFFINE => affine(domain),
        SINE => sine(domain),
        _ => return None,
    })
}

/// All six families on `domain`.
pub fn builtin_families(domain: (f64, f64), s: f64, q: f64) -> Vec<FunctionFamily> {
    FAMILY_LABELS
        .iter()
        .map(|l| family(l, domain, s, q).expect("builtin label"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn power_is_s_convex() {
        for &s in &[0.1, 0.5, 0.9, 1.0] {
            let r = is_s_convex_sampled(|t: f64| t.powf(s), s, (0.0, 2.0), 10_000).unwrap();
            assert!(r.pass, "s = {s}: {r:?}");
        }
    }

    #[test]
    fn constants_are_s_convex() {
        for &s in &[0.2, 0.7, 1.0] {
            let r = is_s_convex_sampled(|_| 3.0, s, (0.5, 4.0), 1000).unwrap();
            assert!(r.pass);
        }
    }

    #[test]
    fn negative_somewhere_fails() {
        let r = is_s_convex_sampled(|t| t - 0.6, 0.5, (0.0, 1.0), 10_000).unwrap();
        assert!(!r.pass);
        assert!(r.worst_violation > 0.0);
        let (x, y, _) = r.witness;
        assert!(x.min(y) < 0.6);
    }

    #[test]
    fn checker_rejects_bad_input() {
        assert!(is_s_convex_sampled(|t| t, 0.0, (0.0, 1.0), 100).is_err());
        assert!(is_s_convex_sampled(|t| t, 0.5, (-1.0, 1.0), 100).is_err());
        assert!(is_s_convex_sampled(|t| t, 0.5, (0.0, 1.0), 99).is_err());
        assert!(matches!(
            is_s_convex_sampled(|t| 1.0 / t, 0.5, (0.0, 1.0), 100),
            Err(Error::NonFinite { .. }) | Ok(_)
        ));
    }

    #[test]
    fn certification_lookup() {
        let pm = power_match((0.0, 1.0), 0.5, 2.0);
        assert_eq!(pm.certification(0.5, 2.0), Some(Certification::Construction));
        assert_eq!(pm.certification(0.5, 3.0), None);
        assert!(sine((0.0, 1.0)).require_certified(1.0, 1.0).is_err());
        assert_eq!(quadratic((0.0, 1.0)).certification(0.3, 4.0), Some(Certification::Constant));
    }

    #[test]
    fn power_match_second_derivative() {
        let pm = power_match((0.0, 3.0), 0.5, 2.0);
        let g = pm.second_derivative_power(2.0);
        for &u in &[0.1, 1.0, 2.5] {
            assert!((g(u) - u.sqrt()).abs() < 1e-14);
        }
    }

    #[test]
    fn halton_is_deterministic_and_in_unit_cube() {
        assert_eq!(radical_inverse(1, 2), 0.5);
        assert_eq!(radical_inverse(3, 2), 0.75);
        assert!((radical_inverse(5, 3) - (2.0 / 3.0 + 1.0 / 9.0)).abs() < 1e-15);
        for i in 0..100 {
            let p = halton(i, 5);
            assert!(p.iter().all(|v| (0.0..1.0).contains(v)));
            assert_eq!(p, halton(i, 5));
        }
    }
}
