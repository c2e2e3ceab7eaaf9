#![allow(dead_code)]

use fracineq::quad::{integrate, integrate_endpoint_power, SingularEnd};
use fracineq::specfun::gamma;

pub const ORACLE_TOL: f64 = 1e-13;

/// β(x, y) from its integral, the t^(x−1) and (1−t)^(y−1) weights absorbed
/// on either half.
pub fn beta_by_quadrature(x: f64, y: f64) -> f64 {
    let lower = integrate_endpoint_power(|t: f64| (1.0 - t).powf(y - 1.0), 0.0, 0.5, x - 1.0, SingularEnd::Lower, ORACLE_TOL)
        .unwrap()
        .value;
    let upper = integrate_endpoint_power(|t: f64| t.powf(x - 1.0), 0.5, 1.0, y - 1.0, SingularEnd::Upper, ORACLE_TOL)
        .unwrap()
        .value;
    lower + upper
}

/// ₂F₁(a, b; c; z) through Euler's integral, for c > b > 0 and z < 1.
pub fn hyp2f1_euler(a: f64, b: f64, c: f64, z: f64) -> f64 {
    let g = |t: f64| (1.0 - z * t).powf(-a);
    let lower = integrate_endpoint_power(
        |t: f64| g(t) * (1.0 - t).powf(c - b - 1.0),
        0.0,
        0.5,
        b - 1.0,
        SingularEnd::Lower,
        ORACLE_TOL,
    )
    .unwrap()
    .value;
    let upper = integrate_endpoint_power(
        |t: f64| g(t) * t.powf(b - 1.0),
        0.5,
        1.0,
        c - b - 1.0,
        SingularEnd::Upper,
        ORACLE_TOL,
    )
    .unwrap()
    .value;
    (lower + upper) * gamma(c).unwrap() / (gamma(b).unwrap() * gamma(c - b).unwrap())
}

/// ∫₀¹ g over pieces split at `breaks`.
pub fn split_integral<G: Fn(f64) -> f64>(g: G, breaks: &[f64]) -> f64 {
    let mut pts = vec![0.0];
    pts.extend(breaks.iter().copied().filter(|b| *b > 0.0 && *b < 1.0));
    pts.push(1.0);
    pts.windows(2)
        .map(|w| integrate(&g, w[0], w[1], ORACLE_TOL).unwrap().value)
        .sum()
}

/// C1–C4 straight from their defining integrals.
pub fn kernel_integral(kind: &str, alpha: f64, lambda: f64, sp: f64) -> f64 {
    let level = (alpha + 1.0) * lambda;
    let crossing = if level > 0.0 && level < 1.0 { vec![level.powf(1.0 / alpha)] } else { vec![] };
    let gap = move |t: f64| (level - t.powf(alpha)).abs();
    match kind {
        "c1" => split_integral(|t| t * gap(t), &crossing),
        "c2" => split_integral(|t| t.powf(sp + 1.0) * gap(t), &crossing),
        "c3" => split_integral(|t| t * (1.0 - t).powf(sp) * gap(t), &crossing),
        "c4" => split_integral(|t| t.powf(sp) * gap(t).powf(sp), &crossing),
        other => panic!("unknown kernel {other}"),
    }
}

pub fn rel_diff(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1e-300)
}
