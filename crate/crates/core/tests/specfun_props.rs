mod common;

use fracineq::specfun::{beta, gamma, hyp2f1, inc_beta, ln_gamma};
use proptest::prelude::*;

use common::{beta_by_quadrature, hyp2f1_euler, rel_diff};

#[test]
fn gamma_recurrence_on_quarter_grid() {
    for k in 1..=40 {
        let x = 0.25 * k as f64;
        let lhs = gamma(x + 1.0).unwrap();
        assert!(rel_diff(lhs, x * gamma(x).unwrap()) <= 1e-12, "x = {x}");
    }
}

#[test]
fn gamma_half_integers() {
    let sqrt_pi = std::f64::consts::PI.sqrt();
    assert!(rel_diff(gamma(0.5).unwrap(), sqrt_pi) < 1e-14);
    assert!(rel_diff(gamma(3.5).unwrap(), 15.0 / 8.0 * sqrt_pi) < 1e-14);
    assert_eq!(gamma(6.0).unwrap(), 120.0);
}

#[test]
fn beta_symmetric_bitwise() {
    let pts = [0.3, 0.5, 1.0, 1.7, 2.0, 3.5, 4.25, 7.0, 11.5, 20.0];
    for (i, &x) in pts.iter().enumerate() {
        let y = pts[(i * 3 + 1) % pts.len()];
        assert_eq!(beta(x, y).unwrap().to_bits(), beta(y, x).unwrap().to_bits());
        assert_eq!(beta(x, x + 0.5).unwrap().to_bits(), beta(x + 0.5, x).unwrap().to_bits());
    }
}

#[test]
fn inc_beta_reaches_beta_near_one() {
    for x in [1.0, 2.0, 3.5] {
        for y in [1.0, 2.0, 3.5] {
            let gap = (beta(x, y).unwrap() - inc_beta(1.0 - 1e-8, x, y).unwrap()).abs();
            assert!(gap <= 1e-6, "({x}, {y}): {gap}");
        }
    }
}

#[test]
fn inc_beta_closed_forms() {
    // β(a; 1, 1) = a, β(a; 1, y) = (1 − (1−a)^y)/y, β(a; x, 1) = a^x/x
    for a in [0.01, 0.2, 0.5, 0.8, 0.99] {
        assert!((inc_beta(a, 1.0, 1.0).unwrap() - a).abs() < 1e-15);
        assert!(rel_diff(inc_beta(a, 1.0, 2.5).unwrap(), (1.0 - (1.0 - a).powf(2.5)) / 2.5) < 1e-13);
        assert!(rel_diff(inc_beta(a, 3.0, 1.0).unwrap(), a.powi(3) / 3.0) < 1e-13);
    }
}

#[test]
fn hyp2f1_matches_euler_integral_on_grid() {
    for a in [-0.5, -1.5, -3.0] {
        for c in [2.5, 4.0] {
            for z in [-0.9, -0.5, 0.0, 0.3, 0.9] {
                let got = hyp2f1(a, 1.0, c, z).unwrap();
                let want = hyp2f1_euler(a, 1.0, c, z);
                assert!((got - want).abs() <= 1e-9, "({a}, 1; {c}; {z}): {got} vs {want}");
            }
        }
    }
}

proptest! {
    #[test]
    fn gamma_recurrence(x in 0.05f64..40.0) {
        prop_assert!(rel_diff(gamma(x + 1.0).unwrap(), x * gamma(x).unwrap()) <= 1e-12);
    }

    #[test]
    fn ln_gamma_is_log_of_gamma(x in 0.1f64..150.0) {
        prop_assert!((ln_gamma(x).unwrap() - gamma(x).unwrap().ln()).abs() <= 1e-12 * ln_gamma(x).unwrap().abs().max(1.0));
    }

    #[test]
    fn beta_is_gamma_ratio(x in 0.1f64..30.0, y in 0.1f64..30.0) {
        let want = gamma(x).unwrap() * gamma(y).unwrap() / gamma(x + y).unwrap();
        prop_assert!(rel_diff(beta(x, y).unwrap(), want) <= 1e-12);
    }

    #[test]
    fn beta_matches_its_integral(x in 0.2f64..6.0, y in 0.2f64..6.0) {
        prop_assert!(rel_diff(beta(x, y).unwrap(), beta_by_quadrature(x, y)) <= 1e-10);
    }

    #[test]
    fn inc_beta_monotone_and_bounded(x in 0.2f64..8.0, y in 0.2f64..8.0) {
        let full = beta(x, y).unwrap();
        let mut prev = 0.0;
        for k in 1..50 {
            let v = inc_beta(k as f64 / 50.0, x, y).unwrap();
            prop_assert!(v >= prev);
            prop_assert!(v <= full * (1.0 + 1e-13));
            prev = v;
        }
    }

    #[test]
    fn inc_beta_reflection(a0 in 0.001f64..0.999, x in 0.2f64..8.0, y in 0.2f64..8.0) {
        let sum = inc_beta(a0, x, y).unwrap() + inc_beta(1.0 - a0, y, x).unwrap();
        prop_assert!(rel_diff(sum, beta(x, y).unwrap()) <= 1e-12);
    }

    #[test]
    fn hyp2f1_matches_euler_integral(a in -4.0f64..2.0, b in 0.3f64..3.0, gap in 0.3f64..3.0, z in -0.95f64..0.95) {
        let c = b + gap;
        let got = hyp2f1(a, b, c, z).unwrap();
        let want = hyp2f1_euler(a, b, c, z);
        prop_assert!((got - want).abs() <= 1e-9 * want.abs().max(1.0), "{got} vs {want}");
    }
}
