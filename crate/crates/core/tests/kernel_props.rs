mod common;

use fracineq::kernels::{
    audit, c1, c2, c3, c4, c4_root, closed_form, h1, h2, h3, h3_flipped, park, KernelName, KernelParams, AUDIT_TOL,
};
use proptest::prelude::*;

use common::{kernel_integral, rel_diff};

const ALPHA: [f64; 4] = [0.5, 1.0, 2.0, 3.0];
const S: [f64; 4] = [0.25, 0.5, 0.75, 1.0];

fn lambdas() -> Vec<f64> {
    (0..=10).map(|k| k as f64 / 10.0).collect()
}

#[test]
fn alpha_one_matches_h_kernels() {
    for lambda in lambdas() {
        assert!((c1(1.0, lambda).unwrap() - h1(lambda).unwrap()).abs() <= 1e-14);
        for s in S {
            assert!((c2(1.0, lambda, s).unwrap() - h2(lambda, s).unwrap()).abs() <= 1e-13, "λ = {lambda}, s = {s}");
            assert!((c3(1.0, lambda, s).unwrap() - h3(lambda, s).unwrap()).abs() <= 1e-13, "λ = {lambda}, s = {s}");
        }
    }
}

#[test]
fn p_one_degenerates_to_c1() {
    for alpha in ALPHA {
        for lambda in lambdas() {
            assert!((c4(alpha, lambda, 1.0).unwrap() - c1(alpha, lambda).unwrap()).abs() <= 1e-12, "α = {alpha}, λ = {lambda}");
        }
    }
}

#[test]
fn continuous_across_the_branch_point() {
    for alpha in ALPHA {
        let knee = 1.0 / (alpha + 1.0);
        let (below, above) = (knee * (1.0 - 1e-13), knee * (1.0 + 1e-13));
        let pairs = [
            (c1(alpha, below).unwrap(), c1(alpha, above).unwrap()),
            (c2(alpha, below, 0.5).unwrap(), c2(alpha, above, 0.5).unwrap()),
            (c3(alpha, below, 0.5).unwrap(), c3(alpha, above, 0.5).unwrap()),
            (c4(alpha, below, 2.5).unwrap(), c4(alpha, above, 2.5).unwrap()),
        ];
        for (i, (lo, hi)) in pairs.into_iter().enumerate() {
            assert!((lo - hi).abs() <= 1e-12, "C{} at α = {alpha}: {lo} vs {hi}", i + 1);
        }
    }
    for s in S {
        assert!((h2(0.5 - 1e-13, s).unwrap() - h2(0.5 + 1e-13, s).unwrap()).abs() <= 1e-12);
        assert!((h3(0.5 - 1e-13, s).unwrap() - h3(0.5 + 1e-13, s).unwrap()).abs() <= 1e-12);
    }
}

#[test]
fn flagged_forms_disagree_only_where_documented() {
    for lambda in lambdas() {
        for s in S {
            let a = audit(KernelName::H3Flipped, &KernelParams::new(1.0, lambda).with_s(s), AUDIT_TOL).unwrap();
            assert_eq!(a.flagged, lambda <= 0.5, "λ = {lambda}, s = {s}");
        }
    }
    let tab = audit(KernelName::C3SimpsonTabulated, &KernelParams::new(1.0, 1.0 / 3.0).with_s(1.0), AUDIT_TOL).unwrap();
    assert!(tab.flagged);
    assert!((tab.oracle - 37.0 / 972.0).abs() <= 1e-12);
    for p in [1.5, 2.0, 3.0, 4.0] {
        let params = KernelParams::new(1.0, 1.0 / 3.0).with_p(p);
        assert!(audit(KernelName::C4SimpsonUnnormalized, &params, AUDIT_TOL).unwrap().flagged);
        assert!(!audit(KernelName::C4, &params, AUDIT_TOL).unwrap().flagged);
    }
}

#[test]
fn park_kernel_at_quarter() {
    // r = 4 puts (α+1)λ at 1/2
    for p in [1.5, 2.0, 3.0, 5.0] {
        assert!((park(4.0, p).unwrap() - c4(1.0, 0.25, p).unwrap()).abs() <= 1e-12);
    }
}

#[test]
fn audit_reproduces_flags() {
    let params = KernelParams::new(1.0, 0.2).with_s(0.5);
    let first = audit(KernelName::H3Flipped, &params, AUDIT_TOL).unwrap();
    let second = audit(KernelName::H3Flipped, &params, AUDIT_TOL).unwrap();
    assert_eq!(first, second);
}

proptest! {
    #[test]
    fn closed_forms_match_integrals(alpha in 0.3f64..3.5, lambda in 0.0f64..=1.0, s in 0.05f64..=1.0, p in 1.0f64..6.0) {
        let checks = [
            ("c1", c1(alpha, lambda).unwrap(), 0.0),
            ("c2", c2(alpha, lambda, s).unwrap(), s),
            ("c3", c3(alpha, lambda, s).unwrap(), s),
            ("c4", c4(alpha, lambda, p).unwrap(), p),
        ];
        for (kind, value, extra) in checks {
            let direct = kernel_integral(kind, alpha, lambda, extra);
            prop_assert!((value - direct).abs() <= 1e-9, "{} = {} vs {}", kind, value, direct);
            prop_assert!(value >= 0.0);
        }
    }

    #[test]
    fn h_kernels_match_integrals(lambda in 0.0f64..=1.0, s in 0.05f64..=1.0) {
        prop_assert!((h1(lambda).unwrap() - kernel_integral("c1", 1.0, lambda, 0.0)).abs() <= 1e-9);
        prop_assert!((h2(lambda, s).unwrap() - kernel_integral("c2", 1.0, lambda, s)).abs() <= 1e-9);
        prop_assert!((h3(lambda, s).unwrap() - kernel_integral("c3", 1.0, lambda, s)).abs() <= 1e-9);
        if lambda >= 0.5 {
            prop_assert_eq!(h3(lambda, s).unwrap(), h3_flipped(lambda, s).unwrap());
        }
    }

    #[test]
    fn c4_root_is_pth_root(alpha in 0.3f64..3.5, lambda in 0.0f64..=1.0, p in 1.0f64..8.0) {
        let v = c4(alpha, lambda, p).unwrap();
        prop_assert!(rel_diff(c4_root(alpha, lambda, p).unwrap(), v.powf(1.0 / p)) <= 1e-13);
    }

    #[test]
    fn c4_root_finite_for_large_p(alpha in 0.1f64..3.0, lambda in 0.0f64..=1.0, p in 8.0f64..2000.0) {
        let r = c4_root(alpha, lambda, p).unwrap();
        prop_assert!(r.is_finite() && r >= 0.0);
        // between the L^p mean and the sup of t|L − t^α| on [0, 1]
        let level = (alpha + 1.0) * lambda;
        let sup = (0..=2000).map(|k| { let t = k as f64 / 2000.0; t * (level - t.powf(alpha)).abs() }).fold(0.0, f64::max);
        prop_assert!(r <= sup * (1.0 + 1e-9) + 1e-12);
    }

    #[test]
    fn closed_form_dispatch(alpha in 0.3f64..3.5, lambda in 0.0f64..=1.0, s in 0.05f64..=1.0, p in 1.0f64..6.0) {
        let params = KernelParams::new(alpha, lambda).with_s(s).with_p(p);
        prop_assert_eq!(closed_form(KernelName::C1, &params).unwrap(), c1(alpha, lambda).unwrap());
        prop_assert_eq!(closed_form(KernelName::C3, &params).unwrap(), c3(alpha, lambda, s).unwrap());
        prop_assert_eq!(closed_form(KernelName::C4, &params).unwrap(), c4(alpha, lambda, p).unwrap());
    }
}
