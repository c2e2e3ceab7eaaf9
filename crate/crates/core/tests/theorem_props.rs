use fracineq::corpus::{builtin_families, cubic, exponential, family, quadratic, CUBIC, EXPONENTIAL, POWER_MATCH};
use fracineq::identity::EvalParams;
use fracineq::theorems::{
    bound_rhs, check_inequality, classify, compare, hadamard_check, via_general_theorem, BoundId, Curvature, Status,
};
use proptest::prelude::*;

#[test]
fn hadamard_on_convex_families() {
    for fam in builtin_families((0.0, 1.0), 1.0, 1.0) {
        if fam.convex {
            let h = hadamard_check(&fam, 0.0, 1.0, 1e-10).unwrap();
            assert!(h.holds, "{}: {h:?}", fam.label);
        } else {
            assert!(hadamard_check(&fam, 0.0, 1.0, 1e-10).is_err());
        }
    }
}

#[test]
fn classical_simpson_fourth_derivative_bound() {
    // Simpson error for e^u on [0, 1] is below e/2880
    let fam = exponential((0.0, 1.5));
    let p = EvalParams::new(0.0, 1.0, 0.5, 1.0 / 3.0, 1.0, 1.0, 1.0).unwrap();
    let r = check_inequality(&fam, &p, BoundId::SimpsonFourthDerivative).unwrap();
    assert_eq!(r.status, Status::Holds);
    assert!((r.rhs - std::f64::consts::E / 2880.0).abs() < 1e-15);
    assert!(r.lhs > 0.0 && r.lhs < r.rhs);
}

#[test]
fn holder_refuses_q_one() {
    let p = EvalParams::new(0.0, 1.0, 0.5, 0.5, 1.0, 1.0, 1.0).unwrap();
    assert!(check_inequality(&cubic((0.0, 1.0)), &p, BoundId::Holder).is_err());
}

#[test]
fn simpson_against_sarikaya_both_constants() {
    let fam = quadratic((0.0, 1.0));
    for q in [1.0, 1.5, 2.0, 3.0] {
        let p = EvalParams::new(0.0, 1.0, 0.5, 1.0 / 3.0, 1.0, 1.0, q).unwrap();
        let oracle = compare(&fam, &p, BoundId::PowerMeanSimpson, BoundId::Sarikaya).unwrap();
        let printed = compare(&fam, &p, BoundId::PowerMeanSimpsonTabulated, BoundId::Sarikaya).unwrap();
        assert!(oracle.values.0.is_finite() && printed.values.0.is_finite());
        // the printed constant is smaller, so its bound is never looser
        assert!(printed.values.0 <= oracle.values.0 + 1e-15);
    }
}

#[test]
fn holder_forms_survive_q_near_one() {
    let c = Curvature { at_x: 1.0, at_a: 2.0, at_b: 0.5, fourth_sup: None };
    for alpha in [0.1, 1.0, 3.0] {
        for q in [1.000222243363784, 1.001, 1.01] {
            let p = EvalParams::new(0.0, 0.1, 0.0, 0.0, alpha, 0.05, q).unwrap();
            for id in [BoundId::HolderTrapezoidFrac, BoundId::HolderMidpointFrac, BoundId::HolderSimpsonFrac] {
                let sp = id.specialize(&p).unwrap();
                let direct = bound_rhs(id, &sp, &c).unwrap();
                let general = via_general_theorem(id, &sp, &c).unwrap().unwrap();
                assert!(direct > 0.0 && (direct - general).abs() <= 1e-12 * direct, "{id} α={alpha} q={q}: {direct} vs {general}");
            }
        }
    }
}

#[test]
fn trapezoid_roots_match_direct_formula() {
    // 2β(1/2; 1+p, 1+p) = β(1+p, 1+p) and the fractional trapezoid kernel at α = 1 is the same constant
    let c = Curvature { at_x: 1.0, at_a: 1.0, at_b: 1.0, fourth_sup: None };
    for q in [1.5, 2.0, 3.0] {
        let conj = q / (q - 1.0);
        let p = EvalParams::new(0.0, 1.0, 0.5, 1.0, 1.0, 1.0, q).unwrap();
        let v = bound_rhs(BoundId::HolderTrapezoid, &BoundId::HolderTrapezoid.specialize(&p).unwrap(), &c).unwrap();
        let k = fracineq::specfun::beta(1.0 + conj, 1.0 + conj).unwrap();
        let expected = 0.5 * k.powf(1.0 / conj);
        assert!((v - expected).abs() <= 1e-13 * expected, "q={q}: {v} vs {expected}");
    }
}

#[test]
fn park_refuses_unrepresentable_values() {
    assert!(fracineq::kernels::park(4.0, 1000.0).is_err());
    assert!(fracineq::kernels::park(8.0, 4500.0).is_err());
    assert!(fracineq::kernels::park(4.0, 50.0).unwrap() > 0.0);
}

fn curvature() -> impl Strategy<Value = Curvature> {
    (0.0f64..5.0, 0.0f64..5.0, 0.0f64..5.0).prop_map(|(at_x, at_a, at_b)| Curvature { at_x, at_a, at_b, fourth_sup: None })
}

proptest! {
    #[test]
    fn corollaries_agree_with_general_theorems(
        a in 0.0f64..1.0, w in 0.1f64..2.0, frac in 0.0f64..=1.0, lambda in 0.0f64..=1.0,
        alpha in 0.1f64..3.0, s in 0.05f64..=1.0, q in 1.0f64..4.0, c in curvature(),
    ) {
        let p = EvalParams::new(a, a + w, a + frac * w, lambda, alpha, s, q).unwrap();
        for id in BoundId::COROLLARIES {
            if id.is_holder() && q == 1.0 {
                continue;
            }
            let Ok(sp) = id.specialize(&p) else { continue };
            let direct = bound_rhs(id, &sp, &c).unwrap();
            let general = via_general_theorem(id, &sp, &c).unwrap().unwrap();
            prop_assert!((direct - general).abs() <= 1e-12 * direct.abs().max(1.0), "{} {} vs {}", id, direct, general);
        }
    }

    #[test]
    fn general_bounds_finite_and_nonnegative(
        a in 0.0f64..0.5, w in 0.05f64..1.0, frac in 0.0f64..=1.0, lambda in 0.0f64..=1.0,
        alpha in 0.1f64..3.0, s in 0.05f64..=1.0, q in 1.0001f64..4.0, c in curvature(),
    ) {
        let p = EvalParams::new(a, a + w, a + frac * w, lambda, alpha, s, q).unwrap();
        for id in [BoundId::PowerMean, BoundId::Holder] {
            let v = bound_rhs(id, &p, &c).unwrap();
            prop_assert!(v.is_finite() && v >= 0.0);
        }
    }

    #[test]
    fn bounds_hold_for_certified_families(
        a in 0.0f64..0.5, w in 0.05f64..1.0, frac in 0.0f64..=1.0, lambda in 0.0f64..=1.0,
        alpha in 0.1f64..3.0, s in 0.05f64..=1.0, q in 1.0f64..4.0,
    ) {
        let p = EvalParams::new(a, a + w, a + frac * w, lambda, alpha, s, q).unwrap();
        for label in [POWER_MATCH, CUBIC, EXPONENTIAL] {
            let fam = family(label, (0.0, 1.5), s, q).unwrap();
            for id in [BoundId::PowerMean, BoundId::Holder] {
                if id.is_holder() && q == 1.0 {
                    continue;
                }
                let r = check_inequality(&fam, &p, id).unwrap();
                prop_assert_eq!(r.status, Status::Holds, "{} {:?}", label, r);
            }
        }
    }

    #[test]
    fn classification_contract(margin in -1.0f64..1.0, tol in 1e-12f64..1e-6, err in 0.0f64..1.0) {
        let status = classify(margin, tol, err);
        if margin >= -tol {
            prop_assert_eq!(status, Status::Holds);
        } else if err <= margin.abs() / 2.0 {
            prop_assert_eq!(status, Status::Violated);
        } else {
            prop_assert_eq!(status, Status::Indeterminate);
        }
    }
}
