mod common;

use std::f64::consts::TAU;

use common::{diameter, hausdorff, random_curve};
use orbitloom_core::presets::{eq3, satellite};
use orbitloom_core::symmetry::{
    detect_order, fundamental_arc, rotated_copies, verify_order, SymmetryOrder,
};
use orbitloom_core::{Point2, Rational, TrigCurve};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn int(n: i64) -> Rational {
    Rational::from_integer(n)
}

fn arb_curve() -> impl Strategy<Value = TrigCurve<f64>> {
    any::<u64>().prop_map(|seed| random_curve(&mut ChaCha8Rng::seed_from_u64(seed)))
}

#[test]
fn five_fold_sample_is_rotation_invariant() {
    let c = eq3(int(6), int(14), 1.0).unwrap();
    let line = c.sample(2048, 0.0, TAU).unwrap();
    let pts = line.points().to_vec();
    let rotated: Vec<_> = pts.iter().map(|p| p.rotate(TAU / 5.0)).collect();
    let d = hausdorff(std::slice::from_ref(&pts), &[rotated]);
    assert!(d < 1e-3 * diameter(&pts), "{d}");
}

#[test]
fn fundamental_arc_tiles_full_curve() {
    let c = eq3(int(6), int(14), 1.0).unwrap();
    let full = c.sample(2001, 0.0, TAU).unwrap().points().to_vec();
    let diam = diameter(&full);

    let arc = fundamental_arc(&c, 5, 401).unwrap();
    let copies: Vec<Vec<Point2<f64>>> = rotated_copies(&arc, 5)
        .iter()
        .map(|l| l.points().to_vec())
        .collect();
    let d = hausdorff(&copies, std::slice::from_ref(&full));
    assert!(d < 1e-6 * diam, "order 5: {d}");

    let arc = fundamental_arc(&c, 7, 401).unwrap();
    let copies: Vec<Vec<Point2<f64>>> = rotated_copies(&arc, 7)
        .iter()
        .map(|l| l.points().to_vec())
        .collect();
    let d = hausdorff(&copies, std::slice::from_ref(&full));
    assert!(d > 0.01 * diam, "order 7: {d}");

    let whole = fundamental_arc(&c, 1, 2001).unwrap();
    assert_eq!(whole.points(), &full[..]);
}

#[test]
fn detected_order_is_maximal_on_generic_set() {
    let curves = [
        eq3(int(6), int(14), 1.0).unwrap(),
        eq3(int(10), int(14), 1.0).unwrap(),
        satellite(),
    ];
    for c in &curves {
        let order = detect_order(c).unwrap().order.finite().unwrap();
        for k in 2..=4 {
            let v = verify_order(c, k * order, 1024, 1e-9);
            assert!(!v.ok, "order {order}·{k} should fail");
        }
    }
}

#[test]
fn satellite_brute_force_rotation() {
    // Independent of the shift formula: every rotated sample lies on the curve.
    let c = satellite::<f64>();
    let full = c.sample(8001, 0.0, TAU).unwrap().points().to_vec();
    let rotated: Vec<_> = full
        .iter()
        .step_by(7)
        .map(|p| p.rotate(TAU / 11.0))
        .collect();
    let worst = rotated
        .iter()
        .map(|&p| common::distance_to_lines(p, std::slice::from_ref(&full)))
        .fold(0.0, f64::max);
    assert!(worst < 1e-4, "{worst}");
    let off: Vec<_> = full
        .iter()
        .step_by(7)
        .map(|p| p.rotate(TAU / 10.0))
        .collect();
    let worst = off
        .iter()
        .map(|&p| common::distance_to_lines(p, std::slice::from_ref(&full)))
        .fold(0.0, f64::max);
    assert!(worst > 1e-2, "{worst}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn detected_order_verifies(c in arb_curve()) {
        let report = detect_order(&c).unwrap();
        let n = report.order.finite().unwrap();
        prop_assert!(report.verified);
        prop_assert!(verify_order(&c, n, 1024, 1e-9).ok);
    }

    #[test]
    fn shift_rotation_identity(c in arb_curve()) {
        let report = detect_order(&c).unwrap();
        let period = c.period().unwrap();
        for i in 0..1024 {
            let u = period * i as f64 / 1024.0;
            let lhs = c.evaluate(u + report.param_shift);
            let rhs = c.evaluate(u).rotate(report.rotation_angle);
            prop_assert!(lhs.distance(rhs) <= 1e-9);
        }
    }

    #[test]
    fn order_survives_frequency_scaling(c in arb_curve(), num in 1i64..7, den in 1i64..7) {
        let scaled = c.scale_frequencies(Rational::new(num, den)).unwrap();
        prop_assert_eq!(detect_order(&c).unwrap().order, detect_order(&scaled).unwrap().order);
    }

    #[test]
    fn order_survives_global_rotation(c in arb_curve(), angle in 0.0f64..TAU) {
        prop_assert_eq!(detect_order(&c).unwrap().order, detect_order(&c.rotate(angle)).unwrap().order);
    }

    #[test]
    fn scaled_frequencies_trace_same_set(c in arb_curve(), num in 1i64..5, den in 1i64..5) {
        let scaled = c.scale_frequencies(Rational::new(num, den)).unwrap();
        let a = c.sample_period(1500).unwrap();
        let b = scaled.sample_period(1500).unwrap();
        // sample parameters correspond exactly, so compare pointwise
        for (p, q) in a.points().iter().zip(b.points()) {
            prop_assert!(p.distance(*q) <= 1e-9);
        }
    }
}

#[test]
fn circle_reports_infinite() {
    let c = orbitloom_core::presets::unit_orbit::<f64>();
    assert_eq!(detect_order(&c).unwrap().order, SymmetryOrder::Infinite);
}
