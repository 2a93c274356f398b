#![allow(dead_code)]

use orbitloom_core::{CircularComponent, Point2, Rational, TrigCurve};
use rand::Rng;

fn segment_distance(p: Point2<f64>, a: Point2<f64>, b: Point2<f64>) -> f64 {
    let ab = b - a;
    let len2 = ab.dot(ab);
    if len2 == 0.0 {
        return p.distance(a);
    }
    let t = ((p - a).dot(ab) / len2).clamp(0.0, 1.0);
    p.distance(a + ab * t)
}

/// Distance from `p` to the nearest segment of any of `lines`.
pub fn distance_to_lines(p: Point2<f64>, lines: &[Vec<Point2<f64>>]) -> f64 {
    lines
        .iter()
        .flat_map(|l| l.windows(2).map(move |w| segment_distance(p, w[0], w[1])))
        .fold(f64::INFINITY, f64::min)
}

/// Symmetric Hausdorff distance between two unions of polylines, measured
/// from vertices to segments.
pub fn hausdorff(a: &[Vec<Point2<f64>>], b: &[Vec<Point2<f64>>]) -> f64 {
    let one_way = |from: &[Vec<Point2<f64>>], to: &[Vec<Point2<f64>>]| {
        from.iter()
            .flatten()
            .map(|&p| distance_to_lines(p, to))
            .fold(0.0, f64::max)
    };
    one_way(a, b).max(one_way(b, a))
}

pub fn diameter(points: &[Point2<f64>]) -> f64 {
    let mut d: f64 = 0.0;
    for (i, a) in points.iter().enumerate() {
        for b in &points[i + 1..] {
            d = d.max(a.distance(*b));
        }
    }
    d
}

/// Random curve with 2–4 components, small rational frequencies and
/// generic amplitudes and phases.
pub fn random_curve(rng: &mut impl Rng) -> TrigCurve<f64> {
    loop {
        let n = rng.gen_range(2..=4);
        let den = rng.gen_range(1..=3);
        let comps = (0..n).map(|_| {
            CircularComponent::new(
                Rational::new(rng.gen_range(-15..=15), den),
                rng.gen_range(0.1..1.5),
                rng.gen_range(0.0..std::f64::consts::TAU),
            )
        });
        let c = TrigCurve::new(comps.collect::<Vec<_>>(), Point2::zero());
        if c.components().len() >= 2 {
            return c;
        }
    }
}
