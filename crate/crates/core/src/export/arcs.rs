use serde::Serialize;

use crate::curve::{Polyline, TrigCurve};
use crate::error::{Error, Result};
use crate::geometry::Point2;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Arc<F: Scalar> {
    pub polyline: Polyline<F, Point2<F>>,
    pub color_index: usize,
}

/// A period split into equal parameter intervals, one colour per piece.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ArcSet<F: Scalar> {
    pub arcs: Vec<Arc<F>>,
    pub order_used: u64,
}

/// Cuts one period into `m` arcs over `[k·T/m, (k+1)·T/m]`, each sampled at
/// `samples_per_arc` points, coloured `k mod palette_size`.
///
/// With `m` equal to the symmetry order every arc is a rotated copy of the
/// first; any other `m` still gives a valid multicolour drawing.
pub fn partition_arcs<F: Scalar>(
    curve: &TrigCurve<F>,
    m: u64,
    palette_size: usize,
    samples_per_arc: usize,
) -> Result<ArcSet<F>> {
    if m == 0 {
        return Err(Error::InvalidParam("arc count must be at least 1".into()));
    }
    if palette_size == 0 {
        return Err(Error::InvalidParam("palette must not be empty".into()));
    }
    let period = curve.period()?;
    let width = period / F::lit(m as f64);
    let arcs = (0..m)
        .map(|k| {
            let start = width * F::lit(k as f64);
            let end = if k + 1 == m {
                period
            } else {
                width * F::lit((k + 1) as f64)
            };
            Ok(Arc {
                polyline: curve.sample(samples_per_arc, start, end)?,
                color_index: (k as usize) % palette_size,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ArcSet {
        arcs,
        order_used: m,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::presets::eq3;
    use crate::scalar::Rational;
    use crate::symmetry::detect_order;

    fn curve() -> TrigCurve<f64> {
        eq3(Rational::from_integer(6), Rational::from_integer(14), 1.0).unwrap()
    }

    #[test]
    fn single_arc_is_full_curve() {
        let c = curve();
        let set = partition_arcs(&c, 1, 12, 200).unwrap();
        assert_eq!(set.arcs.len(), 1);
        assert_eq!(set.arcs[0].polyline, c.sample_period(200).unwrap());
    }

    #[test]
    fn arcs_are_contiguous() {
        let set = partition_arcs(&curve(), 7, 3, 50).unwrap();
        assert_eq!(set.arcs.len(), 7);
        for w in set.arcs.windows(2) {
            let end = *w[0].polyline.points().last().unwrap();
            let start = w[1].polyline.points()[0];
            assert!(end.distance(start) <= 1e-9);
        }
        let colors: Vec<_> = set.arcs.iter().map(|a| a.color_index).collect();
        assert_eq!(colors, vec![0, 1, 2, 0, 1, 2, 0]);
    }

    #[test]
    fn symmetric_partition_is_rotated_copies() {
        let c = curve();
        let report = detect_order(&c).unwrap();
        let set = partition_arcs(&c, 5, 12, 300).unwrap();
        let first = &set.arcs[0].polyline;
        for (k, arc) in set.arcs.iter().enumerate() {
            let rotated = first.rotated(report.rotation_angle * k as f64);
            let worst = arc
                .polyline
                .points()
                .iter()
                .zip(rotated.points())
                .map(|(a, b)| a.distance(*b))
                .fold(0.0, f64::max);
            assert!(worst <= 1e-9, "arc {k}: {worst}");
        }
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(partition_arcs(&curve(), 0, 12, 10).is_err());
        assert!(partition_arcs(&curve(), 3, 0, 10).is_err());
        assert!(partition_arcs(&TrigCurve::<f64>::constant(Point2::zero()), 3, 12, 10).is_err());
    }
}
