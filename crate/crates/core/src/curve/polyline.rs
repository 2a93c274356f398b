use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::Point2;
use crate::scalar::Scalar;

/// Discrete samples of a curve together with their parameters.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Polyline<F: Scalar, P = Point2<F>> {
    params: Vec<F>,
    points: Vec<P>,
    closed: bool,
}

impl<F: Scalar, P> Polyline<F, P> {
    /// Requires at least two points, one parameter per point, and strictly
    /// increasing parameters.
    pub fn new(points: Vec<P>, params: Vec<F>, closed: bool) -> Result<Self> {
        if points.len() != params.len() {
            return Err(Error::InvalidParam(format!(
                "{} points but {} parameters",
                points.len(),
                params.len()
            )));
        }
        if points.len() < 2 {
            return Err(Error::InvalidParam(
                "a polyline needs at least 2 points".into(),
            ));
        }
        if params
            .windows(2)
            .any(|w| w[0].partial_cmp(&w[1]) != Some(std::cmp::Ordering::Less))
        {
            return Err(Error::InvalidParam(
                "parameters must be strictly increasing".into(),
            ));
        }
        Ok(Self {
            params,
            points,
            closed,
        })
    }

    pub fn points(&self) -> &[P] {
        &self.points
    }

    pub fn params(&self) -> &[F] {
        &self.params
    }

    pub fn closed(&self) -> bool {
        self.closed
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Applies `f` to every point, keeping parameters and the closed flag.
    pub fn map_points<Q>(&self, f: impl FnMut(&P) -> Q) -> Polyline<F, Q> {
        Polyline {
            params: self.params.clone(),
            points: self.points.iter().map(f).collect(),
            closed: self.closed,
        }
    }
}

impl<F: Scalar> Polyline<F, Point2<F>> {
    /// Rotated copy about the origin.
    pub fn rotated(&self, angle: F) -> Self {
        self.map_points(|p| p.rotate(angle))
    }

    /// Axis-aligned bounding box as `(min, max)`.
    pub fn bounds(&self) -> (Point2<F>, Point2<F>) {
        bounds(self.points.iter().copied())
    }
}

pub(crate) fn bounds<F: Scalar>(
    points: impl IntoIterator<Item = Point2<F>>,
) -> (Point2<F>, Point2<F>) {
    let mut lo = Point2::new(F::infinity(), F::infinity());
    let mut hi = Point2::new(F::neg_infinity(), F::neg_infinity());
    for p in points {
        lo = Point2::new(lo.x.min(p.x), lo.y.min(p.y));
        hi = Point2::new(hi.x.max(p.x), hi.y.max(p.y));
    }
    (lo, hi)
}
