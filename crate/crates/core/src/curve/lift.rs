use serde::Serialize;

use super::{sample_params, Polyline, TrigCurve};
use crate::error::Result;
use crate::geometry::{Point3, Vector3};
use crate::scalar::Scalar;

/// A planar curve lifted into space by a constant drift: `(x(u), y(u), 0) + u·drift`.
///
/// A drift of `(0, 0, 1)` turns the planar motion into a helix-like space curve;
/// a general drift models a centre moving along a straight line.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Curve3D<F: Scalar> {
    pub base: TrigCurve<F>,
    pub drift: Vector3<F>,
}

impl<F: Scalar> TrigCurve<F> {
    pub fn lift3d(&self, drift: Vector3<F>) -> Curve3D<F> {
        Curve3D {
            base: self.clone(),
            drift,
        }
    }
}

impl<F: Scalar> Curve3D<F> {
    pub fn new(base: TrigCurve<F>, drift: Vector3<F>) -> Self {
        Self { base, drift }
    }

    pub fn evaluate(&self, u: F) -> Point3<F> {
        self.base.evaluate(u).extend(F::zero()) + self.drift * u
    }

    pub fn velocity(&self, u: F) -> Vector3<F> {
        self.base.velocity(u).extend(F::zero()) + self.drift
    }

    pub fn is_planar(&self) -> bool {
        self.drift.is_zero()
    }

    pub fn sample(&self, n: usize, u0: F, u1: F) -> Result<Polyline<F, Point3<F>>> {
        let params = sample_params(n, u0, u1)?;
        let points: Vec<Point3<F>> = params.iter().map(|&u| self.evaluate(u)).collect();
        let closed = self.is_planar() && self.base.sample(2, u0, u1)?.closed();
        Polyline::new(points, params, closed)
    }
}
