//! Scalar abstraction shared by every numeric routine in the crate.
//!
//! Frequencies are always exact [`Rational`]s. Amplitudes, phases, coordinates
//! and tolerances use a floating scalar `F`, which is `f64` or `f32`.

use std::fmt::{Debug, Display, LowerExp};

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign, ToPrimitive};
use serde::Serialize;

/// Exact signed rational, always kept in lowest terms with a positive denominator.
pub type Rational = num_rational::Ratio<i64>;

/// Floating scalar used for geometry.
pub trait Scalar:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + NumAssign
    + Default
    + Debug
    + Display
    + LowerExp
    + Send
    + Sync
    + Serialize
    + 'static
{
    /// Amplitudes strictly below this are removed by canonicalization.
    const AMPLITUDE_EPS: Self;
    /// Default absolute tolerance for the shift-rotation symmetry check.
    const VERIFY_TOL: Self;
    /// Absolute tolerance for the `closed` flag of sampled polylines.
    const CLOSED_TOL: Self;

    /// Converts an `f64` literal. Never fails for the supported types.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable")
    }

    #[inline]
    fn from_rational(r: &Rational) -> Self {
        Self::lit(*r.numer() as f64 / *r.denom() as f64)
    }

    #[inline]
    fn count(n: usize) -> Self {
        Self::lit(n as f64)
    }

    #[inline]
    fn two_pi() -> Self {
        Self::TAU()
    }

    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().expect("float converts to f64")
    }
}

impl Scalar for f64 {
    const AMPLITUDE_EPS: Self = 1e-15;
    const VERIFY_TOL: Self = 1e-9;
    const CLOSED_TOL: Self = 1e-9;
}

// f32 carries ~7 significant digits; the f64 thresholds would be below its noise floor.
impl Scalar for f32 {
    const AMPLITUDE_EPS: Self = 1e-6;
    const VERIFY_TOL: Self = 1e-4;
    const CLOSED_TOL: Self = 1e-4;
}

/// Wraps an angle into `[0, 2π)`.
pub fn wrap_angle<F: Scalar>(angle: F) -> F {
    let tau = F::two_pi();
    let mut a = angle % tau;
    if a < F::zero() {
        a += tau;
    }
    if a >= tau {
        a = F::zero();
    }
    a
}
