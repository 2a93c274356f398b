//! Named curve builders.

use num_traits::{One, Zero};

use super::{canonicalize, CircularComponent, TrigCurve};
use crate::error::{Error, Result};
use crate::geometry::Point2;
use crate::scalar::{Rational, Scalar};

/// `(cos u, sin u)`: a body at distance 1 completing one turn per `2π`.
pub fn unit_orbit<F: Scalar>() -> TrigCurve<F> {
    TrigCurve::new(
        [CircularComponent::new(Rational::one(), F::one(), F::zero())],
        Point2::zero(),
    )
}

/// `r·(cos(u/h), sin(u/h))`: a body at radius `r` whose year lasts `h` units.
pub fn second_planet<F: Scalar>(r: F, h: Rational) -> Result<TrigCurve<F>> {
    check_radius(r, "r")?;
    if h.is_zero() {
        return Err(Error::InvalidParam("year length h must be nonzero".into()));
    }
    Ok(TrigCurve::new(
        [CircularComponent::new(h.recip(), r, F::zero())],
        Point2::zero(),
    ))
}

/// `(cos u, sin u) + ⅓(cos au, sin au) + ½(sin bu, c·cos bu)`.
///
/// The last term is not a single circular motion. Writing it as a complex
/// number, `sin θ + i·c·cos θ = (i(c−1)/2)·e^{iθ} + (i(c+1)/2)·e^{−iθ}`, so it
/// contributes a `+b` component of amplitude `|c−1|/4` and a `−b` component of
/// amplitude `|c+1|/4`, both with phase `±π/2`.
pub fn eq3<F: Scalar>(a: Rational, b: Rational, c: F) -> Result<TrigCurve<F>> {
    if !c.is_finite() {
        return Err(Error::InvalidParam(format!("c must be finite, got {c}")));
    }
    let quarter = F::lit(0.25);
    let components = [
        CircularComponent::new(Rational::one(), F::one(), F::zero()),
        CircularComponent::new(a, F::one() / F::lit(3.0), F::zero()),
        CircularComponent::from_complex(b, F::zero(), (c - F::one()) * quarter),
        CircularComponent::from_complex(-b, F::zero(), (c + F::one()) * quarter),
    ];
    Ok(canonicalize(components, Point2::zero()))
}

/// Three chained circular motions with the given radii and signed frequencies.
pub fn tricircular<F: Scalar>(
    r1: F,
    f1: Rational,
    r2: F,
    f2: Rational,
    r3: F,
    f3: Rational,
) -> Result<TrigCurve<F>> {
    for (r, name) in [(r1, "r1"), (r2, "r2"), (r3, "r3")] {
        check_radius(r, name)?;
    }
    Ok(TrigCurve::new(
        [(r1, f1), (r2, f2), (r3, f3)].map(|(r, f)| CircularComponent::new(f, r, F::zero())),
        Point2::zero(),
    ))
}

/// Planet at distance 1 with a satellite of radius 1/5 turning 12 times a year.
pub fn satellite<F: Scalar>() -> TrigCurve<F> {
    TrigCurve::new(
        [
            CircularComponent::new(Rational::one(), F::one(), F::zero()),
            CircularComponent::new(Rational::from_integer(12), F::lit(0.2), F::zero()),
        ],
        Point2::zero(),
    )
}

fn check_radius<F: Scalar>(r: F, name: &str) -> Result<()> {
    if r > F::zero() && r.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParam(format!(
            "{name} must be positive, got {r}"
        )))
    }
}
