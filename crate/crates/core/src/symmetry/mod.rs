//! Rotational symmetry of trigonometric curves.
//!
//! Write the frequencies as `fₖ = g·nₖ` with integer `nₖ` and `gcd(nₖ) = 1`.
//! If every `nₖ` is congruent to `n₀` modulo `d`, shifting the parameter by
//! `2π/(g·d)` multiplies every term by the same unit complex number
//! `e^{2πi·n₀/d}`, so the curve is invariant under that rotation. Since
//! `gcd(n₀, d) = 1`, the rotation generates the full cyclic group of order
//! `d`. The largest such `d` is the gcd of the pairwise differences.

mod rationalize;

use num_integer::Integer;
use num_traits::Signed;
use serde::{Serialize, Serializer};

use crate::curve::{Polyline, TrigCurve};
use crate::error::{Error, Result};
use crate::geometry::Point2;
use crate::scalar::{Rational, Scalar};

pub use rationalize::rationalize;

/// Order of the rotation group of a curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymmetryOrder {
    Finite(u64),
    /// Only for a single circle centred at the origin.
    Infinite,
}

impl SymmetryOrder {
    pub fn finite(self) -> Option<u64> {
        match self {
            SymmetryOrder::Finite(n) => Some(n),
            SymmetryOrder::Infinite => None,
        }
    }
}

impl std::fmt::Display for SymmetryOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SymmetryOrder::Finite(n) => write!(f, "{n}"),
            SymmetryOrder::Infinite => f.write_str("infinite"),
        }
    }
}

impl Serialize for SymmetryOrder {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            SymmetryOrder::Finite(n) => s.serialize_u64(*n),
            SymmetryOrder::Infinite => s.serialize_str("infinite"),
        }
    }
}

/// Integer normal form of a curve's frequencies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedFrequencies {
    /// Greatest rational dividing every frequency.
    pub base: Rational,
    /// `fₖ / base` in component order; a trailing `0` stands for a nonzero offset.
    pub multiples: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SymmetryReport<F: Scalar> {
    pub order: SymmetryOrder,
    /// Rotation realised by advancing the parameter by `param_shift`.
    pub rotation_angle: F,
    pub param_shift: F,
    pub reduced_frequencies: Vec<i64>,
    pub verified: bool,
    pub max_residual: F,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Verification<F: Scalar> {
    pub ok: bool,
    pub max_residual: F,
}

fn has_offset<F: Scalar>(curve: &TrigCurve<F>) -> bool {
    curve.offset().norm() >= F::AMPLITUDE_EPS
}

pub fn reduced_frequencies<F: Scalar>(curve: &TrigCurve<F>) -> Result<ReducedFrequencies> {
    if curve.is_constant() {
        return Err(Error::EmptyCurve);
    }
    let base = crate::curve::frequency_base(curve.frequencies().map(|f| f.abs()))?;
    let mut multiples = curve
        .frequencies()
        .map(|f| {
            let m = f / base;
            if m.is_integer() {
                Ok(m.to_integer())
            } else {
                Err(Error::NonCommensurable(format!(
                    "{f} is not a multiple of {base}"
                )))
            }
        })
        .collect::<Result<Vec<i64>>>()?;
    if has_offset(curve) {
        multiples.push(0);
    }
    Ok(ReducedFrequencies { base, multiples })
}

/// Symmetry order from the harmonic structure, checked numerically at 1024
/// parameters.
pub fn detect_order<F: Scalar>(curve: &TrigCurve<F>) -> Result<SymmetryReport<F>> {
    let reduced = reduced_frequencies(curve)?;
    let multiples = reduced.multiples;
    let n0 = multiples[0];

    if multiples.len() == 1 {
        return Ok(SymmetryReport {
            order: SymmetryOrder::Infinite,
            rotation_angle: F::zero(),
            param_shift: F::zero(),
            reduced_frequencies: multiples,
            verified: true,
            max_residual: F::zero(),
        });
    }

    let d = multiples
        .iter()
        .fold(0i64, |acc, &n| acc.gcd(&(n - n0)))
        .unsigned_abs();
    let period = F::two_pi() / F::from_rational(&reduced.base);
    let param_shift = period / F::lit(d as f64);
    let rotation_angle = F::two_pi() * F::lit(n0.rem_euclid(d as i64) as f64) / F::lit(d as f64);
    let check = verify_order(curve, d, 1024, default_tolerance(curve));

    Ok(SymmetryReport {
        order: SymmetryOrder::Finite(d),
        rotation_angle,
        param_shift,
        reduced_frequencies: multiples,
        verified: check.ok,
        max_residual: check.max_residual,
    })
}

/// `F::VERIFY_TOL` scaled by the curve's size when it exceeds unity.
pub fn default_tolerance<F: Scalar>(curve: &TrigCurve<F>) -> F {
    F::VERIFY_TOL * (curve.amplitude_sum() + curve.offset().norm()).max(F::one())
}

/// Checks `z(u + k·T/n) = R(2π/n)·z(u)` at `samples` parameters over one period.
///
/// `k` is the inverse of `n₀` modulo `n`, the shift that realises the rotation
/// whenever `n` divides the detected order. When no inverse exists no shift can
/// realise it, and `k = 1` is used so the residual reports the mismatch.
pub fn verify_order<F: Scalar>(
    curve: &TrigCurve<F>,
    n: u64,
    samples: usize,
    tol: F,
) -> Verification<F> {
    if n == 0 || samples == 0 {
        return Verification {
            ok: false,
            max_residual: F::infinity(),
        };
    }
    let angle = F::two_pi() / F::lit(n as f64);
    if curve.is_constant() {
        let p = curve.offset();
        let r = p.distance(p.rotate(angle));
        return Verification {
            ok: r <= tol,
            max_residual: r,
        };
    }
    let Ok(reduced) = reduced_frequencies(curve) else {
        return Verification {
            ok: false,
            max_residual: F::infinity(),
        };
    };
    let period = F::two_pi() / F::from_rational(&reduced.base);
    let k = mod_inverse(reduced.multiples[0], n).unwrap_or(1 % n);
    let shift = period * F::lit(k as f64) / F::lit(n as f64);

    let step = period / F::count(samples);
    let mut worst = F::zero();
    for i in 0..samples {
        let u = step * F::count(i);
        let r = curve
            .evaluate(u + shift)
            .distance(curve.evaluate(u).rotate(angle));
        worst = worst.max(r);
    }
    Verification {
        ok: worst <= tol,
        max_residual: worst,
    }
}

fn mod_inverse(a: i64, n: u64) -> Option<u64> {
    let n = n as i64;
    let e = a.rem_euclid(n).extended_gcd(&n);
    (e.gcd == 1).then(|| e.x.rem_euclid(n) as u64)
}

/// The curve over `[0, T/n]`; its `n` rotated copies tile the full curve when
/// `n` divides the symmetry order.
pub fn fundamental_arc<F: Scalar>(
    curve: &TrigCurve<F>,
    n: u64,
    samples: usize,
) -> Result<Polyline<F, Point2<F>>> {
    if n == 0 {
        return Err(Error::InvalidParam("arc count must be at least 1".into()));
    }
    let period = curve.period()?;
    curve.sample(samples, F::zero(), period / F::lit(n as f64))
}

/// `n` copies of `arc`, the `j`-th rotated by `j·2π/n`.
pub fn rotated_copies<F: Scalar>(
    arc: &Polyline<F, Point2<F>>,
    n: u64,
) -> Vec<Polyline<F, Point2<F>>> {
    (0..n)
        .map(|j| arc.rotated(F::two_pi() * F::lit(j as f64) / F::lit(n as f64)))
        .collect()
}
