//! Curves built from finitely many uniform circular motions.
//!
//! A [`TrigCurve`] is `offset + Σ aₖ·(cos(fₖu + φₖ), sin(fₖu + φₖ))` with exact
//! rational frequencies `fₖ`. Negative frequencies run clockwise.

mod lift;
pub(crate) mod polyline;
pub mod presets;

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{CheckedMul, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Point2, Vector2};
use crate::scalar::{wrap_angle, Rational, Scalar};

pub use lift::Curve3D;
pub use polyline::Polyline;

/// One uniform circular motion.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CircularComponent<F: Scalar> {
    /// Angular velocity in radians per unit of `u`.
    pub frequency: Rational,
    pub amplitude: F,
    /// Initial angle in radians.
    pub phase: F,
}

impl<F: Scalar> CircularComponent<F> {
    pub fn new(frequency: Rational, amplitude: F, phase: F) -> Self {
        Self {
            frequency,
            amplitude,
            phase,
        }
    }

    /// Builds the component `c·e^{i·f·u}` from the complex coefficient `c = re + i·im`.
    pub fn from_complex(frequency: Rational, re: F, im: F) -> Self {
        Self::new(frequency, re.hypot(im), wrap_angle(im.atan2(re)))
    }

    /// Complex coefficient `amplitude·e^{i·phase}`.
    pub fn coefficient(&self) -> Point2<F> {
        Point2::polar(self.amplitude, self.phase)
    }

    #[inline]
    fn angle(&self, u: F) -> F {
        F::from_rational(&self.frequency) * u + self.phase
    }

    #[inline]
    pub fn position(&self, u: F) -> Point2<F> {
        Point2::polar(self.amplitude, self.angle(u))
    }

    #[inline]
    pub fn velocity(&self, u: F) -> Vector2<F> {
        let (s, c) = self.angle(u).sin_cos();
        let k = self.amplitude * F::from_rational(&self.frequency);
        Point2::new(-k * s, k * c)
    }
}

/// A canonical finite sum of circular motions plus a constant offset.
///
/// Invariants: frequencies strictly increasing, none equal to zero, every
/// amplitude at least `F::AMPLITUDE_EPS`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrigCurve<F: Scalar> {
    components: Vec<CircularComponent<F>>,
    offset: Point2<F>,
}

/// Merges equal frequencies, folds frequency zero into the offset and drops
/// vanishing amplitudes.
pub fn canonicalize<F: Scalar>(
    components: impl IntoIterator<Item = CircularComponent<F>>,
    offset: Point2<F>,
) -> TrigCurve<F> {
    let mut groups: BTreeMap<Rational, Vec<CircularComponent<F>>> = BTreeMap::new();
    for c in components {
        groups.entry(c.frequency).or_default().push(c);
    }

    let mut offset = offset;
    let mut out = Vec::with_capacity(groups.len());
    for (frequency, group) in groups {
        let merged = match group.as_slice() {
            [single] if single.amplitude >= F::zero() => {
                CircularComponent::new(frequency, single.amplitude, wrap_angle(single.phase))
            }
            _ => {
                let sum = group
                    .iter()
                    .fold(Point2::zero(), |acc, c| acc + c.coefficient());
                CircularComponent::from_complex(frequency, sum.x, sum.y)
            }
        };
        if frequency.is_zero() {
            offset += merged.coefficient();
        } else if merged.amplitude >= F::AMPLITUDE_EPS {
            out.push(merged);
        }
    }
    TrigCurve {
        components: out,
        offset,
    }
}

/// Evaluates a raw, possibly non-canonical, component list.
pub fn evaluate_raw<F: Scalar>(
    components: &[CircularComponent<F>],
    offset: Point2<F>,
    u: F,
) -> Point2<F> {
    components.iter().fold(offset, |acc, c| acc + c.position(u))
}

/// Greatest positive rational `g` with every frequency an integer multiple of `g`.
///
/// Fails when the exact arithmetic leaves the `i64` range, which is how
/// incommensurable (float-derived) ratios show up once rationalized.
pub(crate) fn frequency_base(frequencies: impl IntoIterator<Item = Rational>) -> Result<Rational> {
    let mut num_gcd: i64 = 0;
    let mut den_lcm: i64 = 1;
    let mut any = false;
    for f in frequencies {
        if f.is_zero() {
            continue;
        }
        any = true;
        num_gcd = num_gcd.gcd(f.numer());
        let g = den_lcm.gcd(f.denom());
        den_lcm = (den_lcm / g).checked_mul(*f.denom()).ok_or_else(|| {
            Error::NonCommensurable(format!("common denominator of {f} overflows"))
        })?;
    }
    if !any {
        return Err(Error::EmptyCurve);
    }
    Ok(Rational::new(num_gcd, den_lcm))
}

impl<F: Scalar> TrigCurve<F> {
    /// Canonicalizing constructor; see [`canonicalize`].
    pub fn new(
        components: impl IntoIterator<Item = CircularComponent<F>>,
        offset: Point2<F>,
    ) -> Self {
        canonicalize(components, offset)
    }

    pub fn constant(offset: Point2<F>) -> Self {
        Self {
            components: Vec::new(),
            offset,
        }
    }

    pub fn components(&self) -> &[CircularComponent<F>] {
        &self.components
    }

    pub fn offset(&self) -> Point2<F> {
        self.offset
    }

    pub fn is_constant(&self) -> bool {
        self.components.is_empty()
    }

    pub fn frequencies(&self) -> impl Iterator<Item = Rational> + '_ {
        self.components.iter().map(|c| c.frequency)
    }

    pub fn amplitude_sum(&self) -> F {
        self.components
            .iter()
            .fold(F::zero(), |acc, c| acc + c.amplitude)
    }

    pub fn evaluate(&self, u: F) -> Point2<F> {
        evaluate_raw(&self.components, self.offset, u)
    }

    pub fn velocity(&self, u: F) -> Vector2<F> {
        self.components
            .iter()
            .fold(Point2::zero(), |acc, c| acc + c.velocity(u))
    }

    /// Smallest `T > 0` with `z(u + T) = z(u)`, i.e. `2π / g` for the rational
    /// gcd `g` of all frequencies.
    pub fn period(&self) -> Result<F> {
        let g = self.frequency_base()?;
        Ok(F::two_pi() / F::from_rational(&g))
    }

    /// Rational gcd of the frequencies.
    pub fn frequency_base(&self) -> Result<Rational> {
        if self.is_constant() {
            return Err(Error::NonPeriodic("constant curve has no period".into()));
        }
        frequency_base(self.frequencies().map(|f| f.abs()))
    }

    /// Global minimum of the speed `|z'(u)|` over one period.
    ///
    /// Samples 4096 parameters, then refines the lowest local minima by
    /// golden-section search to a parameter tolerance of 1e-10.
    pub fn min_speed(&self) -> Result<(F, F)> {
        const SAMPLES: usize = 4096;
        const REFINE: usize = 16;
        let period = self.period()?;
        let step = period / F::count(SAMPLES);
        let speed = |u: F| self.velocity(u).norm();
        let speeds: Vec<F> = (0..SAMPLES).map(|i| speed(step * F::count(i))).collect();

        let mut minima: Vec<usize> = (0..SAMPLES)
            .filter(|&i| {
                let prev = speeds[(i + SAMPLES - 1) % SAMPLES];
                let next = speeds[(i + 1) % SAMPLES];
                speeds[i] <= prev && speeds[i] <= next
            })
            .collect();
        if minima.is_empty() {
            minima.push(0);
        }
        minima.sort_by(|&a, &b| {
            speeds[a]
                .partial_cmp(&speeds[b])
                .unwrap_or(std::cmp::Ordering::Equal)
        });
        minima.truncate(REFINE);

        let tol = F::lit(1e-10);
        let mut best = (F::zero(), F::infinity());
        for i in minima {
            let centre = step * F::count(i);
            let (u, s) = golden_section(speed, centre - step, centre + step, tol);
            let (u, s) = if speeds[i] < s {
                (centre, speeds[i])
            } else {
                (u, s)
            };
            if s < best.1 {
                best = (u, s);
            }
        }
        best.0 = wrap_param(best.0, period);
        Ok(best)
    }

    /// Samples `n ≥ 2` equally spaced parameters over `[u0, u1]`, both ends included.
    pub fn sample(&self, n: usize, u0: F, u1: F) -> Result<Polyline<F, Point2<F>>> {
        let params = sample_params(n, u0, u1)?;
        let points: Vec<Point2<F>> = params.iter().map(|&u| self.evaluate(u)).collect();
        let closed = spans_whole_periods(self.period().ok(), u0, u1)
            && points[0].distance(points[n - 1]) < F::CLOSED_TOL;
        Polyline::new(points, params, closed)
    }

    /// One full period starting at `u = 0`.
    pub fn sample_period(&self, n: usize) -> Result<Polyline<F, Point2<F>>> {
        let period = self.period()?;
        self.sample(n, F::zero(), period)
    }

    /// Multiplies every frequency by `factor`; geometry is unchanged for `factor > 0`.
    pub fn scale_frequencies(&self, factor: Rational) -> Result<Self> {
        if factor.is_zero() {
            return Err(Error::InvalidParam(
                "frequency scale must be nonzero".into(),
            ));
        }
        let components = self
            .components
            .iter()
            .map(|c| {
                c.frequency
                    .checked_mul(&factor)
                    .map(|frequency| CircularComponent { frequency, ..*c })
                    .ok_or_else(|| Error::NonCommensurable("frequency scaling overflows".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(canonicalize(components, self.offset))
    }

    /// Adds a constant phase to every component; equivalent to a time shift
    /// only when a single component is present.
    pub fn shift_phases(&self, delta: F) -> Self {
        let components = self.components.iter().map(|c| CircularComponent {
            phase: c.phase + delta,
            ..*c
        });
        canonicalize(components, self.offset)
    }

    /// Rotates the whole curve, offset included, about the origin.
    pub fn rotate(&self, angle: F) -> Self {
        self.shift_phases(angle)
            .with_offset(self.offset.rotate(angle))
    }

    pub fn with_offset(mut self, offset: Point2<F>) -> Self {
        self.offset = offset;
        self
    }

    /// Pointwise sum of two curves.
    pub fn add(&self, other: &Self) -> Self {
        canonicalize(
            self.components
                .iter()
                .chain(other.components.iter())
                .copied(),
            self.offset + other.offset,
        )
    }

    /// Pointwise negation, `-z(u)`.
    pub fn negate(&self) -> Self {
        let components = self.components.iter().map(|c| CircularComponent {
            phase: c.phase + F::PI(),
            ..*c
        });
        canonicalize(components, -self.offset)
    }

    /// Largest distance between any two sampled points of one period.
    pub fn diameter_estimate(&self, samples: usize) -> F {
        let Ok(line) = self.sample_period(samples.max(2)) else {
            return F::zero();
        };
        let pts = line.points();
        let mut d = F::zero();
        for (i, a) in pts.iter().enumerate() {
            for b in &pts[i + 1..] {
                d = d.max(a.distance(*b));
            }
        }
        d
    }
}

pub(crate) fn sample_params<F: Scalar>(n: usize, u0: F, u1: F) -> Result<Vec<F>> {
    if n < 2 {
        return Err(Error::InvalidParam(format!(
            "need at least 2 samples, got {n}"
        )));
    }
    if u0.partial_cmp(&u1) != Some(std::cmp::Ordering::Less) {
        return Err(Error::InvalidParam(format!(
            "empty parameter range [{u0}, {u1}]"
        )));
    }
    let span = u1 - u0;
    let last = F::count(n - 1);
    let mut params: Vec<F> = (0..n).map(|i| u0 + span * (F::count(i) / last)).collect();
    params[n - 1] = u1;
    Ok(params)
}

fn spans_whole_periods<F: Scalar>(period: Option<F>, u0: F, u1: F) -> bool {
    let Some(period) = period else {
        return false;
    };
    let turns = (u1 - u0) / period;
    turns >= F::one() - F::CLOSED_TOL
        && (turns - turns.round()).abs() <= F::CLOSED_TOL * turns.max(F::one())
}

fn wrap_param<F: Scalar>(u: F, period: F) -> F {
    let w = u % period;
    if w < F::zero() {
        w + period
    } else {
        w
    }
}

fn golden_section<F: Scalar>(f: impl Fn(F) -> F, mut a: F, mut b: F, tol: F) -> (F, F) {
    let inv_phi = F::lit((5f64.sqrt() - 1.0) / 2.0);
    let mut c = b - (b - a) * inv_phi;
    let mut d = a + (b - a) * inv_phi;
    let (mut fc, mut fd) = (f(c), f(d));
    while (b - a).abs() > tol {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - (b - a) * inv_phi;
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + (b - a) * inv_phi;
            fd = f(d);
        }
    }
    let u = (a + b) / F::lit(2.0);
    (u, f(u))
}
