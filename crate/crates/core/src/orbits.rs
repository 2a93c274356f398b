//! Coplanar circular orbits at constant angular velocity.
//!
//! Times are in terrestrial years and lengths in astronomical units
//! (1 AU = 149.6·10⁶ km). A curve parameter `u` corresponds to time `u / 2π`,
//! so the Earth's orbit is exactly `(cos u, sin u)`.

use std::io::Read;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::curve::{CircularComponent, TrigCurve};
use crate::error::{Error, Result};
use crate::geometry::{Point2, Point3, Vector3};
use crate::scalar::{Rational, Scalar};
use crate::symmetry::rationalize;

/// Earth's mean orbital radius in km.
pub const AU_KM: f64 = 149.6e6;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlanetRecord {
    pub name: String,
    pub orbit_radius_km: f64,
    pub period_years: f64,
}

impl PlanetRecord {
    pub fn radius_au(&self) -> f64 {
        self.orbit_radius_km / AU_KM
    }

    /// A single-link chain for this body around the Sun.
    pub fn chain<F: Scalar>(&self) -> Result<OrbitChain<F>> {
        OrbitChain::new(vec![OrbitLink::new(
            F::lit(self.radius_au()),
            F::lit(self.period_years),
        )])
    }
}

const PLANETS: [(&str, f64, f64); 8] = [
    ("Mercury", 57.91e6, 0.2408),
    ("Venus", 108.2e6, 0.6152),
    ("Earth", 149.6e6, 1.0),
    ("Mars", 227.9e6, 1.8808),
    ("Jupiter", 778.5e6, 11.862),
    ("Saturn", 1.434e9, 29.457),
    ("Uranus", 2.871e9, 84.018),
    ("Neptune", 4.495e9, 164.78),
];

/// The eight planets with mean distance to the Sun and sidereal period.
pub fn planet_table() -> Vec<PlanetRecord> {
    PLANETS
        .iter()
        .map(|&(name, orbit_radius_km, period_years)| PlanetRecord {
            name: name.to_string(),
            orbit_radius_km,
            period_years,
        })
        .collect()
}

/// Case-insensitive lookup in the built-in table.
pub fn lookup(name: &str) -> Option<PlanetRecord> {
    planet_table()
        .into_iter()
        .find(|p| p.name.eq_ignore_ascii_case(name))
}

/// Reads a JSON array of `{name, orbit_radius_km, period_years}` records.
pub fn load_planets(reader: impl Read) -> Result<Vec<PlanetRecord>> {
    let records: Vec<PlanetRecord> = serde_json::from_reader(reader)?;
    for r in &records {
        if !(r.orbit_radius_km > 0.0 && r.period_years > 0.0) {
            return Err(Error::InvalidParam(format!(
                "{}: radius and period must be positive",
                r.name
            )));
        }
    }
    Ok(records)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Kepler3Report {
    /// `(name, T² / a³)` with `a` in AU and `T` in years.
    pub ratios: Vec<(String, f64)>,
    pub max_deviation: f64,
}

/// Third-law consistency of a table: `T²/a³` should be 1 for every body.
pub fn kepler3_residuals(planets: &[PlanetRecord]) -> Kepler3Report {
    let ratios: Vec<(String, f64)> = planets
        .iter()
        .map(|p| {
            (
                p.name.clone(),
                p.period_years.powi(2) / p.radius_au().powi(3),
            )
        })
        .collect();
    let max_deviation = ratios
        .iter()
        .map(|(_, r)| (r - 1.0).abs())
        .fold(0.0, f64::max);
    Kepler3Report {
        ratios,
        max_deviation,
    }
}

/// Direction of travel along an orbit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Direction {
    #[serde(rename = "prograde", alias = "+1", alias = "1")]
    Prograde,
    #[serde(rename = "retrograde", alias = "-1")]
    Retrograde,
}

impl Direction {
    pub fn sign(self) -> i64 {
        match self {
            Direction::Prograde => 1,
            Direction::Retrograde => -1,
        }
    }

    pub fn from_sign(sign: i64) -> Result<Self> {
        match sign {
            1 => Ok(Direction::Prograde),
            -1 => Ok(Direction::Retrograde),
            _ => Err(Error::InvalidParam(format!(
                "direction must be +1 or -1, got {sign}"
            ))),
        }
    }
}

/// One body circling the previous one.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OrbitLink<F: Scalar> {
    pub radius: F,
    /// Years per revolution.
    pub period: F,
    pub direction: Direction,
    #[serde(default)]
    pub initial_phase: F,
}

impl<F: Scalar> OrbitLink<F> {
    pub fn new(radius: F, period: F) -> Self {
        Self {
            radius,
            period,
            direction: Direction::Prograde,
            initial_phase: F::zero(),
        }
    }

    pub fn reversed(self) -> Self {
        Self {
            direction: Direction::Retrograde,
            ..self
        }
    }

    pub fn with_phase(self, initial_phase: F) -> Self {
        Self {
            initial_phase,
            ..self
        }
    }

    fn angular_velocity(&self) -> F {
        F::lit(self.direction.sign() as f64) * F::two_pi() / self.period
    }
}

/// Orbiter → moon → planet → Sun: each link circles the end of the previous one.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OrbitChain<F: Scalar> {
    links: Vec<OrbitLink<F>>,
}

impl<F: Scalar> OrbitChain<F> {
    /// At least one link; every period positive and every radius non-negative.
    ///
    /// Zero radii are accepted and vanish after canonicalization.
    pub fn new(links: Vec<OrbitLink<F>>) -> Result<Self> {
        if links.is_empty() {
            return Err(Error::InvalidParam(
                "an orbit chain needs at least one link".into(),
            ));
        }
        for (i, l) in links.iter().enumerate() {
            if !(l.radius >= F::zero() && l.radius.is_finite()) {
                return Err(Error::InvalidParam(format!(
                    "link {i}: radius must be non-negative, got {}",
                    l.radius
                )));
            }
            if !(l.period > F::zero() && l.period.is_finite()) {
                return Err(Error::InvalidParam(format!(
                    "link {i}: period must be positive, got {}",
                    l.period
                )));
            }
            if !l.initial_phase.is_finite() {
                return Err(Error::InvalidParam(format!(
                    "link {i}: phase must be finite"
                )));
            }
        }
        Ok(Self { links })
    }

    pub fn links(&self) -> &[OrbitLink<F>] {
        &self.links
    }

    /// Position at time `t` years, summing the link vectors.
    pub fn ephemeris(&self, t: F) -> Point2<F> {
        self.links.iter().fold(Point2::zero(), |acc, l| {
            acc + Point2::polar(l.radius, l.angular_velocity() * t + l.initial_phase)
        })
    }

    /// Position at time `t` with the whole system carried along `drift` per year.
    pub fn ephemeris3(&self, t: F, drift: Vector3<F>) -> Point3<F> {
        self.ephemeris(t).extend(F::zero()) + drift * t
    }
}

/// How float periods become exact frequencies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RationalizationPolicy {
    /// Best approximation of each period with denominator at most this bound.
    MaxDenominator(u64),
}

impl Default for RationalizationPolicy {
    fn default() -> Self {
        RationalizationPolicy::MaxDenominator(1000)
    }
}

impl RationalizationPolicy {
    pub fn period(self, period: f64) -> Result<Rational> {
        let RationalizationPolicy::MaxDenominator(max_den) = self;
        let p = rationalize(period, max_den)?;
        if p.is_zero() || p < Rational::zero() {
            return Err(Error::InvalidParam(format!(
                "period {period} rounds to {p} at denominator {max_den}"
            )));
        }
        Ok(p)
    }
}

/// Curve in the parameter `u = 2π·t`: one component per link with frequency
/// `direction / period` after rationalizing the period.
pub fn chain_to_curve<F: Scalar>(
    chain: &OrbitChain<F>,
    policy: RationalizationPolicy,
) -> Result<TrigCurve<F>> {
    let components = chain
        .links
        .iter()
        .map(|l| {
            let period = policy.period(l.period.as_f64())?;
            let frequency = period.recip() * Rational::from_integer(l.direction.sign());
            Ok(CircularComponent::new(frequency, l.radius, l.initial_phase))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TrigCurve::new(components, Point2::zero()))
}

/// Position of `target` as seen from `observer`; `None` observes from the Sun.
pub fn relative_view<F: Scalar>(
    target: &OrbitChain<F>,
    observer: Option<&OrbitChain<F>>,
    policy: RationalizationPolicy,
) -> Result<TrigCurve<F>> {
    let target = chain_to_curve(target, policy)?;
    match observer {
        None => Ok(target),
        Some(obs) => Ok(target.add(&chain_to_curve(obs, policy)?.negate())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::presets::{satellite, unit_orbit};
    use crate::symmetry::{detect_order, SymmetryOrder};
    use approx::assert_abs_diff_eq;

    fn exact() -> RationalizationPolicy {
        RationalizationPolicy::MaxDenominator(1_000_000)
    }

    fn earth() -> OrbitChain<f64> {
        lookup("Earth").unwrap().chain().unwrap()
    }

    fn mars() -> OrbitChain<f64> {
        lookup("Mars").unwrap().chain().unwrap()
    }

    #[test]
    fn table_values() {
        let t = planet_table();
        assert_eq!(t.len(), 8);
        let mars = lookup("mars").unwrap();
        assert_eq!((mars.orbit_radius_km, mars.period_years), (227.9e6, 1.8808));
        let earth = lookup("Earth").unwrap();
        assert_eq!((earth.orbit_radius_km, earth.period_years), (149.6e6, 1.0));
        assert!(lookup("Pluto").is_none());
    }

    #[test]
    fn kepler3_values() {
        let report = kepler3_residuals(&planet_table());
        let get = |n: &str| report.ratios.iter().find(|(name, _)| name == n).unwrap().1;
        assert_eq!(get("Earth"), 1.0);
        let mars = 1.8808f64.powi(2) / (227.9f64 / 149.6).powi(3);
        assert_abs_diff_eq!(get("Mars"), mars, epsilon = 1e-12);
        assert_abs_diff_eq!(get("Mars"), 1.0006, epsilon = 1e-4);
        for name in ["Mercury", "Venus", "Mars", "Jupiter", "Uranus", "Neptune"] {
            assert!((get(name) - 1.0).abs() <= 0.002, "{name}");
        }
        // Saturn's tabulated distance and period disagree by about 1.5%.
        assert_abs_diff_eq!(get("Saturn"), 0.985200, epsilon = 1e-6);
        assert_abs_diff_eq!(report.max_deviation, 0.014800, epsilon = 1e-6);
    }

    #[test]
    fn load_json_records() {
        let json = r#"[{"name":"Ceres","orbit_radius_km":413.7e6,"period_years":4.6}]"#;
        let recs = load_planets(json.as_bytes()).unwrap();
        assert_eq!(recs[0].name, "Ceres");
        let bad = r#"[{"name":"X","orbit_radius_km":-1,"period_years":4.6}]"#;
        assert!(load_planets(bad.as_bytes()).is_err());
        assert!(load_planets("{".as_bytes()).is_err());
    }

    #[test]
    fn chain_validation() {
        assert!(OrbitChain::<f64>::new(vec![]).is_err());
        assert!(OrbitChain::new(vec![OrbitLink::new(-1.0, 1.0)]).is_err());
        assert!(OrbitChain::new(vec![OrbitLink::new(1.0, 0.0)]).is_err());
        assert!(Direction::from_sign(0).is_err());
    }

    #[test]
    fn single_link_is_unit_orbit() {
        let c = chain_to_curve(&earth(), exact()).unwrap();
        assert_eq!(c, unit_orbit());
    }

    #[test]
    fn satellite_chain() {
        let chain = OrbitChain::new(vec![
            OrbitLink::new(1.0, 1.0),
            OrbitLink::new(0.2, 1.0 / 12.0),
        ])
        .unwrap();
        let c = chain_to_curve(&chain, RationalizationPolicy::MaxDenominator(100)).unwrap();
        assert_eq!(c, satellite());
        let p = chain.ephemeris3(0.0, Point3::new(0.0, 0.0, 1.0));
        assert_abs_diff_eq!(p.x, 1.2, epsilon = 1e-15);
        assert_eq!((p.y, p.z), (0.0, 0.0));
    }

    #[test]
    fn reversed_middle_link() {
        let chain = OrbitChain::new(vec![
            OrbitLink::new(1.0, 1.0),
            OrbitLink::new(0.5, 1.0 / 3.0).reversed(),
            OrbitLink::new(0.2, 1.0 / 7.0),
        ])
        .unwrap();
        let c = chain_to_curve(&chain, exact()).unwrap();
        let freqs: Vec<_> = c.frequencies().map(|f| f.to_integer()).collect();
        assert_eq!(freqs, vec![-3, 1, 7]);
        // differences 4 and 6 → order 2
        assert_eq!(detect_order(&c).unwrap().order, SymmetryOrder::Finite(2));
    }

    #[test]
    fn ephemeris_examples() {
        let e = earth();
        let p = e.ephemeris(0.0);
        assert_eq!(p, Point2::new(1.0, 0.0));
        let p = e.ephemeris(0.5);
        assert_abs_diff_eq!(p.x, -1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(p.y, 0.0, epsilon = 1e-15);
    }

    #[test]
    fn ephemeris_agrees_with_curve() {
        let chain = OrbitChain::new(vec![
            OrbitLink::new(1.0, 1.0),
            OrbitLink::new(0.3, 0.25).reversed().with_phase(0.4),
            OrbitLink::new(0.1, 0.125),
        ])
        .unwrap();
        let curve = chain_to_curve(&chain, exact()).unwrap();
        for i in 0..100 {
            let t = -3.0 + 0.061 * i as f64;
            let d = curve
                .evaluate(std::f64::consts::TAU * t)
                .distance(chain.ephemeris(t));
            assert!(d <= 1e-9, "t = {t}: {d}");
        }
    }

    #[test]
    fn relative_views() {
        let c = relative_view(&mars(), Some(&mars()), exact()).unwrap();
        assert!(c.is_constant());
        assert_eq!(c.offset(), Point2::zero());

        assert_eq!(
            relative_view(&mars(), None, exact()).unwrap(),
            chain_to_curve(&mars(), exact()).unwrap()
        );

        let policy = RationalizationPolicy::MaxDenominator(100);
        let c = relative_view(&mars(), Some(&earth()), policy).unwrap();
        assert_eq!(c.components().len(), 2);
        let amps: Vec<f64> = c.components().iter().map(|c| c.amplitude).collect();
        assert_abs_diff_eq!(amps[0], 227.9 / 149.6, epsilon = 1e-12);
        assert_abs_diff_eq!(amps[1], 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(amps[0], 1.5234, epsilon = 1e-4);
        assert!(detect_order(&c).unwrap().order.finite().is_some());
    }

    #[test]
    fn relative_view_antisymmetric() {
        let policy = RationalizationPolicy::MaxDenominator(100);
        let ab = relative_view(&mars(), Some(&earth()), policy).unwrap();
        let ba = relative_view(&earth(), Some(&mars()), policy).unwrap();
        for i in 0..200 {
            let u = 0.37 * i as f64;
            let d = ab.evaluate(u).distance(-ba.evaluate(u));
            assert!(d <= 1e-12);
        }
    }

    #[test]
    fn zero_radius_link_is_invisible() {
        let base =
            OrbitChain::new(vec![OrbitLink::new(1.0, 1.0), OrbitLink::new(0.2, 0.5)]).unwrap();
        let padded = OrbitChain::new(vec![
            OrbitLink::new(1.0, 1.0),
            OrbitLink::new(0.0, 0.3),
            OrbitLink::new(0.2, 0.5),
        ])
        .unwrap();
        assert_eq!(
            chain_to_curve(&base, exact()).unwrap(),
            chain_to_curve(&padded, exact()).unwrap()
        );
    }
}
