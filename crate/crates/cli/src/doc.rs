//! JSON curve descriptions accepted by the CLI and the service.
//!
//! ```json
//! {"preset": {"name": "eq3", "params": {"a": 6, "b": 14, "c": 1}}, "drift": [0, 0, 0.3]}
//! {"components": [{"freq_num": 1, "freq_den": 1, "amplitude": 1.0, "phase": 0.0}], "offset": [0, 0]}
//! ```
//!
//! Frequencies and other rational parameters travel as integers, `"p/q"`
//! strings or `{"num": p, "den": q}` objects. Floats are rejected for them.

use std::collections::BTreeMap;

use orbitloom_core::orbits::{self, Direction, OrbitChain, OrbitLink, RationalizationPolicy};
use orbitloom_core::presets;
use orbitloom_core::{CircularComponent, Curve, Point2, Point3, Rational};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::AppError;

pub const DEFAULT_MAX_DENOMINATOR: u64 = 1000;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveSpecDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub preset: Option<PresetDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub components: Option<Vec<ComponentDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub offset: Option<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub drift: Option<[f64; 3]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PresetDoc {
    pub name: String,
    #[serde(default)]
    pub params: BTreeMap<String, Value>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentDoc {
    pub freq_num: i64,
    #[serde(default = "one")]
    pub freq_den: i64,
    pub amplitude: f64,
    #[serde(default)]
    pub phase: f64,
}

fn one() -> i64 {
    1
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinkDoc {
    pub radius: f64,
    pub period: f64,
    #[serde(default = "prograde", deserialize_with = "direction")]
    pub direction: Direction,
    #[serde(default)]
    pub initial_phase: f64,
}

fn prograde() -> Direction {
    Direction::Prograde
}

fn direction<'de, D: serde::Deserializer<'de>>(d: D) -> Result<Direction, D::Error> {
    let v = Value::deserialize(d)?;
    let sign = match &v {
        Value::Number(n) => n.as_i64(),
        Value::String(s) => match s.as_str() {
            "prograde" | "+1" | "1" => Some(1),
            "retrograde" | "-1" => Some(-1),
            _ => None,
        },
        _ => None,
    };
    sign.and_then(|s| Direction::from_sign(s).ok())
        .ok_or_else(|| {
            serde::de::Error::custom(format!(
                "direction must be +1, -1, \"prograde\" or \"retrograde\", got {v}"
            ))
        })
}

impl From<&LinkDoc> for OrbitLink<f64> {
    fn from(l: &LinkDoc) -> Self {
        OrbitLink {
            radius: l.radius,
            period: l.period,
            direction: l.direction,
            initial_phase: l.initial_phase,
        }
    }
}

/// A validated curve plus its optional lift into space.
#[derive(Debug, Clone, PartialEq)]
pub struct BuiltCurve {
    pub curve: Curve,
    pub drift: Option<Point3<f64>>,
}

impl CurveSpecDoc {
    pub fn eq3(a: Rational, b: Rational, c: f64) -> Self {
        let mut params = BTreeMap::new();
        params.insert("a".to_string(), rational_value(a));
        params.insert("b".to_string(), rational_value(b));
        params.insert("c".to_string(), serde_json::json!(c));
        Self {
            preset: Some(PresetDoc {
                name: "eq3".into(),
                params,
            }),
            components: None,
            offset: None,
            drift: None,
        }
    }

    /// Explicit form of an existing curve.
    pub fn from_curve(curve: &Curve) -> Self {
        let components = curve
            .components()
            .iter()
            .map(|c| ComponentDoc {
                freq_num: *c.frequency.numer(),
                freq_den: *c.frequency.denom(),
                amplitude: c.amplitude,
                phase: c.phase,
            })
            .collect();
        let o = curve.offset();
        Self {
            preset: None,
            components: Some(components),
            offset: Some([o.x, o.y]),
            drift: None,
        }
    }

    pub fn parse(bytes: &[u8]) -> Result<Self, AppError> {
        serde_json::from_slice(bytes).map_err(|e| AppError::Validation(format!("curve spec: {e}")))
    }

    /// Validates the document. `max_denominator` applies to orbit-chain
    /// presets whose periods are real numbers.
    pub fn build(&self, max_denominator: Option<u64>) -> Result<BuiltCurve, AppError> {
        let policy = RationalizationPolicy::MaxDenominator(
            max_denominator.unwrap_or(DEFAULT_MAX_DENOMINATOR),
        );
        let curve = match (&self.preset, &self.components) {
            (Some(p), None) => {
                if self.offset.is_some() {
                    return Err(AppError::Validation(
                        "offset is only allowed with explicit components".into(),
                    ));
                }
                build_preset(p, policy)?
            }
            (None, Some(comps)) => {
                let mut out = Vec::with_capacity(comps.len());
                for (i, c) in comps.iter().enumerate() {
                    if c.freq_den == 0 {
                        return Err(AppError::Validation(format!(
                            "component {i}: freq_den must be nonzero"
                        )));
                    }
                    if !(c.amplitude.is_finite() && c.amplitude >= 0.0 && c.phase.is_finite()) {
                        return Err(AppError::Validation(format!(
                            "component {i}: amplitude must be finite and non-negative, phase finite"
                        )));
                    }
                    out.push(CircularComponent::new(
                        Rational::new(c.freq_num, c.freq_den),
                        c.amplitude,
                        c.phase,
                    ));
                }
                let [x, y] = self.offset.unwrap_or([0.0, 0.0]);
                if !(x.is_finite() && y.is_finite()) {
                    return Err(AppError::Validation("offset must be finite".into()));
                }
                Curve::new(out, Point2::new(x, y))
            }
            (Some(_), Some(_)) => {
                return Err(AppError::Validation(
                    "give either preset or components, not both".into(),
                ))
            }
            (None, None) => {
                return Err(AppError::Validation(
                    "curve spec needs preset or components".into(),
                ))
            }
        };
        let drift = match self.drift {
            Some(d) if d.iter().all(|v| v.is_finite()) => Some(Point3::from(d)),
            Some(_) => return Err(AppError::Validation("drift must be finite".into())),
            None => None,
        };
        Ok(BuiltCurve { curve, drift })
    }
}

fn rational_value(r: Rational) -> Value {
    if r.is_integer() {
        serde_json::json!(r.to_integer())
    } else {
        Value::String(format!("{}/{}", r.numer(), r.denom()))
    }
}

struct Params<'a> {
    preset: &'a str,
    map: &'a BTreeMap<String, Value>,
}

impl Params<'_> {
    fn get(&self, key: &str) -> Result<&Value, AppError> {
        self.map.get(key).ok_or_else(|| {
            AppError::Validation(format!("preset {}: missing parameter `{key}`", self.preset))
        })
    }

    fn real(&self, key: &str) -> Result<f64, AppError> {
        self.get(key)?.as_f64().ok_or_else(|| {
            AppError::Validation(format!("preset {}: `{key}` must be a number", self.preset))
        })
    }

    fn rational(&self, key: &str) -> Result<Rational, AppError> {
        parse_rational_value(self.get(key)?)
            .map_err(|e| AppError::Validation(format!("preset {}: `{key}`: {e}", self.preset)))
    }

    fn links(&self, key: &str) -> Result<Option<OrbitChain<f64>>, AppError> {
        let Some(v) = self.map.get(key) else {
            return Ok(None);
        };
        if v.is_null() {
            return Ok(None);
        }
        let docs: Vec<LinkDoc> = serde_json::from_value(v.clone())
            .map_err(|e| AppError::Validation(format!("preset {}: `{key}`: {e}", self.preset)))?;
        Ok(Some(OrbitChain::new(
            docs.iter().map(OrbitLink::from).collect(),
        )?))
    }

    fn planet(&self, key: &str) -> Result<Option<OrbitChain<f64>>, AppError> {
        let Some(v) = self.map.get(key) else {
            return Ok(None);
        };
        if v.is_null() {
            return Ok(None);
        }
        let name = v.as_str().ok_or_else(|| {
            AppError::Validation(format!(
                "preset {}: `{key}` must be a planet name",
                self.preset
            ))
        })?;
        let record = orbits::lookup(name)
            .ok_or_else(|| AppError::Validation(format!("unknown planet `{name}`")))?;
        Ok(Some(record.chain()?))
    }
}

/// Integer, `"p/q"` string, or `{"num": p, "den": q}`.
pub fn parse_rational_value(v: &Value) -> Result<Rational, String> {
    match v {
        Value::Number(n) => n.as_i64().map(Rational::from_integer).ok_or_else(|| {
            format!("{n} is not an exact rational; use an integer, \"p/q\" or {{num, den}}")
        }),
        Value::String(s) => parse_rational(s),
        Value::Object(o) => {
            let num = o.get("num").and_then(Value::as_i64);
            let den = o.get("den").and_then(Value::as_i64);
            match (num, den) {
                (Some(_), Some(0)) => Err("denominator must be nonzero".into()),
                (Some(n), Some(d)) => Ok(Rational::new(n, d)),
                _ => Err("expected {num, den} with integer fields".into()),
            }
        }
        other => Err(format!("expected a rational, got {other}")),
    }
}

/// Parses `"p"` or `"p/q"`.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: i64 = num
        .parse()
        .map_err(|_| format!("`{s}` is not a rational number"))?;
    let den: i64 = den
        .parse()
        .map_err(|_| format!("`{s}` is not a rational number"))?;
    if den == 0 {
        return Err(format!("`{s}` has a zero denominator"));
    }
    Ok(Rational::new(num, den))
}

fn build_preset(p: &PresetDoc, policy: RationalizationPolicy) -> Result<Curve, AppError> {
    let params = Params {
        preset: &p.name,
        map: &p.params,
    };
    let curve = match p.name.as_str() {
        "unit_orbit" => presets::unit_orbit(),
        "satellite" => presets::satellite(),
        "second_planet" => presets::second_planet(params.real("r")?, params.rational("h")?)?,
        "eq3" => presets::eq3(
            params.rational("a")?,
            params.rational("b")?,
            params.real("c")?,
        )?,
        "tricircular" => presets::tricircular(
            params.real("r1")?,
            params.rational("f1")?,
            params.real("r2")?,
            params.rational("f2")?,
            params.real("r3")?,
            params.rational("f3")?,
        )?,
        "orbit_chain" => {
            let target = params.links("links")?.ok_or_else(|| {
                AppError::Validation("preset orbit_chain: missing parameter `links`".into())
            })?;
            orbits::relative_view(&target, params.links("observer")?.as_ref(), policy)?
        }
        "planets" => {
            let target = params.planet("target")?.ok_or_else(|| {
                AppError::Validation("preset planets: missing parameter `target`".into())
            })?;
            orbits::relative_view(&target, params.planet("observer")?.as_ref(), policy)?
        }
        other => return Err(AppError::Validation(format!("unknown preset `{other}`"))),
    };
    Ok(curve)
}
