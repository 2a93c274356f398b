//! Multicircular trajectory curves.
//!
//! The engine composes uniform circular motions into [`TrigCurve`]s with exact
//! rational frequencies, detects their rotational symmetry exactly, models a
//! coplanar circular Solar System, and exports SVG drawings and STL tube meshes.
//!
//! Everything numeric is generic over [`Scalar`] (`f64` or `f32`); the aliases
//! below pick `f64` unless the name ends in `32`.

pub mod curve;
pub mod error;
pub mod export;
pub mod geometry;
pub mod orbits;
pub mod scalar;
pub mod symmetry;

pub use curve::{
    canonicalize, evaluate_raw, presets, CircularComponent, Curve3D, Polyline, TrigCurve,
};
pub use error::{Error, Result};
pub use geometry::{Point2, Point3};
pub use scalar::{Rational, Scalar};

pub type Curve = curve::TrigCurve<f64>;
pub type Curve32 = curve::TrigCurve<f32>;
pub type SpaceCurve = curve::Curve3D<f64>;
pub type SpaceCurve32 = curve::Curve3D<f32>;
pub type Path2 = curve::Polyline<f64, Point2<f64>>;
pub type Path3 = curve::Polyline<f64, Point3<f64>>;
pub type Mesh = export::TriMesh<f64>;
pub type Mesh32 = export::TriMesh<f32>;
pub type Report = symmetry::SymmetryReport<f64>;
pub type Chain = orbits::OrbitChain<f64>;
