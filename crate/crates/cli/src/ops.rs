//! Operations shared by the CLI and the HTTP service, so both produce the
//! same bytes for the same request.

use std::io::Write;

use orbitloom_core::export::{self, ArcSet, SvgStyle, TubeParams};
use orbitloom_core::symmetry::{self, SymmetryOrder, SymmetryReport};
use orbitloom_core::{Curve, Path2, Path3, Point3, Scalar};
use serde::Serialize;

use crate::doc::BuiltCurve;
use crate::error::AppError;

pub const MAX_SAMPLES: usize = 1_000_000;
pub const MAX_TUBE_VERTICES: usize = 4_000_000;
pub const DEFAULT_ARC_SAMPLES: usize = 128;

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Sampled {
    Plane(Path2),
    Space(Path3),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DataFormat {
    #[default]
    Csv,
    Json,
}

/// Samples `n` points over `range`, or one period when `range` is absent.
pub fn sample(built: &BuiltCurve, n: usize, range: Option<[f64; 2]>) -> Result<Sampled, AppError> {
    if n > MAX_SAMPLES {
        return Err(AppError::Validation(format!(
            "n must be at most {MAX_SAMPLES}"
        )));
    }
    let [u0, u1] = match range {
        Some(r) => r,
        None => [0.0, built.curve.period()?],
    };
    Ok(match built.drift {
        Some(d) => Sampled::Space(built.curve.lift3d(d).sample(n, u0, u1)?),
        None => Sampled::Plane(built.curve.sample(n, u0, u1)?),
    })
}

pub fn write_samples(s: &Sampled, format: DataFormat, out: impl Write) -> Result<(), AppError> {
    match (s, format) {
        (Sampled::Plane(p), DataFormat::Csv) => export::write_csv(p, out)?,
        (Sampled::Plane(p), DataFormat::Json) => export::write_json(p, out)?,
        (Sampled::Space(p), DataFormat::Csv) => export::write_csv(p, out)?,
        (Sampled::Space(p), DataFormat::Json) => export::write_json(p, out)?,
    }
    Ok(())
}

pub fn symmetry(built: &BuiltCurve) -> Result<SymmetryReport<f64>, AppError> {
    Ok(symmetry::detect_order(&built.curve)?)
}

/// `order=5 angle=1.256637 residual<1e-9`
pub fn symmetry_line(report: &SymmetryReport<f64>) -> String {
    let tol = <f64 as Scalar>::VERIFY_TOL;
    let residual = if report.max_residual <= tol {
        format!("residual<{tol:e}")
    } else {
        format!("residual={:e}", report.max_residual)
    };
    format!(
        "order={} angle={:.6} {residual}",
        report.order, report.rotation_angle
    )
}

/// Arc count defaults to the symmetry order, or 1 for a circle.
pub fn arcs(
    curve: &Curve,
    m: Option<u64>,
    samples_per_arc: Option<usize>,
    palette_size: usize,
) -> Result<ArcSet<f64>, AppError> {
    let m = match m {
        Some(m) => m,
        None => match symmetry::detect_order(curve)?.order {
            SymmetryOrder::Finite(n) => n,
            SymmetryOrder::Infinite => 1,
        },
    };
    let samples = samples_per_arc.unwrap_or(DEFAULT_ARC_SAMPLES);
    if m.saturating_mul(samples as u64) > MAX_SAMPLES as u64 {
        return Err(AppError::Validation(format!(
            "arcs × samples must be at most {MAX_SAMPLES}"
        )));
    }
    Ok(export::partition_arcs(curve, m, palette_size, samples)?)
}

pub fn svg(
    built: &BuiltCurve,
    m: Option<u64>,
    samples_per_arc: Option<usize>,
    style: &SvgStyle,
) -> Result<Vec<u8>, AppError> {
    let set = arcs(&built.curve, m, samples_per_arc, style.palette.len().max(1))?;
    let mut out = Vec::new();
    export::write_svg(&set, style, &mut out)?;
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TubeOptions {
    pub radius: f64,
    pub around: usize,
    pub along: usize,
    pub unit_scale: f64,
}

impl Default for TubeOptions {
    fn default() -> Self {
        Self {
            radius: 0.05,
            around: 16,
            along: 512,
            unit_scale: 1.0,
        }
    }
}

/// Binary STL of a tube around one period. The tube is closed exactly when
/// there is no drift.
pub fn stl(built: &BuiltCurve, opts: &TubeOptions) -> Result<Vec<u8>, AppError> {
    if opts.around.saturating_mul(opts.along) > MAX_TUBE_VERTICES {
        return Err(AppError::Validation(format!(
            "around × along must be at most {MAX_TUBE_VERTICES}"
        )));
    }
    let drift = built.drift.unwrap_or_else(Point3::zero);
    let space = built.curve.lift3d(drift);
    let params = TubeParams {
        radius: opts.radius,
        segments_around: opts.around,
        samples_along: opts.along,
        closed: space.is_planar(),
    };
    let sweep = export::tube_sweep(&space, &params)?;
    let mut out = Vec::with_capacity(84 + 50 * sweep.mesh.triangles.len());
    export::write_stl(&sweep.mesh, opts.unit_scale, &mut out)?;
    Ok(out)
}
