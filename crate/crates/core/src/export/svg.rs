use std::io::Write;

use serde::{Deserialize, Serialize};

use super::ArcSet;
use crate::curve::polyline::bounds;
use crate::curve::Polyline;
use crate::error::{Error, Result};
use crate::geometry::Point2;
use crate::scalar::Scalar;

/// Twelve well-separated stroke colours.
pub const DEFAULT_PALETTE: [&str; 12] = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf",
    "#bcbd22", "#7f7f7f", "#393b79", "#637939",
];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct SvgStyle {
    /// Stroke width in curve units.
    pub stroke_width: f64,
    pub palette: Vec<String>,
    /// Width and height attributes in pixels.
    pub canvas_size: [u32; 2],
    /// Blank border around the drawing, as a fraction of the larger extent.
    pub margin: f64,
}

impl Default for SvgStyle {
    fn default() -> Self {
        Self {
            stroke_width: 0.01,
            palette: DEFAULT_PALETTE.iter().map(|s| s.to_string()).collect(),
            canvas_size: [800, 800],
            margin: 0.05,
        }
    }
}

/// One `<path>` per arc, stroked with `palette[color_index]`.
pub fn write_svg<F: Scalar>(arcs: &ArcSet<F>, style: &SvgStyle, out: impl Write) -> Result<()> {
    let paths: Vec<(&Polyline<F, Point2<F>>, usize)> = arcs
        .arcs
        .iter()
        .map(|a| (&a.polyline, a.color_index))
        .collect();
    render(&paths, style, out)
}

/// One `<path>` per polyline, coloured by position in the list.
pub fn write_svg_polylines<F: Scalar>(
    lines: &[Polyline<F, Point2<F>>],
    style: &SvgStyle,
    out: impl Write,
) -> Result<()> {
    let paths: Vec<_> = lines.iter().enumerate().map(|(i, l)| (l, i)).collect();
    render(&paths, style, out)
}

// Curve y points up; SVG y points down, so every y is negated on output.
fn render<F: Scalar>(
    paths: &[(&Polyline<F, Point2<F>>, usize)],
    style: &SvgStyle,
    mut out: impl Write,
) -> Result<()> {
    if paths.is_empty() || style.palette.is_empty() {
        return Err(Error::EmptyInput);
    }
    let (lo, hi) = bounds(
        paths
            .iter()
            .flat_map(|(l, _)| l.points().iter())
            .map(|p| Point2::new(p.x.as_f64(), -p.y.as_f64())),
    );
    let extent = (hi.x - lo.x).max(hi.y - lo.y).max(f64::EPSILON);
    let pad = extent * style.margin + style.stroke_width;
    let view = [
        lo.x - pad,
        lo.y - pad,
        hi.x - lo.x + 2.0 * pad,
        hi.y - lo.y + 2.0 * pad,
    ];

    writeln!(
        out,
        r#"<?xml version="1.0" encoding="UTF-8" standalone="no"?>"#
    )?;
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}" viewBox="{:.6} {:.6} {:.6} {:.6}">"#,
        style.canvas_size[0], style.canvas_size[1], view[0], view[1], view[2], view[3]
    )?;
    writeln!(
        out,
        r#"<g fill="none" stroke-width="{:.6}" stroke-linecap="round" stroke-linejoin="round">"#,
        style.stroke_width
    )?;
    for (line, color) in paths {
        let color = &style.palette[color % style.palette.len()];
        write!(out, r#"<path stroke="{}" d=""#, escape(color))?;
        for (i, p) in line.points().iter().enumerate() {
            let cmd = if i == 0 { 'M' } else { 'L' };
            if i > 0 {
                out.write_all(b" ")?;
            }
            write!(
                out,
                "{cmd}{:.6} {:.6}",
                fix_zero(p.x.as_f64()),
                fix_zero(-p.y.as_f64())
            )?;
        }
        if line.closed() {
            out.write_all(b" Z")?;
        }
        writeln!(out, r#""/>"#)?;
    }
    writeln!(out, "</g>")?;
    writeln!(out, "</svg>")?;
    Ok(())
}

fn fix_zero(v: f64) -> f64 {
    // avoids "-0.000000" for values that round to zero
    if v.abs() < 5e-7 {
        0.0
    } else {
        v
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('"', "&quot;")
        .replace('<', "&lt;")
}
