use std::io::Write;

use crate::curve::Polyline;
use crate::error::Result;
use crate::geometry::Coordinates;
use crate::scalar::Scalar;

/// `u,x,y` (or `u,x,y,z`) header followed by one row per sample.
pub fn write_csv<F: Scalar, P: Coordinates<F>>(
    line: &Polyline<F, P>,
    out: impl Write,
) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let header: &[&str] = if P::DIM == 3 {
        &["u", "x", "y", "z"]
    } else {
        &["u", "x", "y"]
    };
    w.write_record(header)?;
    for (u, p) in line.params().iter().zip(line.points()) {
        let row = std::iter::once(*u).chain(p.coords()).map(|v| v.to_string());
        w.write_record(row)?;
    }
    w.flush()?;
    Ok(())
}

/// `{"params": [...], "points": [[x, y], ...], "closed": bool}`.
pub fn write_json<F: Scalar, P: serde::Serialize>(
    line: &Polyline<F, P>,
    out: impl Write,
) -> Result<()> {
    serde_json::to_writer(out, line)?;
    Ok(())
}
