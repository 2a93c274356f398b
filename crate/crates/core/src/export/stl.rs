use std::io::Write;

use super::TriMesh;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// 80-byte header; must not start with `solid` or readers may take it for ASCII STL.
pub const STL_HEADER: &[u8] = b"orbitloom tube mesh (binary STL)";

/// Binary STL: header, little-endian `u32` count, then 50 bytes per triangle
/// (normal, three vertices as `f32` triples, zero attribute word). Vertices
/// are multiplied by `unit_scale`; normals come from the winding.
pub fn write_stl<F: Scalar>(mesh: &TriMesh<F>, unit_scale: F, mut out: impl Write) -> Result<()> {
    if mesh.triangles.is_empty() {
        return Err(Error::EmptyMesh);
    }
    let count = u32::try_from(mesh.triangles.len())
        .map_err(|_| Error::InvalidParam("too many triangles for STL".into()))?;

    let mut header = [0u8; 80];
    header[..STL_HEADER.len()].copy_from_slice(STL_HEADER);
    out.write_all(&header)?;
    out.write_all(&count.to_le_bytes())?;

    let mut record = [0u8; 50];
    for (t, tri) in mesh.triangles.iter().enumerate() {
        let normal = mesh.face_normal(t);
        let mut put = |slot: usize, v: [F; 3]| {
            for (k, c) in v.iter().enumerate() {
                let bytes = (c.as_f64() as f32).to_le_bytes();
                let at = 12 * slot + 4 * k;
                record[at..at + 4].copy_from_slice(&bytes);
            }
        };
        put(0, normal.into());
        for (slot, &i) in tri.iter().enumerate() {
            put(slot + 1, (mesh.vertices[i as usize] * unit_scale).into());
        }
        record[48] = 0;
        record[49] = 0;
        out.write_all(&record)?;
    }
    Ok(())
}
