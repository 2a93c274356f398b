use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::curve::Curve3D;
use crate::error::{Error, Result};
use crate::geometry::{Point3, Vector3};
use crate::scalar::Scalar;

/// Indexed triangle mesh.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TriMesh<F: Scalar> {
    pub vertices: Vec<Point3<F>>,
    pub triangles: Vec<[u32; 3]>,
}

impl<F: Scalar> TriMesh<F> {
    /// Number of distinct undirected edges.
    pub fn edge_count(&self) -> usize {
        self.edge_uses().len()
    }

    /// `V − E + F`.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edge_count() as i64 + self.triangles.len() as i64
    }

    fn edge_uses(&self) -> HashMap<(u32, u32), usize> {
        let mut uses = HashMap::new();
        for t in &self.triangles {
            for k in 0..3 {
                let (a, b) = (t[k], t[(k + 1) % 3]);
                *uses.entry((a.min(b), a.max(b))).or_insert(0) += 1;
            }
        }
        uses
    }

    /// Every edge borders exactly two triangles.
    pub fn is_watertight(&self) -> bool {
        !self.triangles.is_empty() && self.edge_uses().values().all(|&n| n == 2)
    }

    /// Every directed edge occurs once, so neighbours traverse shared edges in
    /// opposite directions.
    pub fn is_consistently_oriented(&self) -> bool {
        let mut seen = HashSet::new();
        self.triangles
            .iter()
            .all(|t| (0..3).all(|k| seen.insert((t[k], t[(k + 1) % 3]))))
    }

    /// Enclosed volume by the divergence theorem; positive for outward winding.
    pub fn signed_volume(&self) -> F {
        let six = F::lit(6.0);
        self.triangles.iter().fold(F::zero(), |acc, t| {
            let [a, b, c] = t.map(|i| self.vertices[i as usize]);
            acc + a.dot(b.cross(c)) / six
        })
    }

    /// Unit normal from the winding, or zero for a degenerate triangle.
    pub fn face_normal(&self, t: usize) -> Vector3<F> {
        let [a, b, c] = self.triangles[t].map(|i| self.vertices[i as usize]);
        (b - a)
            .cross(c - a)
            .normalized()
            .unwrap_or_else(Point3::zero)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TubeParams<F: Scalar> {
    pub radius: F,
    /// Vertices per cross-section ring, at least 3.
    pub segments_around: usize,
    /// Spine samples, at least 8.
    pub samples_along: usize,
    /// Join the last ring to the first instead of capping both ends.
    pub closed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TubeSweep<F: Scalar> {
    pub mesh: TriMesh<F>,
    /// Spine samples passing within two tube radii of a distant part of the spine.
    pub self_proximities: usize,
}

/// Sweeps a circle along one period of the base curve.
pub fn tube_sweep<F: Scalar>(curve: &Curve3D<F>, params: &TubeParams<F>) -> Result<TubeSweep<F>> {
    let period = curve.base.period()?;
    tube_sweep_range(curve, params, F::zero(), period)
}

/// Sweeps a circle of `params.radius` along the curve over `[u0, u1]`.
///
/// Cross-sections follow a rotation-minimizing frame built by double
/// reflection. A closed tube spreads the frame's holonomy evenly along the
/// spine, up to a multiple of `2π/segments_around` absorbed by re-indexing
/// the seam. Open tubes get flat fan caps.
pub fn tube_sweep_range<F: Scalar>(
    curve: &Curve3D<F>,
    params: &TubeParams<F>,
    u0: F,
    u1: F,
) -> Result<TubeSweep<F>> {
    let TubeParams {
        radius,
        segments_around: k,
        samples_along: n,
        closed,
    } = *params;
    if !(radius > F::zero() && radius.is_finite()) {
        return Err(Error::InvalidParam(format!(
            "tube radius must be positive, got {radius}"
        )));
    }
    if k < 3 {
        return Err(Error::InvalidParam(format!(
            "need at least 3 segments around, got {k}"
        )));
    }
    if n < 8 {
        return Err(Error::InvalidParam(format!(
            "need at least 8 samples along, got {n}"
        )));
    }
    if u0.partial_cmp(&u1) != Some(std::cmp::Ordering::Less) {
        return Err(Error::InvalidParam(format!(
            "empty parameter range [{u0}, {u1}]"
        )));
    }

    let divisions = if closed { n } else { n - 1 };
    let step = (u1 - u0) / F::count(divisions);
    let spine: Vec<Point3<F>> = (0..n)
        .map(|i| curve.evaluate(u0 + step * F::count(i)))
        .collect();
    for i in 0..if closed { n } else { n - 1 } {
        let j = (i + 1) % n;
        if spine[i].distance(spine[j]) < F::lit(1e-12) {
            return Err(Error::DegenerateFrame { index: i, next: j });
        }
    }

    let tangents = chord_tangents(&spine, closed);
    let mut normals = transport_frames(&spine, &tangents, closed);

    let mut seam_shift = 0usize;
    if closed {
        let (n_end, _) = reflect_frame(
            spine[n - 1],
            tangents[n - 1],
            normals[n - 1],
            spine[0],
            tangents[0],
        );
        let b0 = tangents[0].cross(normals[0]);
        let holonomy = n_end.dot(b0).atan2(n_end.dot(normals[0]));
        let slot = F::two_pi() / F::count(k);
        let s = (holonomy / slot).round();
        let excess = holonomy - s * slot;
        seam_shift = (s.to_i64().unwrap_or(0)).rem_euclid(k as i64) as usize;
        for (i, normal) in normals.iter_mut().enumerate() {
            let alpha = -excess * F::count(i) / F::count(n);
            let (sa, ca) = alpha.sin_cos();
            let b = tangents[i].cross(*normal);
            *normal = *normal * ca + b * sa;
        }
    }

    let mut vertices = Vec::with_capacity(n * k + 2);
    for i in 0..n {
        let b = tangents[i].cross(normals[i]);
        for j in 0..k {
            let (s, c) = (F::two_pi() * F::count(j) / F::count(k)).sin_cos();
            vertices.push(spine[i] + (normals[i] * c + b * s) * radius);
        }
    }

    let idx = |i: usize, j: usize| (i * k + j % k) as u32;
    let mut triangles = Vec::with_capacity(2 * k * n);
    for i in 0..n - 1 {
        for j in 0..k {
            let (a, b, c, d) = (idx(i, j), idx(i, j + 1), idx(i + 1, j + 1), idx(i + 1, j));
            triangles.push([a, b, c]);
            triangles.push([a, c, d]);
        }
    }
    if closed {
        for j in 0..k {
            let (a, b) = (idx(n - 1, j), idx(n - 1, j + 1));
            let (c, d) = (idx(0, j + 1 + seam_shift), idx(0, j + seam_shift));
            triangles.push([a, b, c]);
            triangles.push([a, c, d]);
        }
    } else {
        let start = vertices.len() as u32;
        vertices.push(spine[0]);
        let end = vertices.len() as u32;
        vertices.push(spine[n - 1]);
        for j in 0..k {
            triangles.push([start, idx(0, j + 1), idx(0, j)]);
            triangles.push([end, idx(n - 1, j), idx(n - 1, j + 1)]);
        }
    }

    Ok(TubeSweep {
        mesh: TriMesh {
            vertices,
            triangles,
        },
        self_proximities: self_proximities(&spine, radius, closed),
    })
}

fn chord_tangents<F: Scalar>(spine: &[Point3<F>], closed: bool) -> Vec<Vector3<F>> {
    let n = spine.len();
    (0..n)
        .map(|i| {
            let prev = if i > 0 {
                i - 1
            } else if closed {
                n - 1
            } else {
                0
            };
            let next = if i + 1 < n {
                i + 1
            } else if closed {
                0
            } else {
                n - 1
            };
            (spine[next] - spine[prev])
                .normalized()
                .or_else(|| (spine[next] - spine[i]).normalized())
                .or_else(|| (spine[i] - spine[prev]).normalized())
                .unwrap_or(Point3::new(F::zero(), F::zero(), F::one()))
        })
        .collect()
}

fn initial_normal<F: Scalar>(t: Vector3<F>) -> Vector3<F> {
    let axes = [
        Point3::new(F::one(), F::zero(), F::zero()),
        Point3::new(F::zero(), F::one(), F::zero()),
        Point3::new(F::zero(), F::zero(), F::one()),
    ];
    let axis = axes
        .into_iter()
        .min_by(|a, b| {
            a.dot(t)
                .abs()
                .partial_cmp(&b.dot(t).abs())
                .unwrap_or(std::cmp::Ordering::Equal)
        })
        .unwrap();
    orthonormalize(axis, t)
}

fn orthonormalize<F: Scalar>(v: Vector3<F>, t: Vector3<F>) -> Vector3<F> {
    (v - t * v.dot(t))
        .normalized()
        .unwrap_or_else(|| initial_normal(t))
}

/// Double-reflection step carrying `normal` from `(x0, t0)` to `(x1, t1)`.
fn reflect_frame<F: Scalar>(
    x0: Point3<F>,
    t0: Vector3<F>,
    normal: Vector3<F>,
    x1: Point3<F>,
    t1: Vector3<F>,
) -> (Vector3<F>, Vector3<F>) {
    let two = F::lit(2.0);
    let v1 = x1 - x0;
    let c1 = v1.norm_squared();
    let (n_l, t_l) = if c1 > F::zero() {
        (
            normal - v1 * (two / c1 * v1.dot(normal)),
            t0 - v1 * (two / c1 * v1.dot(t0)),
        )
    } else {
        (normal, t0)
    };
    let v2 = t1 - t_l;
    let c2 = v2.norm_squared();
    let n_next = if c2 > F::epsilon() * F::epsilon() {
        n_l - v2 * (two / c2 * v2.dot(n_l))
    } else {
        n_l
    };
    (orthonormalize(n_next, t1), t1)
}

fn transport_frames<F: Scalar>(
    spine: &[Point3<F>],
    tangents: &[Vector3<F>],
    _closed: bool,
) -> Vec<Vector3<F>> {
    let mut normals = Vec::with_capacity(spine.len());
    normals.push(initial_normal(tangents[0]));
    for i in 1..spine.len() {
        let (nn, _) = reflect_frame(
            spine[i - 1],
            tangents[i - 1],
            normals[i - 1],
            spine[i],
            tangents[i],
        );
        normals.push(nn);
    }
    normals
}

fn self_proximities<F: Scalar>(spine: &[Point3<F>], radius: F, closed: bool) -> usize {
    let n = spine.len();
    let reach = radius * F::lit(2.0);
    let mut arc = Vec::with_capacity(n + 1);
    arc.push(F::zero());
    for i in 1..n {
        arc.push(arc[i - 1] + spine[i].distance(spine[i - 1]));
    }
    let total = arc[n - 1]
        + if closed {
            spine[0].distance(spine[n - 1])
        } else {
            F::zero()
        };
    let along = |i: usize, j: usize| {
        let d = (arc[i] - arc[j]).abs();
        if closed {
            d.min(total - d)
        } else {
            d
        }
    };
    // neighbours closer than half a turn of the tube around its own spine do not count
    let min_along = radius * F::PI();

    let cell = |p: Point3<F>| {
        let q = |v: F| (v / reach).floor().to_i64().unwrap_or(0);
        (q(p.x), q(p.y), q(p.z))
    };
    let mut grid: HashMap<(i64, i64, i64), Vec<usize>> = HashMap::new();
    for (i, p) in spine.iter().enumerate() {
        grid.entry(cell(*p)).or_default().push(i);
    }
    (0..n)
        .filter(|&i| {
            let (cx, cy, cz) = cell(spine[i]);
            (-1..=1).any(|dx| {
                (-1..=1).any(|dy| {
                    (-1..=1).any(|dz| {
                        grid.get(&(cx + dx, cy + dy, cz + dz))
                            .is_some_and(|bucket| {
                                bucket.iter().any(|&j| {
                                    spine[i].distance(spine[j]) < reach && along(i, j) > min_along
                                })
                            })
                    })
                })
            })
        })
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::presets::{eq3, satellite, unit_orbit};
    use crate::curve::TrigCurve;
    use crate::scalar::Rational;
    use std::f64::consts::TAU;

    fn params(closed: bool, around: usize, along: usize) -> TubeParams<f64> {
        TubeParams {
            radius: 0.05,
            segments_around: around,
            samples_along: along,
            closed,
        }
    }

    #[test]
    fn torus_topology() {
        let curve = unit_orbit::<f64>().lift3d(Point3::zero());
        let sweep = tube_sweep(&curve, &params(true, 16, 128)).unwrap();
        let mesh = &sweep.mesh;
        assert_eq!(mesh.triangles.len(), 4096);
        assert_eq!(mesh.euler_characteristic(), 0);
        assert!(mesh.is_watertight());
        assert!(mesh.is_consistently_oriented());
        // polygonal cross-section of 16 sides has 97.45% of the disc area
        let torus = 2.0 * std::f64::consts::PI.powi(2) * 0.05f64.powi(2);
        let v = mesh.signed_volume();
        assert!(
            v > 0.0 && (v - torus).abs() / torus < 0.03,
            "{v} vs {torus}"
        );
        assert_eq!(sweep.self_proximities, 0);
    }

    #[test]
    fn open_helix_is_a_capped_tube() {
        let curve = satellite::<f64>().lift3d(Point3::new(0.0, 0.0, 1.0));
        let sweep = tube_sweep_range(&curve, &params(false, 12, 400), 0.0, 2.0 * TAU).unwrap();
        let mesh = &sweep.mesh;
        assert_eq!(mesh.euler_characteristic(), 2);
        assert!(mesh.is_watertight());
        assert!(mesh.is_consistently_oriented());
        assert!(mesh.signed_volume() > 0.0);
        assert_eq!(mesh.triangles.len(), 2 * 12 * 400);
    }

    #[test]
    fn closed_symmetric_curve_with_cusps() {
        let c = eq3(Rational::from_integer(6), Rational::from_integer(14), 1.0).unwrap();
        let sweep = tube_sweep(&c.lift3d(Point3::zero()), &params(true, 8, 512)).unwrap();
        assert!(sweep.mesh.is_watertight());
        assert!(sweep.mesh.is_consistently_oriented());
        assert!(sweep.mesh.signed_volume() > 0.0);
        assert!(sweep.self_proximities > 0);
    }

    #[test]
    fn vertices_sit_on_the_tube() {
        let curve = satellite::<f64>().lift3d(Point3::new(0.0, 0.0, 0.3));
        let p = params(false, 10, 64);
        let mesh = tube_sweep(&curve, &p).unwrap().mesh;
        let step = TAU / 63.0;
        for i in 0..64 {
            let centre = curve.evaluate(step * i as f64);
            for j in 0..10 {
                let d = mesh.vertices[i * 10 + j].distance(centre);
                assert!((d - 0.05).abs() <= 1e-6 * 0.05, "{d}");
            }
        }
    }

    #[test]
    fn invalid_parameters() {
        let curve = unit_orbit::<f64>().lift3d(Point3::zero());
        assert!(tube_sweep(
            &curve,
            &TubeParams {
                radius: 0.0,
                ..params(true, 8, 16)
            }
        )
        .is_err());
        assert!(tube_sweep(&curve, &params(true, 2, 16)).is_err());
        assert!(tube_sweep(&curve, &params(true, 8, 7)).is_err());
        assert!(tube_sweep_range(&curve, &params(true, 8, 16), 1.0, 1.0).is_err());
    }

    #[test]
    fn coincident_samples_are_degenerate() {
        let still =
            TrigCurve::<f64>::constant(crate::geometry::Point2::zero()).lift3d(Point3::zero());
        match tube_sweep_range(&still, &params(false, 8, 16), 0.0, 1.0) {
            Err(Error::DegenerateFrame { index: 0, next: 1 }) => {}
            other => panic!("unexpected {other:?}"),
        }
    }
}
