//! Triangle meshes sampled from patches, written as Wavefront OBJ.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::convert::TrimmedPatch;
use crate::error::Result;
use crate::spatch::{Point3, SPatch};
use crate::wachspress::Point2;

#[derive(Debug, Clone, PartialEq)]
pub struct Mesh {
    pub params: Vec<Point2>,
    pub vertices: Vec<Point3>,
    /// 0-based, counter-clockwise in the parameter plane.
    pub faces: Vec<[usize; 3]>,
}

impl Mesh {
    pub fn to_obj(&self) -> String {
        let mut out = String::new();
        for v in &self.vertices {
            writeln!(out, "v {} {} {}", v[0], v[1], v[2]).unwrap();
        }
        for p in &self.params {
            writeln!(out, "vt {} {}", p[0], p[1]).unwrap();
        }
        for f in &self.faces {
            let [a, b, c] = f.map(|i| i + 1);
            writeln!(out, "f {a}/{a} {b}/{b} {c}/{c}").unwrap();
        }
        out
    }
}

/// Triangulates a convex polygon: a fan from vertex 0, each fan triangle
/// split into `resolution^2` pieces. Shared edges share vertices.
pub fn triangulate_polygon(polygon: &[Point2], resolution: usize) -> (Vec<Point2>, Vec<[usize; 3]>) {
    let r = resolution.max(1);
    let mut params = Vec::new();
    let mut index: HashMap<Vec<(usize, usize)>, usize> = HashMap::new();
    let mut faces = Vec::new();

    // Lattice point (i, j) of fan triangle k has weights (r-i-j, i, j) on
    // polygon vertices (0, k, k+1).
    let mut vertex = |k: usize, i: usize, j: usize| -> usize {
        let mut key: Vec<(usize, usize)> = [(0, r - i - j), (k, i), (k + 1, j)]
            .into_iter()
            .filter(|&(_, w)| w > 0)
            .collect();
        key.sort_unstable();
        *index.entry(key.clone()).or_insert_with(|| {
            let mut p = [0.0; 2];
            for (v, w) in key {
                for c in 0..2 {
                    p[c] += w as f64 * polygon[v][c];
                }
            }
            params.push([p[0] / r as f64, p[1] / r as f64]);
            params.len() - 1
        })
    };

    for k in 1..polygon.len() - 1 {
        for i in 0..r {
            for j in 0..r - i {
                faces.push([vertex(k, i, j), vertex(k, i + 1, j), vertex(k, i, j + 1)]);
                if i + j + 2 <= r {
                    faces.push([vertex(k, i + 1, j), vertex(k, i + 1, j + 1), vertex(k, i, j + 1)]);
                }
            }
        }
    }
    (params, faces)
}

fn sample(polygon: &[Point2], resolution: usize, eval: impl Fn(Point2) -> Result<Point3>) -> Result<Mesh> {
    let (params, faces) = triangulate_polygon(polygon, resolution);
    let vertices = params.iter().map(|&p| eval(p)).collect::<Result<_>>()?;
    Ok(Mesh {
        params,
        vertices,
        faces,
    })
}

/// Samples an S-patch over its domain polygon.
pub fn spatch_mesh(s: &SPatch, resolution: usize) -> Result<Mesh> {
    sample(s.domain().vertices(), resolution, |p| s.eval_uv(p))
}

/// Samples a trimmed patch over the region bounded by its trim loop.
pub fn trimmed_mesh(t: &TrimmedPatch, resolution: usize) -> Result<Mesh> {
    sample(&t.trim[..t.trim.len() - 1], resolution, |p| t.eval(p[0], p[1]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::random_spatch;

    #[test]
    fn single_triangle() {
        let s = random_spatch(3, 1, 1).unwrap();
        let m = spatch_mesh(&s, 1).unwrap();
        assert_eq!(m.vertices.len(), 3);
        assert_eq!(m.faces.len(), 1);
        let obj = m.to_obj();
        assert_eq!(obj.lines().filter(|l| l.starts_with("v ")).count(), 3);
        assert!(obj.contains("f 1/1 2/2 3/3"));
    }

    #[test]
    fn counts_grow_quadratically() {
        let poly: Vec<Point2> = crate::wachspress::DomainPolygon::regular(5).unwrap().vertices().to_vec();
        for r in 1..6 {
            let (params, faces) = triangulate_polygon(&poly, r);
            // three fan triangles sharing two interior edges
            assert_eq!(faces.len(), 3 * r * r);
            assert_eq!(params.len(), 3 * (r + 1) * (r + 2) / 2 - 2 * (r + 1));
        }
    }

    #[test]
    fn faces_are_counter_clockwise() {
        let poly: Vec<Point2> = crate::wachspress::DomainPolygon::regular(6).unwrap().vertices().to_vec();
        let (params, faces) = triangulate_polygon(&poly, 4);
        for [a, b, c] in faces {
            let (p, q, r) = (params[a], params[b], params[c]);
            let area = (q[0] - p[0]) * (r[1] - p[1]) - (r[0] - p[0]) * (q[1] - p[1]);
            assert!(area > 0.0);
        }
    }
}
