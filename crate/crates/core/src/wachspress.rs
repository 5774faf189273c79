//! Regular polygon domains, Wachspress coordinates and their blossom.
//!
//! Side `j` of a polygon is the line through vertex `j` and vertex `j + 1`
//! (cyclic). Each side is stored as a unit-normal affine functional
//! `D_j(u, v) = a u + b v + c`, positive inside the polygon. The Wachspress
//! coordinate of vertex `i` is the product of `D_j` over the sides not
//! incident to that vertex (`j != i - 1, i`), normalized to sum to one.

use std::f64::consts::PI;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multiindex::factorial;
use crate::simplex::BezierSimplex;

pub type Point2 = [f64; 2];

/// Vertices of the canonical 2D simplex: `(u, v)` has barycentric
/// coordinates `(u, v, 1 - u - v)` with respect to these.
pub const CANONICAL_TRIANGLE: [Point2; 3] = [[1.0, 0.0], [0.0, 1.0], [0.0, 0.0]];

/// Barycentric coordinates of `p` relative to [`CANONICAL_TRIANGLE`].
pub fn canonical_bary(p: Point2) -> [f64; 3] {
    [p[0], p[1], 1.0 - p[0] - p[1]]
}

/// An oriented side line `a u + b v + c` with `(a, b)` of unit length.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SideLine {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl SideLine {
    /// Signed distance, positive on the polygon side.
    pub fn eval(&self, p: Point2) -> f64 {
        self.a * p[0] + self.b * p[1] + self.c
    }

    /// The linear form acting on homogeneous `(u w, v w, w)`.
    pub fn eval_homogeneous(&self, x: [f64; 3]) -> f64 {
        self.a * x[0] + self.b * x[1] + self.c * x[2]
    }
}

/// A convex polygon with inward-oriented unit-normal side lines.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "PolygonJson", into = "PolygonJson")]
pub struct DomainPolygon {
    vertices: Vec<Point2>,
    lines: Vec<SideLine>,
}

#[derive(Serialize, Deserialize)]
struct PolygonJson {
    vertices: Vec<Point2>,
}

impl TryFrom<PolygonJson> for DomainPolygon {
    type Error = Error;

    fn try_from(raw: PolygonJson) -> Result<Self> {
        DomainPolygon::from_vertices(raw.vertices)
    }
}

impl From<DomainPolygon> for PolygonJson {
    fn from(p: DomainPolygon) -> Self {
        PolygonJson {
            vertices: p.vertices,
        }
    }
}

/// Largest argument count accepted by [`DomainPolygon::wachspress_blossom`].
pub const MAX_BLOSSOM_ARGS: usize = 10;

pub const DOMAIN_CENTER: Point2 = [0.5, 0.5];
pub const DOMAIN_RADIUS: f64 = 0.5;

impl DomainPolygon {
    /// The regular `n`-gon inscribed in the circle of radius 0.5 around
    /// `(0.5, 0.5)`, vertex `i` (0-based) at angle `2 pi i / n + pi / 2 + pi / n`.
    /// Vertices run counter-clockwise.
    pub fn regular(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidPolygon(format!(
                "a polygon needs at least 3 sides, got {n}"
            )));
        }
        let vertices = (0..n)
            .map(|i| {
                let theta = 2.0 * PI * i as f64 / n as f64 + PI / 2.0 + PI / n as f64;
                [
                    DOMAIN_CENTER[0] + DOMAIN_RADIUS * theta.cos(),
                    DOMAIN_CENTER[1] + DOMAIN_RADIUS * theta.sin(),
                ]
            })
            .collect();
        Self::build(vertices)
    }

    /// The unit square with vertices `(0,1), (1,1), (1,0), (0,0)`: the
    /// quadrilateral whose corners are the control points of the affine
    /// left inverse of its own Wachspress map (see [`build_w4inv`]).
    pub fn unit_square() -> Self {
        Self::from_vertices(vec![[0.0, 1.0], [1.0, 1.0], [1.0, 0.0], [0.0, 0.0]])
            .expect("square is convex")
    }

    /// Builds a strictly convex polygon from its vertices in either orientation.
    pub fn from_vertices(vertices: Vec<Point2>) -> Result<Self> {
        let poly = Self::build(vertices)?;
        let n = poly.sides();
        for (j, line) in poly.lines.iter().enumerate() {
            for (k, v) in poly.vertices.iter().enumerate() {
                if k != j && k != (j + 1) % n && line.eval(*v) <= 1e-12 {
                    return Err(Error::InvalidPolygon("polygon is not strictly convex".into()));
                }
            }
        }
        Ok(poly)
    }

    /// Computes inward side lines without the quadratic convexity check.
    fn build(vertices: Vec<Point2>) -> Result<Self> {
        let n = vertices.len();
        if n < 3 {
            return Err(Error::InvalidPolygon(format!(
                "a polygon needs at least 3 sides, got {n}"
            )));
        }
        if vertices.iter().flatten().any(|x| !x.is_finite()) {
            return Err(Error::InvalidPolygon("non-finite vertex".into()));
        }
        let centroid = [
            vertices.iter().map(|p| p[0]).sum::<f64>() / n as f64,
            vertices.iter().map(|p| p[1]).sum::<f64>() / n as f64,
        ];
        let mut lines = Vec::with_capacity(n);
        for j in 0..n {
            let p = vertices[j];
            let q = vertices[(j + 1) % n];
            let (dx, dy) = (q[0] - p[0], q[1] - p[1]);
            let len = dx.hypot(dy);
            if len < 1e-12 {
                return Err(Error::InvalidPolygon(format!("side {j} is degenerate")));
            }
            let mut line = SideLine {
                a: -dy / len,
                b: dx / len,
                c: 0.0,
            };
            line.c = -(line.a * p[0] + line.b * p[1]);
            if line.eval(centroid) < 0.0 {
                line = SideLine {
                    a: -line.a,
                    b: -line.b,
                    c: -line.c,
                };
            }
            lines.push(line);
        }
        Ok(DomainPolygon { vertices, lines })
    }

    pub fn sides(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    pub fn lines(&self) -> &[SideLine] {
        &self.lines
    }

    /// Signed distances `D_j(p)` to every side.
    pub fn distances(&self, p: Point2) -> Vec<f64> {
        self.lines.iter().map(|l| l.eval(p)).collect()
    }

    /// True if every `D_j(p) >= -tol`.
    pub fn contains(&self, p: Point2, tol: f64) -> bool {
        self.lines.iter().all(|l| l.eval(p) >= -tol)
    }

    /// Whether side `j` is incident to vertex `i`.
    fn incident(&self, i: usize, j: usize) -> bool {
        let n = self.sides();
        j == i || j == (i + n - 1) % n
    }

    /// Sides not incident to vertex `i`, in increasing order.
    fn opposite_sides(&self, i: usize) -> Vec<usize> {
        (0..self.sides()).filter(|&j| !self.incident(i, j)).collect()
    }

    /// Homogeneous Wachspress coordinates: `prod_{j != i-1, i} D_j(p)`.
    pub fn wachspress_numerators(&self, p: Point2) -> Vec<f64> {
        let d = self.distances(p);
        (0..self.sides())
            .map(|i| {
                d.iter()
                    .enumerate()
                    .filter(|&(j, _)| !self.incident(i, j))
                    .map(|(_, x)| x)
                    .product()
            })
            .collect()
    }

    /// Wachspress coordinates of `p`.
    pub fn wachspress_coords(&self, p: Point2) -> Result<Vec<f64>> {
        let mut w = self.wachspress_numerators(p);
        let den: f64 = w.iter().sum();
        if !(den.abs() >= 1e-14) {
            return Err(Error::Singular(format!(
                "Wachspress denominator {den:e} vanishes at ({}, {})",
                p[0], p[1]
            )));
        }
        for x in &mut w {
            *x /= den;
        }
        Ok(w)
    }

    /// The blossom of the homogeneous Wachspress map, `n - 2` Cartesian arguments.
    ///
    /// Component `i` is the symmetrized product
    /// `(1/(n-2)!) sum_pi prod_k D_{j_k}(args[pi_k])` over the sides `j_k`
    /// opposite vertex `i`.
    pub fn wachspress_blossom(&self, args: &[Point2]) -> Result<Vec<f64>> {
        let m = self.sides() - 2;
        if m > MAX_BLOSSOM_ARGS {
            return Err(Error::Refused(format!(
                "the Wachspress blossom of a {}-gon enumerates {m}! permutations",
                self.sides()
            )));
        }
        if args.len() != m {
            return Err(Error::BlossomArity {
                expected: m,
                got: args.len(),
            });
        }
        let dist: Vec<Vec<f64>> = self.lines.iter().map(|l| args.iter().map(|&a| l.eval(a)).collect()).collect();
        let norm = factorial(m as u64)? as f64;
        let perms: Vec<Vec<usize>> = (0..m).permutations(m).collect();
        Ok((0..self.sides())
            .map(|i| {
                let sides = self.opposite_sides(i);
                let total: f64 = perms
                    .iter()
                    .map(|pi| sides.iter().zip(pi).map(|(&j, &k)| dist[j][k]).product::<f64>())
                    .sum();
                total / norm
            })
            .collect())
    }

    /// The homogeneous Wachspress map as a Bézier simplex over the canonical
    /// triangle: `(3, n - 2, n)`.
    pub fn wachspress_simplex(&self) -> Result<BezierSimplex> {
        let n = self.sides();
        let mut err = None;
        let simplex = BezierSimplex::from_fn(3, (n - 2) as u32, n, |s| {
            let args: Vec<Point2> = s
                .entries()
                .iter()
                .zip(CANONICAL_TRIANGLE)
                .flat_map(|(&k, v)| std::iter::repeat_n(v, k as usize))
                .collect();
            self.wachspress_blossom(&args).unwrap_or_else(|e| {
                err = Some(e);
                vec![0.0; n]
            })
        });
        match err {
            Some(e) => Err(e),
            None => simplex,
        }
    }
}

/// The Wachspress simplex `W_n` of the regular `n`-gon domain.
pub fn build_wn(n: usize) -> Result<BezierSimplex> {
    DomainPolygon::regular(n)?.wachspress_simplex()
}

/// The Wachspress simplex of [`DomainPolygon::unit_square`].
pub fn build_w4() -> BezierSimplex {
    DomainPolygon::unit_square()
        .wachspress_simplex()
        .expect("square blossom is well defined")
}

/// The affine left inverse of [`build_w4`]: `(4, 1, 3)`, mapping the four
/// quad coordinates to canonical barycentrics of the unit-square corners.
pub fn build_w4inv() -> BezierSimplex {
    let corners: [([u32; 4], [f64; 3]); 4] = [
        ([1, 0, 0, 0], [0.0, 1.0, 0.0]),
        ([0, 1, 0, 0], [1.0, 1.0, -1.0]),
        ([0, 0, 1, 0], [1.0, 0.0, 0.0]),
        ([0, 0, 0, 1], [0.0, 0.0, 1.0]),
    ];
    let control = corners
        .into_iter()
        .map(|(s, p)| (s.into(), p.to_vec()))
        .collect();
    BezierSimplex::new(4, 1, 3, control).expect("complete degree-1 net")
}
