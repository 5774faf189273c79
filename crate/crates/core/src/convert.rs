//! S-patch to trimmed rational tensor-product Bézier patch.
//!
//! The pipeline:
//!
//! 1. homogenize the S-patch control net, `(n, d, 4)`;
//! 2. compose with the homogeneous Wachspress simplex `W_n`, `(3, n-2, n)`;
//! 3. compose with the affine map `W4inv`, `(4, 1, 3)`, which gives a
//!    quadrilateral S-patch `(4, (n-2)d, 4)` over the unit square;
//! 4. switch from homogenized-barycentric points `(wx, wy, wz, w(1-x-y-z))`
//!    to homogeneous points `(wx, wy, wz, w)`;
//! 5. regroup the quadrilateral labels into a tensor-product grid.
//!
//! Step 5 yields a patch whose second parameter runs from `y = 1` down to
//! `y = 0`, because the corners of `W4inv` are listed clockwise. The grid is
//! reversed along `v` at the end so that `eval(u, v)` is the surface point at
//! domain point `(u, v)`.

use crate::error::{Error, Result};
use crate::multiindex::{binomial, labels, multinomial};
use crate::simplex::{compose, compose_naive, BezierSimplex};
use crate::spatch::{Point3, SPatch};
use crate::wachspress::{build_w4inv, build_wn, DomainPolygon, Point2};

/// Composition routine used by the pipeline.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Algorithm {
    Naive,
    #[default]
    Efficient,
}

/// Order in which the three simplexes are composed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Bracketing {
    /// `(S ∘ W_n) ∘ W4inv`
    #[default]
    OuterFirst,
    /// `S ∘ (W_n ∘ W4inv)`
    InnerFirst,
}

/// A rational tensor-product Bézier patch with homogeneous control points
/// `(wx, wy, wz, w)`, stored row-major with `u` as the major index.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalTensorPatch {
    degree_u: u32,
    degree_v: u32,
    control: Vec<[f64; 4]>,
}

impl RationalTensorPatch {
    pub fn new(degree_u: u32, degree_v: u32, control: Vec<[f64; 4]>) -> Result<Self> {
        let rows = degree_u as usize + 1;
        let cols = degree_v as usize + 1;
        if rows.checked_mul(cols) != Some(control.len()) {
            return Err(Error::PointCount {
                expected: (rows as u128) * (cols as u128),
                got: control.len(),
            });
        }
        Ok(RationalTensorPatch {
            degree_u,
            degree_v,
            control,
        })
    }

    pub fn degree(&self) -> (u32, u32) {
        (self.degree_u, self.degree_v)
    }

    /// Grid size `(degree_u + 1, degree_v + 1)`.
    pub fn grid_size(&self) -> (usize, usize) {
        (self.degree_u as usize + 1, self.degree_v as usize + 1)
    }

    pub fn point(&self, i: usize, j: usize) -> [f64; 4] {
        self.control[i * (self.degree_v as usize + 1) + j]
    }

    pub fn control(&self) -> &[[f64; 4]] {
        &self.control
    }

    /// Rows of the control grid (fixed `i`).
    pub fn rows(&self) -> impl Iterator<Item = &[[f64; 4]]> {
        self.control.chunks(self.degree_v as usize + 1)
    }

    pub fn weights(&self) -> impl Iterator<Item = f64> + '_ {
        self.control.iter().map(|p| p[3])
    }

    /// The same surface with the `v` parameter reversed.
    pub fn reverse_v(&self) -> Self {
        let control = self
            .rows()
            .flat_map(|row| row.iter().rev().copied())
            .collect();
        RationalTensorPatch {
            degree_u: self.degree_u,
            degree_v: self.degree_v,
            control,
        }
    }

    /// The homogeneous point `sum C_ij B_i(u) B_j(v)`.
    pub fn eval_homogeneous(&self, u: f64, v: f64) -> [f64; 4] {
        let bu = bernstein_basis(self.degree_u, u);
        let bv = bernstein_basis(self.degree_v, v);
        let mut out = [0.0; 4];
        for (row, &wu) in self.rows().zip(&bu) {
            for (c, &wv) in row.iter().zip(&bv) {
                let w = wu * wv;
                for k in 0..4 {
                    out[k] += w * c[k];
                }
            }
        }
        out
    }

    /// Evaluates the patch at `(u, v)` in `[0, 1]^2` and projects.
    pub fn eval(&self, u: f64, v: f64) -> Result<Point3> {
        const SLACK: f64 = 1e-12;
        if !(-SLACK..=1.0 + SLACK).contains(&u) || !(-SLACK..=1.0 + SLACK).contains(&v) {
            return Err(Error::OutsideDomain(u, v));
        }
        let h = self.eval_homogeneous(u, v);
        let scale = self.weights().fold(0.0f64, |m, w| m.max(w.abs()));
        if !(h[3].abs() > 1e-14 * scale) {
            return Err(Error::Singular(format!(
                "weight {:e} vanishes at ({u}, {v})",
                h[3]
            )));
        }
        Ok([h[0] / h[3], h[1] / h[3], h[2] / h[3]])
    }
}

/// `B_i^d(t)` for `i = 0..=d`.
pub fn bernstein_basis(d: u32, t: f64) -> Vec<f64> {
    let s = 1.0 - t;
    (0..=d)
        .map(|i| {
            let c = binomial(u64::from(d), u64::from(i)).expect("degree fits") as f64;
            c * t.powi(i as i32) * s.powi((d - i) as i32)
        })
        .collect()
}

/// A rational tensor-product patch trimmed by a closed polygonal uv loop.
#[derive(Debug, Clone, PartialEq)]
pub struct TrimmedPatch {
    pub patch: RationalTensorPatch,
    /// Counter-clockwise; the last point repeats the first.
    pub trim: Vec<Point2>,
}

impl TrimmedPatch {
    pub fn new(patch: RationalTensorPatch, trim: Vec<Point2>) -> Result<Self> {
        if trim.len() < 4 {
            return Err(Error::Malformed(format!(
                "trim loop needs at least 4 points, got {}",
                trim.len()
            )));
        }
        if trim.first() != trim.last() {
            return Err(Error::Malformed("trim loop is not closed".into()));
        }
        if trim.iter().flatten().any(|x| !(0.0..=1.0).contains(x)) {
            return Err(Error::Malformed("trim loop leaves the unit square".into()));
        }
        Ok(TrimmedPatch { patch, trim })
    }

    pub fn eval(&self, u: f64, v: f64) -> Result<Point3> {
        self.patch.eval(u, v)
    }

    /// The trim region as a polygon (open vertex list).
    pub fn trim_polygon(&self) -> Result<DomainPolygon> {
        DomainPolygon::from_vertices(self.trim[..self.trim.len() - 1].to_vec())
    }
}

fn compose_with(algo: Algorithm, f: &BezierSimplex, g: &BezierSimplex) -> Result<BezierSimplex> {
    match algo {
        Algorithm::Naive => compose_naive(f, g),
        Algorithm::Efficient => compose(f, g),
    }
}

/// The quadrilateral homogeneous S-patch `(4, (n-2)d, 4)` equivalent to `s`.
pub fn to_quad_spatch(s: &SPatch) -> Result<BezierSimplex> {
    to_quad_spatch_with(s, Algorithm::Efficient, Bracketing::OuterFirst)
}

pub fn to_quad_spatch_with(s: &SPatch, algo: Algorithm, bracketing: Bracketing) -> Result<BezierSimplex> {
    let hom = s.homogenize();
    let wn = build_wn(s.sides())?;
    let w4inv = build_w4inv();
    match bracketing {
        Bracketing::OuterFirst => compose_with(algo, &compose_with(algo, &hom, &wn)?, &w4inv),
        Bracketing::InnerFirst => compose_with(algo, &hom, &compose_with(algo, &wn, &w4inv)?),
    }
}

/// `(a, b, c, e)` to `(a, b, c, a + b + c + e)`.
pub fn change_coords(h: &BezierSimplex) -> Result<BezierSimplex> {
    if h.dim() != 4 {
        return Err(Error::Dimension {
            expected: 4,
            got: h.dim(),
        });
    }
    h.map_points(4, |p| vec![p[0], p[1], p[2], p[0] + p[1] + p[2] + p[3]])
}

/// Regroups a quadrilateral simplex of degree `d` into a `(d, d)` tensor
/// grid: `C_ij = sum_{s2+s3=i, s3+s4=j} multinomial(d, s) / (C(d,i) C(d,j)) P_s`.
pub fn to_tensor(h: &BezierSimplex) -> Result<RationalTensorPatch> {
    if h.arity() != 4 {
        return Err(Error::Dimension {
            expected: 4,
            got: h.arity(),
        });
    }
    if h.dim() != 4 {
        return Err(Error::Dimension {
            expected: 4,
            got: h.dim(),
        });
    }
    let d = h.degree();
    let dd = u64::from(d);
    let side = d as usize + 1;
    let mut grid = vec![[0.0; 4]; side * side];
    for s in labels(4, d) {
        let e = s.entries();
        let (i, j) = ((e[1] + e[2]) as usize, (e[2] + e[3]) as usize);
        let coef = multinomial(dd, &s)? as f64
            / (binomial(dd, i as u64)? as f64 * binomial(dd, j as u64)? as f64);
        let p = h.point(&s).expect("complete net");
        let c = &mut grid[i * side + j];
        for k in 0..4 {
            c[k] += coef * p[k];
        }
    }
    RationalTensorPatch::new(d, d, grid)
}

/// The domain polygon of an `n`-sided patch as a closed counter-clockwise loop.
pub fn make_trim_loop(n: usize) -> Result<Vec<Point2>> {
    let poly = DomainPolygon::regular(n)?;
    let mut trim = poly.vertices().to_vec();
    trim.push(trim[0]);
    Ok(trim)
}

/// Converts an S-patch into an equivalent trimmed rational tensor-product patch.
pub fn convert(s: &SPatch) -> Result<TrimmedPatch> {
    convert_with(s, Algorithm::Efficient)
}

pub fn convert_with(s: &SPatch, algo: Algorithm) -> Result<TrimmedPatch> {
    let quad = to_quad_spatch_with(s, algo, Bracketing::OuterFirst)?;
    let patch = to_tensor(&change_coords(&quad)?)?.reverse_v();
    TrimmedPatch::new(patch, make_trim_loop(s.sides())?)
}
