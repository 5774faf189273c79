//! Regular n-sided S-patches.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::multiindex::{self, multinomial, MultiIndex};
use crate::simplex::BezierSimplex;
use crate::wachspress::{DomainPolygon, Point2};

pub type Point3 = [f64; 3];

/// An `n`-sided, depth-`d` S-patch over the regular `n`-gon domain.
#[derive(Debug, Clone, PartialEq)]
pub struct SPatch {
    sides: usize,
    depth: u32,
    control: HashMap<MultiIndex, Point3>,
    domain: DomainPolygon,
}

impl SPatch {
    pub fn new(sides: usize, depth: u32, control: HashMap<MultiIndex, Point3>) -> Result<Self> {
        if depth < 1 {
            return Err(Error::Malformed("S-patch depth must be at least 1".into()));
        }
        if sides < 3 {
            return Err(Error::InvalidPolygon(format!(
                "a polygon needs at least 3 sides, got {sides}"
            )));
        }
        if control.is_empty() {
            return Err(Error::PointCount {
                expected: multiindex::label_count(sides, depth).unwrap_or(u128::MAX),
                got: 0,
            });
        }
        for label in control.keys() {
            if label.len() != sides {
                return Err(Error::LabelLength {
                    label: label.clone(),
                    len: label.len(),
                    expected: sides,
                });
            }
            if label.norm() != u64::from(depth) {
                return Err(Error::NormMismatch {
                    label: label.clone(),
                    norm: label.norm(),
                    expected: u64::from(depth),
                });
            }
        }
        let expected = multiindex::label_count(sides, depth).ok_or(Error::Overflow)?;
        if control.len() as u128 != expected {
            let missing = multiindex::labels(sides, depth)
                .find(|s| !control.contains_key(s))
                .expect("fewer labels than the full set");
            return Err(Error::MissingLabel(missing));
        }
        let domain = DomainPolygon::regular(sides)?;
        Ok(SPatch {
            sides,
            depth,
            control,
            domain,
        })
    }

    pub fn from_fn(sides: usize, depth: u32, mut f: impl FnMut(&MultiIndex) -> Point3) -> Result<Self> {
        if sides < 3 {
            return Self::new(sides, depth, HashMap::new());
        }
        let control = multiindex::labels(sides, depth)
            .map(|s| {
                let p = f(&s);
                (s, p)
            })
            .collect();
        Self::new(sides, depth, control)
    }

    pub fn sides(&self) -> usize {
        self.sides
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    pub fn domain(&self) -> &DomainPolygon {
        &self.domain
    }

    pub fn control(&self) -> &HashMap<MultiIndex, Point3> {
        &self.control
    }

    pub fn point(&self, label: &MultiIndex) -> Option<&Point3> {
        self.control.get(label)
    }

    /// Control points in ascending label order.
    pub fn sorted_points(&self) -> Vec<(&MultiIndex, &Point3)> {
        let mut v: Vec<_> = self.control.iter().collect();
        v.sort_by(|a, b| a.0.cmp(b.0));
        v
    }

    /// Axis-aligned bounding box of the control net.
    pub fn bounding_box(&self) -> (Point3, Point3) {
        bounding_box(self.control.values().copied())
    }

    /// Evaluates the Bernstein sum at generalized barycentric coordinates.
    pub fn eval_bary(&self, lambda: &[f64]) -> Result<Point3> {
        if lambda.len() != self.sides {
            return Err(Error::Dimension {
                expected: self.sides,
                got: lambda.len(),
            });
        }
        let mut out = [0.0; 3];
        for s in multiindex::labels(self.sides, self.depth) {
            let p = &self.control[&s];
            let mut basis = multinomial(u64::from(self.depth), &s)? as f64;
            for (&l, &k) in lambda.iter().zip(s.entries()) {
                // powi(0) is 1 even for l == 0
                basis *= l.powi(k as i32);
            }
            for c in 0..3 {
                out[c] += basis * p[c];
            }
        }
        Ok(out)
    }

    /// Evaluates the surface at a domain point (closed polygon, 1e-12 slack).
    pub fn eval_uv(&self, p: Point2) -> Result<Point3> {
        if !self.domain.contains(p, 1e-12) {
            return Err(Error::OutsideDomain(p[0], p[1]));
        }
        let lambda = self.domain.wachspress_coords(p)?;
        self.eval_bary(&lambda)
    }

    /// The control net in homogenized barycentric form: `(x, y, z)` becomes
    /// `(x, y, z, 1 - x - y - z)`, giving a `(n, d, 4)` simplex.
    pub fn homogenize(&self) -> BezierSimplex {
        let control = self
            .control
            .iter()
            .map(|(s, p)| (s.clone(), vec![p[0], p[1], p[2], 1.0 - p[0] - p[1] - p[2]]))
            .collect();
        BezierSimplex::new(self.sides, self.depth, 4, control).expect("complete net")
    }

    /// The `d + 1` control points of boundary curve `side` (0-based), which
    /// runs along the domain edge from vertex `side` to vertex `side + 1`.
    pub fn boundary_curve(&self, side: usize) -> Result<Vec<Point3>> {
        if side >= self.sides {
            return Err(Error::SideIndex {
                index: side,
                sides: self.sides,
            });
        }
        let next = (side + 1) % self.sides;
        Ok((0..=self.depth)
            .map(|k| {
                let mut e = vec![0; self.sides];
                e[side] = self.depth - k;
                e[next] = k;
                self.control[&MultiIndex::new(e)]
            })
            .collect())
    }
}

pub fn bounding_box(points: impl IntoIterator<Item = Point3>) -> (Point3, Point3) {
    let mut lo = [f64::INFINITY; 3];
    let mut hi = [f64::NEG_INFINITY; 3];
    for p in points {
        for c in 0..3 {
            lo[c] = lo[c].min(p[c]);
            hi[c] = hi[c].max(p[c]);
        }
    }
    (lo, hi)
}

pub fn distance(a: Point3, b: Point3) -> f64 {
    ((a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2) + (a[2] - b[2]).powi(2)).sqrt()
}

/// Evaluates a Bézier curve by de Casteljau's algorithm.
pub fn eval_bezier_curve(points: &[Point3], t: f64) -> Point3 {
    let mut pts = points.to_vec();
    for r in (1..pts.len()).rev() {
        for k in 0..r {
            for c in 0..3 {
                pts[k][c] = (1.0 - t) * pts[k][c] + t * pts[k + 1][c];
            }
        }
    }
    pts[0]
}
