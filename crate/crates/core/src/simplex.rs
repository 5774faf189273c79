//! Bézier simplexes and their composition.
//!
//! A Bézier simplex maps the `n` barycentric coordinates of an `(n-1)`-simplex
//! to `dim`-dimensional points through a degree-`d` Bernstein form. The triple
//! `(arity, degree, dim)` is its characteristic triple. Composition `F ∘ G`
//! requires `G.dim == F.arity` and yields `(G.arity, F.degree * G.degree, F.dim)`.
//!
//! Two composition routes are provided: [`compose_naive`] sums the blossom of
//! `F` over every ordered tuple of `G` control points, and [`compose`] walks
//! only the non-decreasing tuples while caching partially evaluated blossom
//! tables. The first exists as an oracle and a benchmark baseline.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::multiindex::{self, factorial, multinomial, MultiIndex};

#[derive(Debug, Clone, PartialEq)]
pub struct BezierSimplex {
    arity: usize,
    degree: u32,
    dim: usize,
    control: HashMap<MultiIndex, Vec<f64>>,
}

impl BezierSimplex {
    /// Builds a simplex from a complete control net.
    pub fn new(
        arity: usize,
        degree: u32,
        dim: usize,
        control: HashMap<MultiIndex, Vec<f64>>,
    ) -> Result<Self> {
        if arity == 0 {
            return Err(Error::Malformed("simplex arity must be at least 1".into()));
        }
        if control.is_empty() {
            return Err(Error::PointCount {
                expected: multiindex::label_count(arity, degree).unwrap_or(u128::MAX),
                got: 0,
            });
        }
        for (label, point) in &control {
            if label.len() != arity {
                return Err(Error::LabelLength {
                    label: label.clone(),
                    len: label.len(),
                    expected: arity,
                });
            }
            if label.norm() != u64::from(degree) {
                return Err(Error::NormMismatch {
                    label: label.clone(),
                    norm: label.norm(),
                    expected: u64::from(degree),
                });
            }
            if point.len() != dim {
                return Err(Error::Dimension {
                    expected: dim,
                    got: point.len(),
                });
            }
        }
        let expected = multiindex::label_count(arity, degree).ok_or(Error::Overflow)?;
        if control.len() as u128 != expected {
            let missing = multiindex::labels(arity, degree)
                .find(|s| !control.contains_key(s))
                .expect("fewer labels than the full set");
            return Err(Error::MissingLabel(missing));
        }
        Ok(BezierSimplex {
            arity,
            degree,
            dim,
            control,
        })
    }

    /// Builds a simplex by evaluating `f` at every label of `L(arity, degree)`.
    pub fn from_fn(
        arity: usize,
        degree: u32,
        dim: usize,
        mut f: impl FnMut(&MultiIndex) -> Vec<f64>,
    ) -> Result<Self> {
        let control = multiindex::labels(arity, degree)
            .map(|s| {
                let p = f(&s);
                (s, p)
            })
            .collect();
        Self::new(arity, degree, dim, control)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The characteristic triple `(arity, degree, dim)`.
    pub fn phi(&self) -> (usize, u32, usize) {
        (self.arity, self.degree, self.dim)
    }

    pub fn point(&self, label: &MultiIndex) -> Option<&[f64]> {
        self.control.get(label).map(Vec::as_slice)
    }

    pub fn control(&self) -> &HashMap<MultiIndex, Vec<f64>> {
        &self.control
    }

    /// Control points in ascending label order.
    pub fn sorted_points(&self) -> Vec<(&MultiIndex, &[f64])> {
        let mut v: Vec<_> = self
            .control
            .iter()
            .map(|(s, p)| (s, p.as_slice()))
            .collect();
        v.sort_by(|a, b| a.0.cmp(b.0));
        v
    }

    /// Applies `f` to every control point, possibly changing the point dimension.
    pub fn map_points(&self, dim: usize, f: impl Fn(&[f64]) -> Vec<f64>) -> Result<Self> {
        let control = self
            .control
            .iter()
            .map(|(s, p)| (s.clone(), f(p)))
            .collect();
        Self::new(self.arity, self.degree, dim, control)
    }

    /// Largest absolute control-point coordinate.
    pub fn max_abs_coord(&self) -> f64 {
        self.control
            .values()
            .flatten()
            .fold(0.0f64, |m, x| m.max(x.abs()))
    }

    /// Evaluates `sum_s P_s * multinomial(d, s) * prod(b_i ^ s_i)`.
    ///
    /// The Bernstein form is a homogeneous polynomial, so any argument is
    /// accepted; affine evaluation needs `sum(bary) == 1`. `0^0` is 1.
    pub fn eval(&self, bary: &[f64]) -> Result<Vec<f64>> {
        if bary.len() != self.arity {
            return Err(Error::Dimension {
                expected: self.arity,
                got: bary.len(),
            });
        }
        let d = self.degree as usize;
        let powers: Vec<Vec<f64>> = bary
            .iter()
            .map(|&b| {
                let mut row = Vec::with_capacity(d + 1);
                let mut acc = 1.0;
                for _ in 0..=d {
                    row.push(acc);
                    acc *= b;
                }
                row
            })
            .collect();
        let mut out = vec![0.0; self.dim];
        for s in multiindex::labels(self.arity, self.degree) {
            let p = &self.control[&s];
            let mut basis = multinomial(u64::from(self.degree), &s)? as f64;
            for (i, &si) in s.entries().iter().enumerate() {
                basis *= powers[i][si as usize];
            }
            for (o, x) in out.iter_mut().zip(p) {
                *o += basis * x;
            }
        }
        Ok(out)
    }

    /// The blossom `Δ_0(p_1, ..., p_k)` with `k = degree`, computed by the
    /// literal recursion `Δ_s(p_1..p_k) = sum_i p_k^i Δ_{s+e_i}(p_1..p_{k-1})`.
    ///
    /// Exponential in the degree; intended for checking.
    pub fn polar(&self, args: &[&[f64]]) -> Result<Vec<f64>> {
        if args.len() != self.degree as usize {
            return Err(Error::BlossomArity {
                expected: self.degree as usize,
                got: args.len(),
            });
        }
        for a in args {
            if a.len() != self.arity {
                return Err(Error::Dimension {
                    expected: self.arity,
                    got: a.len(),
                });
            }
        }
        Ok(self.delta(&MultiIndex::zero(self.arity), args))
    }

    fn delta(&self, s: &MultiIndex, args: &[&[f64]]) -> Vec<f64> {
        let mut out = vec![0.0; self.dim];
        let Some((last, rest)) = args.split_last() else {
            out.copy_from_slice(&self.control[s]);
            return out;
        };
        for (i, &w) in last.iter().enumerate() {
            let inner = self.delta(&s.plus_unit(i), rest);
            for (o, x) in out.iter_mut().zip(&inner) {
                *o += w * x;
            }
        }
        out
    }
}

fn check_composable(f: &BezierSimplex, g: &BezierSimplex) -> Result<()> {
    if g.dim != f.arity {
        return Err(Error::CompositionArity {
            inner_dim: g.dim,
            outer_arity: f.arity,
        });
    }
    Ok(())
}

fn out_degree(f: &BezierSimplex, g: &BezierSimplex) -> Result<u32> {
    f.degree.checked_mul(g.degree).ok_or(Error::Overflow)
}

/// `F ∘ G` by direct summation over ordered tuples of `G` labels.
///
/// Cost grows like `|L(G)|^deg(F)` times a `arity(F)^deg(F)` blossom; keep
/// `deg(F) * deg(G)` small.
pub fn compose_naive(f: &BezierSimplex, g: &BezierSimplex) -> Result<BezierSimplex> {
    check_composable(f, g)?;
    let dh = out_degree(f, g)?;
    let mut acc: HashMap<MultiIndex, Vec<f64>> = multiindex::labels(g.arity, dh)
        .map(|s| (s, vec![0.0; f.dim]))
        .collect();

    let g_pts = g.sorted_points();
    let g_mult: Vec<u128> = g_pts
        .iter()
        .map(|(s, _)| multinomial(u64::from(g.degree), s))
        .collect::<Result<_>>()?;

    let df = f.degree as usize;
    let mut tuple = vec![0usize; df];
    loop {
        let mut sum = MultiIndex::zero(g.arity);
        let mut coef: u128 = 1;
        for &t in &tuple {
            sum = &sum + g_pts[t].0;
            coef = coef.checked_mul(g_mult[t]).ok_or(Error::Overflow)?;
        }
        let args: Vec<&[f64]> = tuple.iter().map(|&t| g_pts[t].1).collect();
        let value = f.delta(&MultiIndex::zero(f.arity), &args);
        let scale = coef as f64 / multinomial(u64::from(dh), &sum)? as f64;
        for (o, x) in acc.get_mut(&sum).expect("sum of labels").iter_mut().zip(&value) {
            *o += scale * x;
        }

        // odometer over g_pts^df
        let mut k = 0;
        while k < df {
            tuple[k] += 1;
            if tuple[k] < g_pts.len() {
                break;
            }
            tuple[k] = 0;
            k += 1;
        }
        if k == df {
            break;
        }
    }
    BezierSimplex::new(g.arity, dh, f.dim, acc)
}

/// Partially evaluated blossom tables of `F`.
///
/// Level `k` (0-based) holds points labelled by `L(arity, deg - k)`; level 0
/// is the control net of `F`. Evaluating the blossom at one more argument `p`
/// fills level `k + 1` from level `k` as `sum_i p^i T_k[s + e_i]`.
struct BlossomTables {
    dim: usize,
    arity: usize,
    /// `children[k][j * arity + i]` = row of `label_j + e_i` in level `k`,
    /// for `label_j` in level `k + 1`.
    children: Vec<Vec<usize>>,
    tables: Vec<Vec<f64>>,
}

impl BlossomTables {
    fn new(f: &BezierSimplex) -> Self {
        let df = f.degree;
        let levels: Vec<Vec<MultiIndex>> = (0..=df)
            .map(|k| multiindex::enumerate_labels(f.arity, df - k))
            .collect();
        let mut children = Vec::with_capacity(df as usize);
        for k in 0..df as usize {
            let index: HashMap<&MultiIndex, usize> =
                levels[k].iter().enumerate().map(|(j, s)| (s, j)).collect();
            let mut ch = Vec::with_capacity(levels[k + 1].len() * f.arity);
            for s in &levels[k + 1] {
                for i in 0..f.arity {
                    ch.push(index[&s.plus_unit(i)]);
                }
            }
            children.push(ch);
        }
        let mut tables: Vec<Vec<f64>> = levels
            .iter()
            .map(|l| vec![0.0; l.len() * f.dim])
            .collect();
        for (j, s) in levels[0].iter().enumerate() {
            tables[0][j * f.dim..(j + 1) * f.dim].copy_from_slice(&f.control[s]);
        }
        BlossomTables {
            dim: f.dim,
            arity: f.arity,
            children,
            tables,
        }
    }

    /// Fills level `k + 1` from level `k` with argument `p`.
    fn step(&mut self, k: usize, p: &[f64]) {
        let (lo, hi) = self.tables.split_at_mut(k + 1);
        let src = &lo[k];
        let dst = &mut hi[0];
        let dim = self.dim;
        for (j, out) in dst.chunks_exact_mut(dim).enumerate() {
            out.fill(0.0);
            let ch = &self.children[k][j * self.arity..(j + 1) * self.arity];
            for (&w, &c) in p.iter().zip(ch) {
                if w == 0.0 {
                    continue;
                }
                for (o, x) in out.iter_mut().zip(&src[c * dim..(c + 1) * dim]) {
                    *o += w * x;
                }
            }
        }
    }

    fn result(&self) -> &[f64] {
        self.tables.last().expect("at least one level")
    }
}

struct Composer<'a> {
    f_degree: usize,
    g_pts: Vec<(&'a MultiIndex, &'a [f64])>,
    g_mult: Vec<u128>,
    tables: BlossomTables,
    acc: HashMap<MultiIndex, Vec<f64>>,
}

impl Composer<'_> {
    /// Walks non-decreasing tuples of `G` labels (by lexicographic rank),
    /// starting at rank `start`. `coef` carries `deg(F)!` times the `G`
    /// multinomials divided by the factorials of repeated arguments; `mu` is
    /// the multiplicity the label at `start` would reach if chosen again.
    fn rec(&mut self, k: usize, start: usize, sum: &MultiIndex, coef: u128, mut mu: u128) -> Result<()> {
        if k == self.f_degree {
            let scale = coef as f64;
            let value = self.tables.result();
            let out = self.acc.get_mut(sum).expect("label of the composed net");
            for (o, x) in out.iter_mut().zip(value) {
                *o += scale * x;
            }
            return Ok(());
        }
        for t in start..self.g_pts.len() {
            let (label, point) = self.g_pts[t];
            self.tables.step(k, point);
            let next = coef.checked_mul(self.g_mult[t]).ok_or(Error::Overflow)? / mu;
            self.rec(k + 1, t, &(sum + label), next, mu + 1)?;
            mu = 1;
        }
        Ok(())
    }
}

/// `F ∘ G` by the cached-blossom recursion over non-decreasing argument tuples.
///
/// Combinatorial factors are carried as exact integers; they enter floating
/// point only when scaling an accumulated blossom value.
pub fn compose(f: &BezierSimplex, g: &BezierSimplex) -> Result<BezierSimplex> {
    check_composable(f, g)?;
    let dh = out_degree(f, g)?;
    let acc: HashMap<MultiIndex, Vec<f64>> = multiindex::labels(g.arity, dh)
        .map(|s| (s, vec![0.0; f.dim]))
        .collect();
    let g_pts = g.sorted_points();
    let g_mult = g_pts
        .iter()
        .map(|(s, _)| multinomial(u64::from(g.degree), s))
        .collect::<Result<Vec<_>>>()?;

    let mut composer = Composer {
        f_degree: f.degree as usize,
        g_pts,
        g_mult,
        tables: BlossomTables::new(f),
        acc,
    };
    composer.rec(
        0,
        0,
        &MultiIndex::zero(g.arity),
        factorial(u64::from(f.degree))?,
        1,
    )?;

    let mut acc = composer.acc;
    for (s, p) in acc.iter_mut() {
        let m = multinomial(u64::from(dh), s)? as f64;
        for x in p.iter_mut() {
            *x /= m;
        }
    }
    BezierSimplex::new(g.arity, dh, f.dim, acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_simplex(rng: &mut ChaCha8Rng, arity: usize, degree: u32, dim: usize) -> BezierSimplex {
        BezierSimplex::from_fn(arity, degree, dim, |_| {
            (0..dim).map(|_| rng.gen_range(-1.0..1.0)).collect()
        })
        .unwrap()
    }

    fn random_bary(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
        let w: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..1.0)).collect();
        let s: f64 = w.iter().sum();
        w.into_iter().map(|x| x / s).collect()
    }

    /// Repeated affine averaging over the label lattice.
    fn de_casteljau(f: &BezierSimplex, b: &[f64]) -> Vec<f64> {
        let mut level: HashMap<MultiIndex, Vec<f64>> = f.control().clone();
        for r in (0..f.degree()).rev() {
            level = multiindex::labels(f.arity(), r)
                .map(|s| {
                    let mut p = vec![0.0; f.dim()];
                    for (i, &w) in b.iter().enumerate() {
                        for (o, x) in p.iter_mut().zip(&level[&s.plus_unit(i)]) {
                            *o += w * x;
                        }
                    }
                    (s, p)
                })
                .collect();
        }
        level.into_values().next().unwrap()
    }

    fn max_diff(a: &[f64], b: &[f64]) -> f64 {
        a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
    }

    #[test]
    fn rejects_incomplete_net() {
        let mut control = HashMap::new();
        control.insert(MultiIndex::from([1, 0]), vec![0.0]);
        let err = BezierSimplex::new(2, 1, 1, control).unwrap_err();
        assert!(matches!(err, Error::MissingLabel(s) if s == MultiIndex::from([0, 1])));
    }

    #[test]
    fn eval_at_corners() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for d in 0..4 {
            let f = random_simplex(&mut rng, 3, d, 2);
            for i in 0..3 {
                let mut e = vec![0.0; 3];
                e[i] = 1.0;
                let p = f.eval(&e).unwrap();
                assert_eq!(p, f.point(&MultiIndex::unit(3, i, d)).unwrap());
            }
        }
    }

    #[test]
    fn eval_matches_de_casteljau() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let f = random_simplex(&mut rng, 3, 2, 3);
        let third = 1.0 / 3.0;
        let b = [third, third, third];
        assert!(max_diff(&f.eval(&b).unwrap(), &de_casteljau(&f, &b)) < 1e-14);
        for _ in 0..20 {
            let f = random_simplex(&mut rng, 4, 4, 2);
            let b = random_bary(&mut rng, 4);
            assert!(max_diff(&f.eval(&b).unwrap(), &de_casteljau(&f, &b)) < 1e-13);
        }
    }

    #[test]
    fn eval_wrong_arity() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let f = random_simplex(&mut rng, 3, 2, 3);
        assert!(matches!(f.eval(&[0.5, 0.5]), Err(Error::Dimension { expected: 3, got: 2 })));
    }

    #[test]
    fn polar_agrees_with_eval_on_diagonal() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let f = random_simplex(&mut rng, 3, 3, 2);
        let b = random_bary(&mut rng, 3);
        let q = f.polar(&[&b, &b, &b]).unwrap();
        assert!(max_diff(&q, &f.eval(&b).unwrap()) < 1e-14);
    }

    #[test]
    fn affine_composition() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let f = random_simplex(&mut rng, 3, 1, 2);
        let g = random_simplex(&mut rng, 4, 1, 3);
        let h = compose(&f, &g).unwrap();
        assert_eq!(h.phi(), (4, 1, 2));
        for i in 0..4 {
            let label = MultiIndex::unit(4, i, 1);
            let expected = f.eval(g.point(&label).unwrap()).unwrap();
            assert!(max_diff(h.point(&label).unwrap(), &expected) < 1e-14);
        }
    }

    #[test]
    fn phi_arithmetic() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let f = random_simplex(&mut rng, 4, 1, 3);
        let g = random_simplex(&mut rng, 3, 2, 4);
        assert_eq!(compose_naive(&f, &g).unwrap().phi(), (3, 2, 3));
        assert_eq!(compose(&f, &g).unwrap().phi(), (3, 2, 3));

        let f = random_simplex(&mut rng, 5, 5, 4);
        let g = random_simplex(&mut rng, 4, 3, 5);
        assert_eq!(compose(&f, &g).unwrap().phi(), (4, 15, 4));
    }

    #[test]
    fn arity_mismatch() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let f = random_simplex(&mut rng, 4, 1, 3);
        let g = random_simplex(&mut rng, 3, 2, 3);
        assert!(matches!(
            compose(&f, &g),
            Err(Error::CompositionArity { inner_dim: 3, outer_arity: 4 })
        ));
        assert!(compose_naive(&f, &g).is_err());
    }

    #[test]
    fn identity_composition() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let f = random_simplex(&mut rng, 3, 3, 2);
        let id = BezierSimplex::from_fn(3, 1, 3, |s| s.entries().iter().map(|&x| f64::from(x)).collect())
            .unwrap();
        let h = compose(&f, &id).unwrap();
        assert_eq!(h.phi(), f.phi());
        for (s, p) in f.control() {
            assert!(max_diff(h.point(s).unwrap(), p) < 1e-15);
        }
    }

    #[test]
    fn pointwise_composition() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let f = random_simplex(&mut rng, 3, 2, 2);
        let g = random_simplex(&mut rng, 2, 2, 3);
        let naive = compose_naive(&f, &g).unwrap();
        let fast = compose(&f, &g).unwrap();
        for _ in 0..50 {
            let b = random_bary(&mut rng, 2);
            let direct = f.eval(&g.eval(&b).unwrap()).unwrap();
            assert!(max_diff(&naive.eval(&b).unwrap(), &direct) < 1e-10);
            assert!(max_diff(&fast.eval(&b).unwrap(), &direct) < 1e-10);
        }
    }

    #[test]
    fn degenerate_degrees() {
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        // constant outer map
        let f = random_simplex(&mut rng, 3, 0, 2);
        let g = random_simplex(&mut rng, 2, 2, 3);
        let h = compose(&f, &g).unwrap();
        assert_eq!(h.phi(), (2, 0, 2));
        assert_eq!(h.point(&MultiIndex::zero(2)).unwrap(), f.point(&MultiIndex::zero(3)).unwrap());
        assert_eq!(compose_naive(&f, &g).unwrap(), h);

        // constant inner map
        let f = random_simplex(&mut rng, 3, 2, 2);
        let g = random_simplex(&mut rng, 2, 0, 3);
        let h = compose(&f, &g).unwrap();
        assert_eq!(h.phi(), (2, 0, 2));
        let expected = f.eval(g.point(&MultiIndex::zero(2)).unwrap()).unwrap();
        assert!(max_diff(h.point(&MultiIndex::zero(2)).unwrap(), &expected) < 1e-14);
        let naive = compose_naive(&f, &g).unwrap();
        assert!(max_diff(naive.point(&MultiIndex::zero(2)).unwrap(), &expected) < 1e-14);
    }
}
