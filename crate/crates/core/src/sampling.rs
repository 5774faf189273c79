//! Seeded random patches and stratified interior samples.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::spatch::SPatch;
use crate::wachspress::{DomainPolygon, Point2, DOMAIN_CENTER};

/// Fraction of the polygon kept by [`interior_samples`]; the remaining band
/// along the edges is at least 1% of the apothem wide.
pub const INTERIOR_SHRINK: f64 = 0.99;

/// An S-patch whose control points are uniform in `[-1, 1]^3`.
pub fn random_spatch(sides: usize, depth: u32, seed: u64) -> crate::Result<SPatch> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    SPatch::from_fn(sides, depth, |_| {
        [
            rng.gen_range(-1.0..=1.0),
            rng.gen_range(-1.0..=1.0),
            rng.gen_range(-1.0..=1.0),
        ]
    })
}

/// A dome-shaped S-patch: control point `s` sits above the domain point
/// `sum_i s_i V_i / d` with a smooth height, plus a small seeded jitter.
pub fn dome_spatch(sides: usize, depth: u32, seed: u64) -> crate::Result<SPatch> {
    let poly = DomainPolygon::regular(sides)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d = f64::from(depth.max(1));
    SPatch::from_fn(sides, depth, |s| {
        let mut q = [0.0; 2];
        for (&k, v) in s.entries().iter().zip(poly.vertices()) {
            q[0] += f64::from(k) * v[0] / d;
            q[1] += f64::from(k) * v[1] / d;
        }
        let (x, y) = (q[0] - DOMAIN_CENTER[0], q[1] - DOMAIN_CENTER[1]);
        let r2 = 4.0 * (x * x + y * y);
        let z = 0.4 * (1.0 - r2) + 0.05 * (3.0 * y.atan2(x)).cos() * r2;
        [
            q[0] + 0.01 * rng.gen_range(-1.0..=1.0),
            q[1] + 0.01 * rng.gen_range(-1.0..=1.0),
            z + 0.01 * rng.gen_range(-1.0..=1.0),
        ]
    })
}

/// `count` points strictly inside `poly`, stratified over the fan of
/// triangles around the domain center and kept away from the edges by
/// scaling toward the center with [`INTERIOR_SHRINK`].
pub fn interior_samples(poly: &DomainPolygon, count: usize, seed: u64) -> Vec<Point2> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let verts = poly.vertices();
    let n = verts.len();
    (0..count)
        .map(|k| {
            let a = verts[k % n];
            let b = verts[(k + 1) % n];
            // uniform in the triangle (center, a, b)
            let r1: f64 = rng.gen::<f64>().sqrt();
            let r2: f64 = rng.gen();
            let (wa, wb) = (r1 * (1.0 - r2), r1 * r2);
            let p = [
                DOMAIN_CENTER[0] + wa * (a[0] - DOMAIN_CENTER[0]) + wb * (b[0] - DOMAIN_CENTER[0]),
                DOMAIN_CENTER[1] + wa * (a[1] - DOMAIN_CENTER[1]) + wb * (b[1] - DOMAIN_CENTER[1]),
            ];
            [
                DOMAIN_CENTER[0] + INTERIOR_SHRINK * (p[0] - DOMAIN_CENTER[0]),
                DOMAIN_CENTER[1] + INTERIOR_SHRINK * (p[1] - DOMAIN_CENTER[1]),
            ]
        })
        .collect()
}
