//! Conversion diagnostics.

use std::time::Instant;

use serde::Serialize;

use crate::convert::{change_coords, make_trim_loop, to_tensor, TrimmedPatch};
use crate::error::Result;
use crate::sampling::interior_samples;
use crate::simplex::compose;
use crate::spatch::{distance, Point3, SPatch};
use crate::wachspress::{build_w4inv, build_wn, Point2};

/// Stage timings in milliseconds.
#[derive(Debug, Clone, Default, Serialize)]
pub struct StageTimings {
    pub compose_wn: f64,
    pub compose_w4inv: f64,
    pub change_coords: f64,
    pub to_tensor: f64,
    pub total: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConversionReport {
    pub sides: usize,
    pub depth: u32,
    pub degree: [u32; 2],
    pub grid: [usize; 2],
    pub samples: usize,
    /// Largest distance between the converted and the original surface.
    pub max_oracle_error: f64,
    /// `max_oracle_error` over the control-net bounding-box diagonal.
    pub relative_oracle_error: f64,
    pub min_weight: f64,
    pub max_weight: f64,
    /// Control points (projected) farther than twice the box diagonal from the box.
    pub outlier_count: usize,
    /// Largest projected control-point offset from the box, in box diagonals.
    pub worst_offset_ratio: f64,
    pub timings_ms: StageTimings,
}

pub const OUTLIER_RATIO: f64 = 2.0;

fn ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

/// Bounding-box diagonal of the S-patch control net.
pub fn box_diagonal(s: &SPatch) -> f64 {
    let (lo, hi) = s.bounding_box();
    distance(lo, hi)
}

fn offset_from_box(p: Point3, lo: Point3, hi: Point3) -> f64 {
    (0..3)
        .map(|c| (lo[c] - p[c]).max(p[c] - hi[c]).max(0.0).powi(2))
        .sum::<f64>()
        .sqrt()
}

/// Largest `|T(p) - S(p)|` over `points`.
pub fn oracle_error(s: &SPatch, t: &TrimmedPatch, points: &[Point2]) -> Result<f64> {
    points.iter().try_fold(0.0f64, |m, &p| {
        Ok(m.max(distance(t.eval(p[0], p[1])?, s.eval_uv(p)?)))
    })
}

/// Converts `s`, timing each stage.
pub fn convert_timed(s: &SPatch) -> Result<(TrimmedPatch, StageTimings)> {
    let start = Instant::now();
    let mut timings = StageTimings::default();

    let t0 = Instant::now();
    let stage = compose(&s.homogenize(), &build_wn(s.sides())?)?;
    timings.compose_wn = ms(t0);

    let t0 = Instant::now();
    let quad = compose(&stage, &build_w4inv())?;
    timings.compose_w4inv = ms(t0);

    let t0 = Instant::now();
    let hom = change_coords(&quad)?;
    timings.change_coords = ms(t0);

    let t0 = Instant::now();
    let patch = to_tensor(&hom)?.reverse_v();
    timings.to_tensor = ms(t0);

    let trimmed = TrimmedPatch::new(patch, make_trim_loop(s.sides())?)?;
    timings.total = ms(start);
    Ok((trimmed, timings))
}

/// Builds the diagnostic report for a finished conversion. The oracle error
/// is evaluated here on `samples` fresh interior points.
pub fn build_report(s: &SPatch, t: &TrimmedPatch, timings: StageTimings, samples: usize, seed: u64) -> Result<ConversionReport> {
    let points = interior_samples(s.domain(), samples, seed);
    let max_oracle_error = oracle_error(s, t, &points)?;
    let diag = box_diagonal(s);

    let (mut min_weight, mut max_weight) = (f64::INFINITY, f64::NEG_INFINITY);
    for p in &points {
        let w = t.patch.eval_homogeneous(p[0], p[1])[3];
        min_weight = min_weight.min(w);
        max_weight = max_weight.max(w);
    }

    let (lo, hi) = s.bounding_box();
    let mut outlier_count = 0;
    let mut worst_offset_ratio = 0.0f64;
    for c in t.patch.control() {
        let ratio = if c[3] == 0.0 {
            f64::INFINITY
        } else {
            offset_from_box([c[0] / c[3], c[1] / c[3], c[2] / c[3]], lo, hi) / diag
        };
        if ratio > OUTLIER_RATIO {
            outlier_count += 1;
        }
        if ratio.is_finite() {
            worst_offset_ratio = worst_offset_ratio.max(ratio);
        }
    }

    let (du, dv) = t.patch.degree();
    let (rows, cols) = t.patch.grid_size();
    Ok(ConversionReport {
        sides: s.sides(),
        depth: s.depth(),
        degree: [du, dv],
        grid: [rows, cols],
        samples,
        max_oracle_error,
        relative_oracle_error: max_oracle_error / diag,
        min_weight,
        max_weight,
        outlier_count,
        worst_offset_ratio,
        timings_ms: timings,
    })
}
