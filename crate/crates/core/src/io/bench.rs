//! Timing of the quadrilateral conversion stage.

use std::time::{Duration, Instant};

use crate::convert::{to_quad_spatch_with, Algorithm, Bracketing};
use crate::error::{Error, Result};
use crate::sampling::random_spatch;

/// Largest output degree `(n - 2) d` the naive composition is run at.
pub const NAIVE_DEGREE_LIMIT: u32 = 8;

/// Wall-clock time of [`to_quad_spatch_with`] on a seeded random patch.
pub fn benchmark(sides: usize, depth: u32, algo: Algorithm, seed: u64) -> Result<Duration> {
    if algo == Algorithm::Naive {
        let degree = (sides.saturating_sub(2) as u64) * u64::from(depth);
        if degree > u64::from(NAIVE_DEGREE_LIMIT) {
            return Err(Error::Refused(format!(
                "naive composition at output degree {degree} (limit {NAIVE_DEGREE_LIMIT})"
            )));
        }
    }
    let s = random_spatch(sides, depth, seed)?;
    let start = Instant::now();
    let quad = to_quad_spatch_with(&s, algo, Bracketing::OuterFirst)?;
    let elapsed = start.elapsed();
    debug_assert_eq!(quad.arity(), 4);
    Ok(elapsed)
}

/// Best of `runs` timings.
pub fn benchmark_best(sides: usize, depth: u32, algo: Algorithm, seed: u64, runs: usize) -> Result<Duration> {
    (0..runs.max(1))
        .map(|_| benchmark(sides, depth, algo, seed))
        .try_fold(Duration::MAX, |best, t| Ok(best.min(t?)))
}
