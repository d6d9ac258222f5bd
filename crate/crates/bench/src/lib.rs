//! Deterministic inputs shared by the benchmarks.

use phicycle_core::{CurveConfiguration, IntersectionMatrix, StepSequence};

/// A step sequence of length `r` cycling through `-3..=3`.
pub fn steps(r: usize) -> StepSequence {
    let xs: Vec<i64> = (0..r).map(|i| (i as i64 * 5) % 7 - 3).collect();
    StepSequence::from_i64s(&xs).expect("r >= 1")
}

/// Cycle of `r` rational curves with self-intersections `-2, -3, -2, -3, …`.
pub fn cycle_matrix(r: usize) -> IntersectionMatrix {
    let e: Vec<_> = (0..r).map(|i| if i % 2 == 0 { (-2).into() } else { (-3).into() }).collect();
    CurveConfiguration::rational_cycle(&e).expect("r >= 2").intersection_matrix()
}
