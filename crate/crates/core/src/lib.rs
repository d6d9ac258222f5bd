//! Exact arithmetic for continued-fraction Möbius maps, intersection
//! matrices of curve configurations, and Camacho-Sad index cycles.
//!
//! Everything is computed over `ℤ` and `ℚ`; there is no floating point.

pub mod camacho_sad;
pub mod error;
pub mod graph;
pub mod int_serde;
pub mod matrix;
pub mod moebius;
pub mod multiset;
pub mod phi;
pub mod poly;
pub mod rational;

pub use camacho_sad::{
    cs_index_linear, cs_sum_check, cycle_closure_holds, cycle_matrix, obstruction_sweep, propagate_cycle,
    reciprocal_pair_check, trivial_log_tangent_obstruction, CurveIndexRecord, CyclePropagation,
    LinearSingularity, ObstructionVerdict, SweepBounds, SweepSummary,
};
pub use error::{Error, Result};
pub use graph::{ConfigClass, Curve, CurveConfiguration, Intersection};
pub use matrix::{DefinitenessVerdict, IntersectionMatrix};
pub use moebius::{FixedPoints, MoebiusMap};
pub use phi::{
    all_permutations_identity, b_polynomial, expected_lemma_survivors, is_identity_phi, lemma_scan, phi_coefficients,
    phi_eval_nested, phi_map, remark_table, PhiCoefficients, RemarkRow, StepSequence, DEFAULT_PERMUTATION_GUARD,
};
pub use poly::{IntPolynomial, Monomial};
pub use rational::{ProjectivePoint, Rational};
