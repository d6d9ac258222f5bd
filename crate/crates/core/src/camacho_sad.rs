//! Camacho-Sad index bookkeeping along invariant curves.
//!
//! Around a cycle of rational curves `C₁, …, C_r` with self-intersections
//! `e_i`, the index at the next singular point is determined by the current
//! one through `x ↦ 1/(e_i − x)`. Going once around the cycle therefore
//! applies Φ_{e₁..e_r}, and a global framing forces Φ to fix every index.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::CurveConfiguration;
use crate::matrix::{DefinitenessVerdict, IntersectionMatrix};
use crate::moebius::MoebiusMap;
use crate::phi::{all_permutations_identity, StepSequence};
use crate::rational::{ProjectivePoint, Rational};

/// Local model `λ·x·dy − μ·y·dx` of a reduced singularity on the curve `y = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSingularity {
    lambda: Rational,
    mu: Rational,
}

impl LinearSingularity {
    pub fn new(lambda: Rational, mu: Rational) -> Result<Self> {
        if mu.is_zero() {
            return Err(Error::ZeroMu);
        }
        Ok(LinearSingularity { lambda, mu })
    }

    pub fn lambda(&self) -> &Rational {
        &self.lambda
    }

    pub fn mu(&self) -> &Rational {
        &self.mu
    }
}

/// Index of the linear model along `y = 0`: `λ/μ`.
pub fn cs_index_linear(s: &LinearSingularity) -> Rational {
    s.lambda.checked_div(&s.mu).expect("mu is nonzero by construction")
}

/// Self-intersection of an invariant curve and the indices at the
/// singularities lying on it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveIndexRecord {
    #[serde(with = "crate::int_serde")]
    pub self_intersection: BigInt,
    pub indices: Vec<Rational>,
}

/// Whether the indices sum exactly to the self-intersection.
pub fn cs_sum_check(rec: &CurveIndexRecord) -> bool {
    rec.indices.iter().sum::<Rational>() == Rational::from_integer(rec.self_intersection.clone())
}

/// Whether `x·y = 1` on the projective line.
pub fn reciprocal_pair_check(x: &ProjectivePoint, y: &ProjectivePoint) -> bool {
    x.reciprocal() == *y
}

/// Indices `x₁, …, x_{r+1}` met while walking once around a cycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclePropagation {
    pub steps: StepSequence,
    pub trace: Vec<ProjectivePoint>,
}

impl CyclePropagation {
    pub fn start(&self) -> &ProjectivePoint {
        &self.trace[0]
    }

    pub fn end(&self) -> &ProjectivePoint {
        self.trace.last().expect("trace has r + 1 >= 2 points")
    }

    pub fn closes(&self) -> bool {
        self.start() == self.end()
    }
}

/// Walks `x_{i+1} = 1/(e_i − x_i)` from `x₁ = x0`. A pole sends the index to
/// infinity and the walk continues from there.
pub fn propagate_cycle(e: &StepSequence, x0: &ProjectivePoint) -> CyclePropagation {
    let mut trace = Vec::with_capacity(e.len() + 1);
    trace.push(x0.clone());
    for ei in e.steps() {
        let x = trace.last().expect("nonempty");
        trace.push(MoebiusMap::step(ei).apply(x));
    }
    CyclePropagation { steps: e.clone(), trace }
}

pub fn cycle_closure_holds(e: &StepSequence, x0: &ProjectivePoint) -> bool {
    propagate_cycle(e, x0).closes()
}

/// Intersection matrix of a cycle of rational curves with the given
/// self-intersections.
pub fn cycle_matrix(e: &StepSequence) -> Result<IntersectionMatrix> {
    Ok(CurveConfiguration::rational_cycle(e.steps())?.intersection_matrix())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ObstructionVerdict {
    pub permutation_identity: bool,
    pub negative_definite_cycle: bool,
    pub obstructed: bool,
}

/// Tests whether a cycle with self-intersections `e` could carry a trivial
/// logarithmic tangent sheaf while being contractible: that would need Φ to
/// be the identity for every ordering of `e` *and* a negative-definite
/// intersection matrix. `obstructed` is set when both hold, which should
/// never happen.
pub fn trivial_log_tangent_obstruction(e: &StepSequence) -> Result<ObstructionVerdict> {
    if e.len() < 2 {
        return Err(Error::CycleTooShort(e.len()));
    }
    let negative_definite_cycle = cycle_matrix(e)?.definiteness() == DefinitenessVerdict::NegativeDefinite;
    let permutation_identity = all_permutations_identity(e);
    Ok(ObstructionVerdict {
        permutation_identity,
        negative_definite_cycle,
        obstructed: permutation_identity && negative_definite_cycle,
    })
}

/// Bounds for an exhaustive obstruction sweep: every cycle length in
/// `r_min..=r_max` and every self-intersection in `e_min..=e_max`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepBounds {
    pub r_min: usize,
    pub r_max: usize,
    pub e_min: i64,
    pub e_max: i64,
}

impl SweepBounds {
    pub fn validate(&self, guard: usize) -> Result<()> {
        if self.r_min < 2 {
            return Err(Error::CycleTooShort(self.r_min));
        }
        if self.r_min > self.r_max {
            return Err(Error::InvalidBounds(format!("r_min {} > r_max {}", self.r_min, self.r_max)));
        }
        if self.e_min > self.e_max {
            return Err(Error::InvalidBounds(format!("e_min {} > e_max {}", self.e_min, self.e_max)));
        }
        if self.r_max > guard {
            return Err(Error::GuardExceeded { len: self.r_max, guard });
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub bounds: SweepBounds,
    /// Number of step tuples examined.
    pub checked: u64,
    /// Tuples whose cycle matrix is negative definite.
    pub negative_definite: u64,
    /// Tuples passing the all-orderings identity test.
    pub permutation_identity: u64,
    /// Tuples with `obstructed = true`, sorted. Expected to be empty.
    pub counterexamples: Vec<StepSequence>,
}

/// Evaluates the obstruction verdict on every ordered tuple within
/// `bounds`. Aggregation is order independent, so the summary does not
/// depend on the number of rayon workers.
pub fn obstruction_sweep(bounds: SweepBounds, guard: usize) -> Result<SweepSummary> {
    bounds.validate(guard)?;
    let width = u64::try_from(bounds.e_max - bounds.e_min)
        .ok()
        .and_then(|w| w.checked_add(1))
        .ok_or_else(|| Error::InvalidBounds("self-intersection range too wide".into()))?;

    let mut summary = SweepSummary {
        bounds,
        checked: 0,
        negative_definite: 0,
        permutation_identity: 0,
        counterexamples: Vec::new(),
    };
    for r in bounds.r_min..=bounds.r_max {
        let total = width
            .checked_pow(r as u32)
            .ok_or_else(|| Error::InvalidBounds(format!("{width}^{r} tuples overflow")))?;
        let (nd, pi, mut bad) = (0..total)
            .into_par_iter()
            .map(|mut idx| {
                let mut t = vec![0i64; r];
                for slot in t.iter_mut().rev() {
                    *slot = bounds.e_min + (idx % width) as i64;
                    idx /= width;
                }
                let e = StepSequence::from_i64s(&t).expect("r >= 2");
                let v = trivial_log_tangent_obstruction(&e).expect("r >= 2");
                let bad = if v.obstructed { vec![e] } else { Vec::new() };
                (u64::from(v.negative_definite_cycle), u64::from(v.permutation_identity), bad)
            })
            .reduce(
                || (0, 0, Vec::new()),
                |mut x, y| {
                    x.2.extend(y.2);
                    (x.0 + y.0, x.1 + y.1, x.2)
                },
            );
        bad.sort();
        summary.checked += total;
        summary.negative_definite += nd;
        summary.permutation_identity += pi;
        summary.counterexamples.extend(bad);
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn pt(s: &str) -> ProjectivePoint {
        ProjectivePoint::parse_lenient(s).unwrap()
    }

    fn seq(xs: &[i64]) -> StepSequence {
        StepSequence::from_i64s(xs).unwrap()
    }

    #[test]
    fn linear_index_examples() {
        let s = LinearSingularity::new(q("3"), q("2")).unwrap();
        assert_eq!(cs_index_linear(&s), q("3/2"));
        let s = LinearSingularity::new(q("0"), q("-5/3")).unwrap();
        assert_eq!(cs_index_linear(&s), q("0"));
        let s = LinearSingularity::new(q("-7/2"), q("-7/2")).unwrap();
        assert_eq!(cs_index_linear(&s), q("1"));
        assert_eq!(LinearSingularity::new(q("1"), q("0")), Err(Error::ZeroMu));
    }

    #[test]
    fn sum_check_examples() {
        let rec = |e: i64, xs: &[&str]| CurveIndexRecord {
            self_intersection: e.into(),
            indices: xs.iter().map(|s| q(s)).collect(),
        };
        assert!(cs_sum_check(&rec(-2, &["-1", "-1"])));
        assert!(cs_sum_check(&rec(0, &[])));
        assert!(!cs_sum_check(&rec(-1, &["1/2"])));
        assert!(cs_sum_check(&rec(1, &["1/3", "2/3"])));
    }

    #[test]
    fn reciprocal_examples() {
        assert!(reciprocal_pair_check(&pt("3/2"), &pt("2/3")));
        assert!(reciprocal_pair_check(&pt("0"), &pt("inf")));
        assert!(reciprocal_pair_check(&pt("inf"), &pt("0")));
        assert!(!reciprocal_pair_check(&pt("2"), &pt("2")));
        assert!(reciprocal_pair_check(&pt("-1"), &pt("-1")));
    }

    #[test]
    fn propagation_examples() {
        let p = propagate_cycle(&seq(&[-1, -1, -1]), &pt("5/7"));
        assert_eq!(p.trace.len(), 4);
        assert_eq!(p.end(), &pt("5/7"));

        let p = propagate_cycle(&seq(&[2]), &pt("2"));
        assert_eq!(p.end(), &ProjectivePoint::infinity());

        for x in ["0", "-3/4", "inf", "11"] {
            assert_eq!(propagate_cycle(&seq(&[0, 0]), &pt(x)).end(), &pt(x));
        }

        // pole in the middle of the walk: 1/(1 − 1) = ∞, then 1/(3 − ∞) = 0
        let p = propagate_cycle(&seq(&[1, 3]), &pt("1"));
        assert_eq!(p.trace, vec![pt("1"), pt("inf"), pt("0")]);
    }

    #[test]
    fn closure_examples() {
        assert!(cycle_closure_holds(&seq(&[-1, -1, -1]), &pt("-9/4")));
        let p = propagate_cycle(&seq(&[-2, -2, -2]), &pt("1"));
        assert_eq!(p.trace, vec![pt("1"), pt("-1/3"), pt("-3/5"), pt("-5/7")]);
        assert!(!p.closes());
        assert!(cycle_closure_holds(&seq(&[0, 0]), &pt("inf")));
    }

    #[test]
    fn obstruction_examples() {
        let v = trivial_log_tangent_obstruction(&seq(&[-1, -1])).unwrap();
        assert!(!v.permutation_identity);
        assert!(!v.obstructed);

        let v = trivial_log_tangent_obstruction(&seq(&[-1, -1, -1])).unwrap();
        assert_eq!(
            v,
            ObstructionVerdict { permutation_identity: true, negative_definite_cycle: false, obstructed: false }
        );

        let v = trivial_log_tangent_obstruction(&seq(&[-3, -2, -2])).unwrap();
        assert_eq!(
            v,
            ObstructionVerdict { permutation_identity: false, negative_definite_cycle: true, obstructed: false }
        );

        assert_eq!(trivial_log_tangent_obstruction(&seq(&[-2])), Err(Error::CycleTooShort(1)));
    }

    #[test]
    fn verdict_field_names() {
        let v = ObstructionVerdict { permutation_identity: true, negative_definite_cycle: false, obstructed: false };
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            r#"{"permutation_identity":true,"negative_definite_cycle":false,"obstructed":false}"#
        );
    }

    #[test]
    fn small_sweep() {
        let bounds = SweepBounds { r_min: 2, r_max: 3, e_min: -2, e_max: -1 };
        let s = obstruction_sweep(bounds, 8).unwrap();
        assert_eq!(s.checked, 4 + 8);
        // only (−1,−1,−1) passes the identity test in this box
        assert_eq!(s.permutation_identity, 1);
        assert!(s.counterexamples.is_empty());

        let bad = SweepBounds { r_min: 1, ..bounds };
        assert_eq!(obstruction_sweep(bad, 8).map(|_| ()), Err(Error::CycleTooShort(1)));
        let bad = SweepBounds { e_min: 0, e_max: -1, ..bounds };
        assert!(matches!(obstruction_sweep(bad, 8), Err(Error::InvalidBounds(_))));
        let bad = SweepBounds { r_max: 9, ..bounds };
        assert_eq!(obstruction_sweep(bad, 8).map(|_| ()), Err(Error::GuardExceeded { len: 9, guard: 8 }));
    }
}
