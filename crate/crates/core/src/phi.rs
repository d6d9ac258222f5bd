//! The continued-fraction maps
//!
//! ```text
//! Φ_{e₁..e_r}(x) = 1 / (e_r − 1 / (e_{r−1} − … − 1 / (e₁ − x)))
//! ```
//!
//! their symbolic coefficients, and the exhaustive check that Φ is the
//! identity for every reordering of the steps only when all steps are equal
//! to one of −1, 0, 1.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::moebius::MoebiusMap;
use crate::multiset::distinct_permutations;
use crate::poly::IntPolynomial;
use crate::rational::ProjectivePoint;

/// Default ceiling on the length of sequences whose permutations are
/// enumerated exhaustively (8! = 40320 orderings).
pub const DEFAULT_PERMUTATION_GUARD: usize = 8;

/// A nonempty list of integer steps `(e₁, …, e_r)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StepSequence(Vec<BigInt>);

impl StepSequence {
    pub fn new(steps: Vec<BigInt>) -> Result<Self> {
        if steps.is_empty() {
            return Err(Error::EmptySteps);
        }
        Ok(StepSequence(steps))
    }

    pub fn from_i64s(steps: &[i64]) -> Result<Self> {
        Self::new(steps.iter().map(|&e| BigInt::from(e)).collect())
    }

    pub fn steps(&self) -> &[BigInt] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; kept for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// All steps as `i64`, if they fit.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.0.iter().map(ToPrimitive::to_i64).collect()
    }

    pub fn is_constant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }
}

impl fmt::Display for StepSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str(")")
    }
}

impl Serialize for StepSequence {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        crate::int_serde::vec::serialize(&self.0, s)
    }
}

impl<'de> Deserialize<'de> for StepSequence {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let steps = crate::int_serde::vec::deserialize(d)?;
        StepSequence::new(steps).map_err(serde::de::Error::custom)
    }
}

/// Canonical Möbius map of Φ_e, the product `S(e_r)···S(e₁)` of step
/// matrices `S(e) = [[0, 1], [−1, e]]`. Its determinant is 1.
pub fn phi_map(e: &StepSequence) -> MoebiusMap {
    let m = e
        .steps()
        .iter()
        .fold(MoebiusMap::identity(), |acc, ei| MoebiusMap::step(ei).mul_raw(&acc));
    m.canonical()
}

/// Evaluates the nested fraction one step at a time:
/// `(u : v) ↦ (v : e_i·v − u)` for `i = 1..r`.
pub fn phi_eval_nested(e: &StepSequence, x: &ProjectivePoint) -> ProjectivePoint {
    let (mut u, mut v) = (x.u().clone(), x.v().clone());
    for ei in e.steps() {
        let next_v = ei * &v - &u;
        u = std::mem::replace(&mut v, next_v);
    }
    ProjectivePoint::normalize(u, v)
}

pub fn is_identity_phi(e: &StepSequence) -> bool {
    phi_map(e).is_identity()
}

/// Whether Φ is the identity for every distinct reordering of `e`.
pub fn all_permutations_identity(e: &StepSequence) -> bool {
    distinct_permutations(e.steps()).all(|p| is_identity_phi(&StepSequence(p)))
}

/// Symbolic coefficients `(a_r, b_r, c_r, d_r)` of Φ in `ℤ[z₁..z_r]`, so that
/// `Φ(x) = (a_r·x + b_r)/(c_r·x + d_r)` at `z = e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiCoefficients {
    pub rank: usize,
    pub a: IntPolynomial,
    pub b: IntPolynomial,
    pub c: IntPolynomial,
    pub d: IntPolynomial,
}

impl PhiCoefficients {
    /// Evaluates all four coefficients at integer steps. `e` must have at
    /// least `rank` entries.
    pub fn eval(&self, e: &[BigInt]) -> Result<[BigInt; 4]> {
        Ok([
            self.a.eval_integers(e)?,
            self.b.eval_integers(e)?,
            self.c.eval_integers(e)?,
            self.d.eval_integers(e)?,
        ])
    }
}

/// Builds the coefficients by the rank recurrence
/// `a_r = c_{r−1}`, `b_r = d_{r−1}`, `c_r = z_r·c_{r−1} − a_{r−1}`,
/// `d_r = z_r·d_{r−1} − b_{r−1}`, from `(0, 1, −1, z₁)` at rank 1.
pub fn phi_coefficients(r: usize) -> Result<PhiCoefficients> {
    if r == 0 {
        return Err(Error::EmptySteps);
    }
    let mut co = PhiCoefficients {
        rank: 1,
        a: IntPolynomial::zero(),
        b: IntPolynomial::one(),
        c: IntPolynomial::constant(-1),
        d: IntPolynomial::var(0),
    };
    for k in 2..=r {
        let z = k - 1;
        co = PhiCoefficients {
            rank: k,
            c: &co.c.mul_var(z) - &co.a,
            d: &co.d.mul_var(z) - &co.b,
            a: co.c,
            b: co.d,
        };
    }
    Ok(co)
}

/// `b_r` alone, from `b_r = z_{r−1}·b_{r−1} − b_{r−2}` with `b₁ = 1`,
/// `b₂ = z₁`.
pub fn b_polynomial(r: usize) -> Result<IntPolynomial> {
    if r == 0 {
        return Err(Error::EmptySteps);
    }
    let (mut prev, mut cur) = (IntPolynomial::one(), IntPolynomial::var(0));
    if r == 1 {
        return Ok(prev);
    }
    for k in 3..=r {
        let next = &cur.mul_var(k - 2) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(cur)
}

/// The constant tuples an exhaustive scan is expected to return: value 0
/// when `r` is even, values ±1 when `r` is divisible by 3.
pub fn expected_lemma_survivors(r: usize) -> Vec<StepSequence> {
    let mut out: Vec<StepSequence> = [-1i64, 0, 1]
        .into_iter()
        .filter(|&v| remark_expected(r, v))
        .map(|v| StepSequence::from_i64s(&vec![v; r]).expect("r >= 1"))
        .collect();
    out.sort();
    out
}

/// Whether the constant sequence of length `r` with value `v ∈ {−1, 0, 1}`
/// is predicted to give the identity.
pub fn remark_expected(r: usize, v: i64) -> bool {
    match v {
        0 => r % 2 == 0,
        1 | -1 => r % 3 == 0,
        _ => false,
    }
}

/// Enumerates every tuple in `[−bound, bound]^r` and returns, sorted, those
/// for which Φ is the identity under every reordering.
///
/// Identity verdicts are computed once per ordered tuple; each multiset is
/// then judged once through its sorted representative. The result does not
/// depend on the rayon pool the call runs in.
pub fn lemma_scan(r: usize, bound: u32, guard: usize) -> Result<Vec<StepSequence>> {
    if r == 0 {
        return Err(Error::EmptySteps);
    }
    if r > guard {
        return Err(Error::GuardExceeded { len: r, guard });
    }
    if bound == 0 {
        return Err(Error::InvalidBounds("bound must be at least 1".into()));
    }
    let lo = -i64::from(bound);
    let width = 2 * u64::from(bound) + 1;
    let total = u32::try_from(r)
        .ok()
        .and_then(|r| width.checked_pow(r))
        .ok_or_else(|| Error::InvalidBounds(format!("{width}^{r} tuples overflow")))?;

    let decode = |mut idx: u64| -> Vec<i64> {
        let mut t = vec![0i64; r];
        for slot in t.iter_mut().rev() {
            *slot = lo + (idx % width) as i64;
            idx /= width;
        }
        t
    };
    let is_id = |t: &[i64]| is_identity_phi(&StepSequence::from_i64s(t).expect("r >= 1"));

    let identities: HashSet<Vec<i64>> = (0..total)
        .into_par_iter()
        .map(decode)
        .filter(|t| is_id(t))
        .collect();

    let mut survivors: Vec<Vec<i64>> = identities
        .iter()
        .filter(|t| t.windows(2).all(|w| w[0] <= w[1]))
        .filter(|t| distinct_permutations(t).all(|p| identities.contains(&p)))
        .flat_map(|t| distinct_permutations(t))
        .collect();
    survivors.sort();
    Ok(survivors
        .into_iter()
        .map(|t| StepSequence::from_i64s(&t).expect("r >= 1"))
        .collect())
}

/// One row of the constant-step identity table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RemarkRow {
    pub r: usize,
    pub zeros: bool,
    pub ones: bool,
    pub minus_ones: bool,
}

impl RemarkRow {
    pub fn matches_congruences(&self) -> bool {
        self.zeros == remark_expected(self.r, 0)
            && self.ones == remark_expected(self.r, 1)
            && self.minus_ones == remark_expected(self.r, -1)
    }
}

/// Identity status of Φ for the constant steps 0, 1 and −1, for each
/// length `1..=r_max`.
pub fn remark_table(r_max: usize) -> Vec<RemarkRow> {
    let constant = |v: i64, r: usize| is_identity_phi(&StepSequence::from_i64s(&vec![v; r]).expect("r >= 1"));
    (1..=r_max)
        .map(|r| RemarkRow { r, zeros: constant(0, r), ones: constant(1, r), minus_ones: constant(-1, r) })
        .collect()
}

/// Coefficient check used by the two-swap argument: if Φ_e is the identity
/// for `e = (e₁..e_r)`, `r ≥ 3`, then Φ_{e₁..e_{r−2}} must be the map
/// `((1 − e_{r−1}·e_r)·x + e_{r−1}) / (−e_r·x + 1)`.
pub fn truncated_identity_map(e_prev: &BigInt, e_last: &BigInt) -> MoebiusMap {
    MoebiusMap::normalize(BigInt::one() - e_prev * e_last, e_prev.clone(), -e_last, BigInt::one())
}
