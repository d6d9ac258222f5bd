//! Möbius maps `x ↦ (a·x + b)/(c·x + d)` with integer coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::ProjectivePoint;

/// A nondegenerate integer 2×2 matrix `[[a, b], [c, d]]` taken up to scalar.
///
/// Stored in canonical form: the entries are coprime and the first nonzero
/// entry in the order `a, b, c, d` is positive. Equal maps have equal fields.
/// Serialized as the array `[a, b, c, d]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MoebiusMap {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

/// Result of solving `f(x) = x` over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FixedPoints {
    /// `f` is the identity: every point is fixed.
    Identity,
    /// The fixed points are not rational (or not real).
    Irrational,
    /// All rational fixed points, sorted. Possibly including infinity.
    Points(Vec<ProjectivePoint>),
}

impl MoebiusMap {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Result<Self> {
        let (a, b, c, d) = (a.into(), b.into(), c.into(), d.into());
        if (&a * &d - &b * &c).is_zero() {
            return Err(Error::DegenerateMap);
        }
        Ok(Self::normalize(a, b, c, d))
    }

    /// Caller guarantees a nonzero determinant.
    pub(crate) fn normalize(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Self {
        let g = a.gcd(&b).gcd(&c).gcd(&d);
        let mut m = if g.is_one() {
            MoebiusMap { a, b, c, d }
        } else {
            MoebiusMap { a: a / &g, b: b / &g, c: c / &g, d: d / &g }
        };
        let lead = [&m.a, &m.b, &m.c, &m.d]
            .into_iter()
            .find(|x| !x.is_zero())
            .expect("nondegenerate map has a nonzero entry");
        if lead.is_negative() {
            m = MoebiusMap { a: -m.a, b: -m.b, c: -m.c, d: -m.d };
        }
        m
    }

    pub fn identity() -> Self {
        MoebiusMap { a: BigInt::one(), b: BigInt::zero(), c: BigInt::zero(), d: BigInt::one() }
    }

    /// The continued-fraction step `x ↦ 1/(e − x)`, matrix `[[0, 1], [−1, e]]`.
    ///
    /// Returned as stored (not canonicalized) because it is only ever used as
    /// a factor.
    pub fn step(e: &BigInt) -> Self {
        MoebiusMap { a: BigInt::zero(), b: BigInt::one(), c: -BigInt::one(), d: e.clone() }
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }
    pub fn b(&self) -> &BigInt {
        &self.b
    }
    pub fn c(&self) -> &BigInt {
        &self.c
    }
    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn entries(&self) -> [&BigInt; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn canonical(&self) -> Self {
        Self::normalize(self.a.clone(), self.b.clone(), self.c.clone(), self.d.clone())
    }

    /// Raw matrix product `self · other` without canonicalization.
    pub(crate) fn mul_raw(&self, other: &MoebiusMap) -> MoebiusMap {
        MoebiusMap {
            a: &self.a * &other.a + &self.b * &other.c,
            b: &self.a * &other.b + &self.b * &other.d,
            c: &self.c * &other.a + &self.d * &other.c,
            d: &self.c * &other.b + &self.d * &other.d,
        }
    }

    /// The composite `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &MoebiusMap) -> MoebiusMap {
        let m = self.mul_raw(other);
        Self::normalize(m.a, m.b, m.c, m.d)
    }

    pub fn apply(&self, p: &ProjectivePoint) -> ProjectivePoint {
        let (u, v) = (p.u(), p.v());
        let nu = &self.a * u + &self.b * v;
        let nv = &self.c * u + &self.d * v;
        ProjectivePoint::normalize(nu, nv)
    }

    pub fn is_identity(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.a == self.d
    }

    /// Solves `c·x² + (d − a)·x − b = 0` exactly on the projective line.
    pub fn fixed_points(&self) -> FixedPoints {
        if self.is_identity() {
            return FixedPoints::Identity;
        }
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        let mut points = Vec::new();
        if c.is_zero() {
            // ∞ is fixed; the remaining equation is (d − a)·u = b·v.
            points.push(ProjectivePoint::infinity());
            let lin = d - a;
            if !lin.is_zero() {
                points.push(ProjectivePoint::normalize(b.clone(), lin));
            }
        } else {
            let am_d = a - d;
            let disc = &am_d * &am_d + BigInt::from(4) * b * c;
            if disc.is_negative() {
                return FixedPoints::Irrational;
            }
            let root = disc.sqrt();
            if &root * &root != disc {
                return FixedPoints::Irrational;
            }
            let den = BigInt::from(2) * c;
            points.push(ProjectivePoint::normalize(&am_d + &root, den.clone()));
            if !root.is_zero() {
                points.push(ProjectivePoint::normalize(&am_d - &root, den));
            }
        }
        points.sort();
        points.dedup();
        FixedPoints::Points(points)
    }
}

impl fmt::Display for MoebiusMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}, {}]", self.a, self.b, self.c, self.d)
    }
}

impl Serialize for MoebiusMap {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let entries = [self.a.clone(), self.b.clone(), self.c.clone(), self.d.clone()];
        crate::int_serde::vec::serialize(&entries, s)
    }
}

impl<'de> Deserialize<'de> for MoebiusMap {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let v = crate::int_serde::vec::deserialize(d)?;
        let [a, b, c, d]: [BigInt; 4] = v
            .try_into()
            .map_err(|v: Vec<BigInt>| D::Error::invalid_length(v.len(), &"four entries"))?;
        MoebiusMap::new(a, b, c, d).map_err(D::Error::custom)
    }
}
