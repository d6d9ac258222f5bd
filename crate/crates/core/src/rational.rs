//! Exact rationals and points of the rational projective line.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An arbitrary-precision fraction in lowest terms with positive denominator.
///
/// Serialized as the string `"p/q"`, or `"p"` when `q = 1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let (numer, denom) = (numer.into(), denom.into());
        if denom.is_zero() {
            return Err(Error::MalformedRational(format!("{numer}/{denom}")));
        }
        Ok(Rational(BigRational::new(numer, denom)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// `None` when dividing by zero.
    pub fn checked_div(&self, rhs: &Rational) -> Option<Rational> {
        if rhs.is_zero() {
            None
        } else {
            Some(Rational(&self.0 / &rhs.0))
        }
    }

    pub fn recip(&self) -> Option<Rational> {
        Rational::one().checked_div(self)
    }

    pub fn pow(&self, exp: u32) -> Rational {
        Rational(num_traits::pow(self.0.clone(), exp as usize))
    }

    /// Rebuilds the value from its parts, reducing again.
    pub fn canonical(&self) -> Rational {
        Rational(BigRational::new(self.numer().clone(), self.denom().clone()))
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::MalformedRational(s.to_string());
        let t = s.trim();
        let (n, d) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let numer: BigInt = n.parse().map_err(|_| bad())?;
        let denom: BigInt = d.parse().map_err(|_| bad())?;
        if denom.is_zero() {
            return Err(bad());
        }
        Ok(Rational(BigRational::new(numer, denom)))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<&Rational> for &Rational {
            type Output = Rational;
            fn $m(self, rhs: &Rational) -> Rational {
                Rational($tr::$m(&self.0, &rhs.0))
            }
        }
        impl $tr for Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational {
                Rational($tr::$m(self.0, rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| &acc + x)
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A point `(u : v)` of the projective line over the rationals.
///
/// Coordinates are coprime integers and the first nonzero coordinate is
/// positive, so two points are equal exactly when their fields are. The
/// point with `v = 0` is infinity.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjectivePoint {
    u: BigInt,
    v: BigInt,
}

impl ProjectivePoint {
    pub fn new(u: impl Into<BigInt>, v: impl Into<BigInt>) -> Result<Self> {
        let (u, v) = (u.into(), v.into());
        if u.is_zero() && v.is_zero() {
            return Err(Error::MalformedPoint(format!("{u}:{v}")));
        }
        Ok(Self::normalize(u, v))
    }

    /// Caller guarantees `(u, v) != (0, 0)`.
    pub(crate) fn normalize(mut u: BigInt, mut v: BigInt) -> Self {
        debug_assert!(!(u.is_zero() && v.is_zero()));
        let g = u.gcd(&v);
        if !g.is_one() {
            u /= &g;
            v /= &g;
        }
        let lead_negative = if u.is_zero() { v.is_negative() } else { u.is_negative() };
        if lead_negative {
            u = -u;
            v = -v;
        }
        ProjectivePoint { u, v }
    }

    pub fn infinity() -> Self {
        ProjectivePoint { u: BigInt::one(), v: BigInt::zero() }
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Self::normalize(n.into(), BigInt::one())
    }

    pub fn from_rational(x: &Rational) -> Self {
        Self::normalize(x.numer().clone(), x.denom().clone())
    }

    pub fn u(&self) -> &BigInt {
        &self.u
    }

    pub fn v(&self) -> &BigInt {
        &self.v
    }

    pub fn is_infinity(&self) -> bool {
        self.v.is_zero()
    }

    /// The affine value `u / v`, or `None` at infinity.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.is_infinity() {
            None
        } else {
            Some(Rational(BigRational::new(self.u.clone(), self.v.clone())))
        }
    }

    /// The point `(v : u)`, i.e. `1/x` with `1/0 = ∞` and `1/∞ = 0`.
    pub fn reciprocal(&self) -> Self {
        Self::normalize(self.v.clone(), self.u.clone())
    }

    pub fn canonical(&self) -> Self {
        Self::normalize(self.u.clone(), self.v.clone())
    }

    /// Parses `u:v`, `inf`/`infinity`, or a rational `p/q`.
    pub fn parse_lenient(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("inf") || t.eq_ignore_ascii_case("infinity") || t == "∞" {
            return Ok(Self::infinity());
        }
        if t.contains(':') {
            return t.parse();
        }
        t.parse::<Rational>()
            .map(|x| Self::from_rational(&x))
            .map_err(|_| Error::MalformedPoint(s.to_string()))
    }

    /// Human-oriented rendering: the rational value, or `inf`.
    pub fn display_value(&self) -> String {
        match self.to_rational() {
            Some(x) => x.to_string(),
            None => "inf".to_string(),
        }
    }
}

impl From<Rational> for ProjectivePoint {
    fn from(x: Rational) -> Self {
        Self::from_rational(&x)
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.u, self.v)
    }
}

impl FromStr for ProjectivePoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::MalformedPoint(s.to_string());
        let (u, v) = s.trim().split_once(':').ok_or_else(bad)?;
        let u: BigInt = u.trim().parse().map_err(|_| bad())?;
        let v: BigInt = v.trim().parse().map_err(|_| bad())?;
        ProjectivePoint::new(u, v).map_err(|_| bad())
    }
}

impl Serialize for ProjectivePoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ProjectivePoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
