//! Symmetric integer matrices and an exact negative-definiteness decision.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Square symmetric integer matrix of intersection numbers.
///
/// Built from a curve configuration the off-diagonal entries are
/// nonnegative, but the definiteness test accepts any symmetric matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntersectionMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DefinitenessVerdict {
    NegativeDefinite,
    NegativeSemidefiniteSingular,
    Other,
}

impl fmt::Display for DefinitenessVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DefinitenessVerdict::NegativeDefinite => "NegativeDefinite",
            DefinitenessVerdict::NegativeSemidefiniteSingular => "NegativeSemidefiniteSingular",
            DefinitenessVerdict::Other => "Other",
        })
    }
}

impl IntersectionMatrix {
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|row| row.len() != n) {
            return Err(Error::NotSquare);
        }
        let entries: Vec<BigInt> = rows.into_iter().flatten().collect();
        for i in 0..n {
            for j in (i + 1)..n {
                if entries[i * n + j] != entries[j * n + i] {
                    return Err(Error::NotSymmetric { row: i, col: j });
                }
            }
        }
        Ok(IntersectionMatrix { n, entries })
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }

    /// Assembles a matrix from an entry function that is symmetric by
    /// construction.
    pub(crate) fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        IntersectionMatrix { n, entries }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        self.entries.chunks(self.n.max(1)).take(self.n).map(<[BigInt]>::to_vec).collect()
    }

    pub fn negated(&self) -> Self {
        IntersectionMatrix { n: self.n, entries: self.entries.iter().map(|x| -x).collect() }
    }

    /// Simultaneous row/column permutation: entry `(i, j)` of the result is
    /// entry `(perm[i], perm[j])` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n, "permutation length must match the matrix size");
        Self::from_fn(self.n, |i, j| self.get(perm[i], perm[j]).clone())
    }

    /// Coefficients of `det(t·I − A)`, leading coefficient first.
    ///
    /// Berkowitz's algorithm: division-free, so every intermediate value is
    /// an exact integer.
    pub fn char_poly(&self) -> Vec<BigInt> {
        let mut coeffs = vec![BigInt::one()];
        for r in 0..self.n {
            // Leading (r+1)×(r+1) block: [[A_r, S], [R, a]].
            let a = self.get(r, r);
            let mut toeplitz = Vec::with_capacity(r + 2);
            toeplitz.push(BigInt::one());
            toeplitz.push(-a);
            // w = A_r^k · S for k = 0..r−1
            let mut w: Vec<BigInt> = (0..r).map(|i| self.get(i, r).clone()).collect();
            for k in 0..r {
                let rw: BigInt = (0..r).map(|j| self.get(r, j) * &w[j]).sum();
                toeplitz.push(-rw);
                if k + 1 < r {
                    w = (0..r)
                        .map(|i| (0..r).map(|j| self.get(i, j) * &w[j]).sum())
                        .collect();
                }
            }
            coeffs = (0..r + 2)
                .map(|i| {
                    (0..=i.min(r))
                        .filter(|&j| i - j < toeplitz.len())
                        .map(|j| &toeplitz[i - j] * &coeffs[j])
                        .sum()
                })
                .collect();
        }
        coeffs
    }

    /// `E_k`, the sum of all k×k principal minors, for `k = 0..=n`.
    pub fn principal_minor_sums(&self) -> Vec<BigInt> {
        self.char_poly()
            .into_iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 0 { c } else { -c })
            .collect()
    }

    pub fn det(&self) -> BigInt {
        self.principal_minor_sums().pop().expect("E_0 always present")
    }

    /// Exact definiteness of the quadratic form.
    ///
    /// For the symmetric matrix `B = −M`, all eigenvalues are positive iff
    /// every principal-minor sum `E_k(B)` is positive, and all are nonnegative
    /// iff every `E_k(B)` is nonnegative.
    pub fn definiteness(&self) -> DefinitenessVerdict {
        let sums = self.negated().principal_minor_sums();
        let tail = &sums[1..];
        if tail.iter().all(Signed::is_positive) {
            DefinitenessVerdict::NegativeDefinite
        } else if tail.iter().all(|x| !x.is_negative()) && sums.last().is_some_and(Zero::is_zero) {
            DefinitenessVerdict::NegativeSemidefiniteSingular
        } else {
            DefinitenessVerdict::Other
        }
    }
}

impl fmt::Display for IntersectionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.rows().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

impl Serialize for IntersectionMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        struct Row<'a>(&'a [BigInt]);
        impl Serialize for Row<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                crate::int_serde::vec::serialize(self.0, s)
            }
        }
        let mut seq = s.serialize_seq(Some(self.n))?;
        for row in self.entries.chunks(self.n.max(1)).take(self.n) {
            seq.serialize_element(&Row(row))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for IntersectionMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct Row(Vec<BigInt>);
        impl<'de> Deserialize<'de> for Row {
            fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
                crate::int_serde::vec::deserialize(d).map(Row)
            }
        }
        let rows: Vec<Row> = Vec::deserialize(d)?;
        IntersectionMatrix::from_rows(rows.into_iter().map(|r| r.0).collect())
            .map_err(serde::de::Error::custom)
    }
}
