//! Independent reference computations. None of these go through the
//! integer-matrix or characteristic-polynomial code paths they check.
#![allow(dead_code)]

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

/// Nested continued fraction evaluated directly in `ℚ`; `None` on a pole.
pub fn phi_affine(e: &[i64], x: &Q) -> Option<Q> {
    let mut cur = x.clone();
    for &ei in e {
        let den = q(ei) - cur;
        if den.is_zero() {
            return None;
        }
        cur = den.recip();
    }
    Some(cur)
}

/// Φ is the identity iff it fixes three distinct finite points. Samples
/// `k/13` for growing `k` until three pole-free points are found.
pub fn phi_is_identity_by_sampling(e: &[i64]) -> bool {
    let mut fixed = 0;
    for k in 0.. {
        let x = Q::new(k.into(), 13.into());
        match phi_affine(e, &x) {
            None => continue,
            Some(y) if y != x => return false,
            Some(_) => {
                fixed += 1;
                if fixed == 3 {
                    return true;
                }
            }
        }
    }
    unreachable!()
}

/// Determinant by Laplace expansion along the first row.
pub fn laplace_det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return m[0][0];
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i128>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect())
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] * laplace_det(&minor)
        })
        .sum()
}

/// Leading principal minors `D_1..D_n`.
pub fn leading_minors(m: &[Vec<i64>]) -> Vec<i128> {
    (1..=m.len())
        .map(|k| {
            let sub: Vec<Vec<i128>> = m[..k].iter().map(|r| r[..k].iter().map(|&x| x as i128).collect()).collect();
            laplace_det(&sub)
        })
        .collect()
}

/// Sylvester: `M` is negative definite iff `(−1)^k D_k > 0` for all k.
pub fn sylvester_negative_definite(m: &[Vec<i64>]) -> bool {
    leading_minors(m)
        .iter()
        .enumerate()
        .all(|(i, &d)| if i % 2 == 0 { d < 0 } else { d > 0 })
}

/// Gaussian elimination over `ℚ` without pivoting on `−M`; `−M` is
/// positive definite iff every pivot is positive.
pub fn pivot_negative_definite(m: &[Vec<i64>]) -> bool {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m.iter().map(|r| r.iter().map(|&x| -q(x)).collect()).collect();
    for k in 0..n {
        if !a[k][k].is_positive() {
            return false;
        }
        for i in (k + 1)..n {
            let f = &a[i][k] / &a[k][k];
            for j in k..n {
                let t = &f * &a[k][j];
                a[i][j] -= t;
            }
        }
    }
    true
}

pub fn mat_vec(m: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    m.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
}

pub fn is_one(x: &Q) -> bool {
    x.is_one()
}
