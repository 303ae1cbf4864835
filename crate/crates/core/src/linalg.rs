//! Small exact linear algebra helpers: rational matrix inversion for
//! Cartan solves and fraction-free (Bareiss) determinants.
//!
//! Everything here is sized for rank <= ~25 matrices; no pivd strategies
//! beyond simple partial pivoting on nonzero entries are needed because the
//! inputs (Cartan matrices, Gram matrices of root/weight lattices) are
//! well-conditioned in the exact sense: they are invertible over Q.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Signed, Zero};

/// Invert a square integer matrix over the rationals.
///
/// Panics if the matrix is singular; callers only pass Cartan matrices,
/// which are invertible for every finite type.
pub fn invert_integer_matrix(a: &[Vec<i64>]) -> Vec<Vec<Rational64>> {
    let n = a.len();
    let mut work: Vec<Vec<Rational64>> = a
        .iter()
        .map(|row| row.iter().map(|&x| Rational64::from_integer(x)).collect())
        .collect();
    let mut inv: Vec<Vec<Rational64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Rational64::one()
                    } else {
                        Rational64::zero()
                    }
                })
                .collect()
        })
        .collect();

    for col in 0..n {
        let pivot_row = (col..n)
            .find(|&r| !work[r][col].is_zero())
            .expect("singular matrix");
        work.swap(col, pivot_row);
        inv.swap(col, pivot_row);
        let pivot = work[col][col];
        for j in 0..n {
            work[col][j] /= pivot;
            inv[col][j] /= pivot;
        }
        for r in 0..n {
            if r != col && !work[r][col].is_zero() {
                let factor = work[r][col];
                for j in 0..n {
                    let w = work[col][j];
                    let v = inv[col][j];
                    work[r][j] -= factor * w;
                    inv[r][j] -= factor * v;
                }
            }
        }
    }
    inv
}

/// Determinant of an integer matrix by fraction-free Bareiss elimination.
///
/// Intermediate entries are minors of the input, so everything stays in Z;
/// no rational arithmetic and no floating point.
pub fn bareiss_det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let swap = (k + 1..n).find(|&r| !a[r][k].is_zero());
            match swap {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero(), "Bareiss division must be exact");
                a[i][j] = q;
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// Determinant of an exact rational matrix: clear denominators, run the
/// integer Bareiss elimination, and divide back out.
pub fn rational_det(m: &[Vec<BigRational>]) -> BigRational {
    let n = m.len();
    if n == 0 {
        return BigRational::one();
    }
    let mut lcm = BigInt::one();
    for row in m {
        for x in row {
            lcm = lcm.lcm(x.denom());
        }
    }
    let scaled: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| x.numer() * (&lcm / x.denom()))
                .collect()
        })
        .collect();
    let det = bareiss_det(&scaled);
    let mut denom = BigInt::one();
    for _ in 0..n {
        denom *= &lcm;
    }
    BigRational::new(det, denom)
}

/// Content (gcd of all entries) of an integer matrix; zero for the empty matrix.
pub fn matrix_content(m: &[Vec<BigInt>]) -> BigInt {
    let mut g = BigInt::zero();
    for row in m {
        for x in row {
            g = g.gcd(x);
        }
    }
    g.abs()
}
