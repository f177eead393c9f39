//! Small dense integer and rational matrix helpers.

use num_rational::Rational64;
use num_traits::{One, Zero};

/// Row-major square integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Mat {
    pub n: usize,
    pub a: Vec<i64>,
}

impl Mat {
    pub fn identity(n: usize) -> Self {
        let mut a = vec![0; n * n];
        for i in 0..n {
            a[i * n + i] = 1;
        }
        Mat { n, a }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.a[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.a[i * self.n + j] = v;
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        let n = self.n;
        let mut a = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let x = self.a[i * n + k];
                if x == 0 {
                    continue;
                }
                for j in 0..n {
                    a[i * n + j] += x * other.a[k * n + j];
                }
            }
        }
        Mat { n, a }
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        let n = self.n;
        (0..n)
            .map(|i| (0..n).map(|j| self.a[i * n + j] * v[j]).sum())
            .collect()
    }
}

pub(crate) fn rat(v: i64) -> Rational64 {
    Rational64::from_integer(v)
}

/// Determinant by fraction-exact Gaussian elimination.
pub(crate) fn det(m: &[Vec<Rational64>]) -> Rational64 {
    let n = m.len();
    let mut a: Vec<Vec<Rational64>> = m.to_vec();
    let mut d = Rational64::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return Rational64::zero();
        };
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        d *= a[c][c];
        for r in c + 1..n {
            if a[r][c].is_zero() {
                continue;
            }
            let f = a[r][c] / a[c][c];
            for k in c..n {
                let t = a[c][k] * f;
                a[r][k] -= t;
            }
        }
    }
    d
}

/// Solves `m x = b` for square nonsingular `m`.
pub(crate) fn solve(m: &[Vec<Rational64>], b: &[Rational64]) -> Option<Vec<Rational64>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational64>> = m
        .iter()
        .zip(b)
        .map(|(row, &bi)| {
            let mut r = row.clone();
            r.push(bi);
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero())?;
        a.swap(p, c);
        let piv = a[c][c];
        for k in c..=n {
            a[c][k] /= piv;
        }
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c];
                for k in c..=n {
                    let t = a[c][k] * f;
                    a[r][k] -= t;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n]).collect())
}

