//! Exact integer linear algebra.

use num_traits::{One, Signed, Zero};
use std::ops::{Div, Mul, Sub};

/// Scalar usable by the fraction-free determinant: a signed ring with exact division.
pub trait ExactRing:
    Clone + Zero + One + Signed + Mul<Output = Self> + Sub<Output = Self> + Div<Output = Self>
{
}

impl<T> ExactRing for T where
    T: Clone + Zero + One + Signed + Mul<Output = T> + Sub<Output = T> + Div<Output = T>
{
}

/// Determinant by Bareiss elimination. Every intermediate value is itself a minor,
/// so the divisions are exact and nothing leaves the integers.
pub fn bareiss_det<T: ExactRing>(mut a: Vec<Vec<T>>) -> T {
    let n = a.len();
    if n == 0 {
        return T::one();
    }
    let mut sign = T::one();
    let mut prev = T::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return T::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[i][j].clone() * a[k][k].clone() - a[i][k].clone() * a[k][j].clone();
                a[i][j] = v / prev.clone();
            }
            a[i][k] = T::zero();
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// Square submatrix on the given rows and columns.
pub fn submatrix<T: Clone>(a: &[Vec<T>], rows: &[usize], cols: &[usize]) -> Vec<Vec<T>> {
    rows.iter()
        .map(|&r| cols.iter().map(|&c| a[r][c].clone()).collect())
        .collect()
}
