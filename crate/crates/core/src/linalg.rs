//! Fraction-free determinants over `Z[λ]`.
//!
//! Used as an independent route to characteristic polynomials: it knows
//! nothing about the branch structure of a starlike tree, only its matrix.

use crate::poly::IntPolynomial;
use crate::trees::LabeledAdjacency;

/// Determinant of a square matrix with polynomial entries by Bareiss
/// elimination. Every intermediate division is exact.
pub fn bareiss_determinant(mut m: Vec<Vec<IntPolynomial>>) -> IntPolynomial {
    let n = m.len();
    if n == 0 {
        return IntPolynomial::one();
    }
    let mut negate = false;
    let mut prev = IntPolynomial::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return IntPolynomial::zero();
            };
            m.swap(k, swap);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev).expect("Bareiss quotients are exact");
            }
            m[i][k] = IntPolynomial::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// `det(λI − A)`
pub fn charpoly_by_determinant(adj: &LabeledAdjacency) -> IntPolynomial {
    let n = adj.order();
    let minus_one = IntPolynomial::from_i64s(&[-1]);
    let m = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        IntPolynomial::x()
                    } else if adj.get(i, j) {
                        minus_one.clone()
                    } else {
                        IntPolynomial::zero()
                    }
                })
                .collect()
        })
        .collect();
    bareiss_determinant(m)
}
