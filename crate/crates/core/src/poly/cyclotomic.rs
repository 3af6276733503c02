//! Cyclotomic polynomials and removal of cyclotomic factors.

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::IntPolynomial;

/// `p = Π Φ_m^mult · remainder`, with no cyclotomic factor left in `remainder`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclotomicFactorization {
    /// `(m, multiplicity)` pairs, ascending in `m`.
    pub factors: Vec<(u64, u32)>,
    pub remainder: IntPolynomial,
}

impl CyclotomicFactorization {
    /// Multiply the factorization back out.
    pub fn expand(&self) -> IntPolynomial {
        self.factors.iter().fold(self.remainder.clone(), |acc, &(m, mult)| {
            &acc * &cyclotomic(m).pow(mult)
        })
    }
}

fn prime_factors(mut m: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut e = 0;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

pub fn euler_phi(m: u64) -> u64 {
    prime_factors(m)
        .iter()
        .fold(m, |acc, &(p, _)| acc / p * (p - 1))
}

pub fn mobius(m: u64) -> i8 {
    let f = prime_factors(m);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// The `m`-th cyclotomic polynomial.
///
/// Uses `Φ_m(t) = Φ_r(t^(m/r))` with `r` the radical of `m`, and the Möbius
/// product `Φ_r = Π_{d | r} (t^d − 1)^μ(r/d)` evaluated as one exact division.
pub fn cyclotomic(m: u64) -> IntPolynomial {
    assert!(m >= 1, "cyclotomic index must be positive");
    let primes: Vec<u64> = prime_factors(m).into_iter().map(|(p, _)| p).collect();
    let radical: u64 = primes.iter().product();
    let mut numerator = IntPolynomial::one();
    let mut denominator = IntPolynomial::one();
    // divisors of a squarefree number are the subsets of its primes
    for mask in 0u32..(1 << primes.len()) {
        let d: u64 = primes
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, p)| p)
            .product();
        let term = &IntPolynomial::monomial(BigInt::one(), d as usize) - &IntPolynomial::one();
        match mobius(radical / d) {
            1 => numerator = &numerator * &term,
            -1 => denominator = &denominator * &term,
            _ => unreachable!("divisors of a squarefree number are squarefree"),
        }
    }
    let (base, rem) = numerator.divrem(&denominator).expect("denominator is monic up to sign");
    debug_assert!(rem.is_zero());
    let base = if base.leading().is_some_and(|c| c < &BigInt::from(0)) { -base } else { base };
    base.compose_power((m / radical) as usize)
}

/// Divide out every cyclotomic factor of `p`, each to its full multiplicity.
///
/// Candidates are all `m` with `φ(m) ≤ deg p`; since `φ(m) ≥ √(m/2)`, the
/// search over `m ≤ 2·deg²` is complete.
pub fn strip_cyclotomic(p: &IntPolynomial) -> CyclotomicFactorization {
    let mut remainder = p.clone();
    let mut factors = Vec::new();
    let d = p.degree().unwrap_or(0) as u64;
    for m in 1..=2 * d * d {
        let Some(current) = remainder.degree() else { break };
        if current == 0 {
            break;
        }
        if euler_phi(m) > current as u64 {
            continue;
        }
        let phi = cyclotomic(m);
        let mut mult = 0;
        loop {
            let (quot, rem) = remainder.divrem(&phi).expect("cyclotomic polynomials are monic");
            if !rem.is_zero() {
                break;
            }
            remainder = quot;
            mult += 1;
        }
        if mult > 0 {
            factors.push((m, mult));
        }
    }
    CyclotomicFactorization { factors, remainder }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    /// Oracle: divide t^m − 1 by every Φ_d with d | m, d < m.
    fn cyclotomic_by_division(m: u64) -> IntPolynomial {
        let mut f = &IntPolynomial::monomial(BigInt::one(), m as usize) - &IntPolynomial::one();
        for d in 1..m {
            if m.is_multiple_of(d) {
                let (q, r) = f.divrem(&cyclotomic_by_division(d)).unwrap();
                assert!(r.is_zero());
                f = q;
            }
        }
        f
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1), p(&[-1, 1]));
        assert_eq!(cyclotomic(2), p(&[1, 1]));
        assert_eq!(cyclotomic(12), p(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic(9), p(&[1, 0, 0, 1, 0, 0, 1]));
    }

    #[test]
    fn moebius_matches_iterated_division() {
        for m in 1..=40 {
            let phi = cyclotomic(m);
            assert_eq!(phi, cyclotomic_by_division(m), "m = {m}");
            assert_eq!(phi.degree(), Some(euler_phi(m) as usize));
        }
        // first cyclotomic with a coefficient outside {-1, 0, 1}
        assert!(cyclotomic(105).coeffs().iter().any(|c| c == &BigInt::from(-2)));
    }

    #[test]
    fn arithmetic_functions() {
        assert_eq!(
            (1..=12).map(euler_phi).collect::<Vec<_>>(),
            vec![1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]
        );
        assert_eq!((1..=10).map(mobius).collect::<Vec<_>>(), vec![1, -1, -1, 0, -1, 1, -1, 0, 0, 1]);
    }

    #[test]
    fn strip_examples() {
        let f = strip_cyclotomic(&p(&[-1, 2, 0, 0, -2, 1]));
        assert_eq!(f.factors, vec![(1, 1)]);
        assert_eq!(f.remainder, p(&[1, -1, -1, -1, 1]));

        let f = strip_cyclotomic(&p(&[-1, 2, 0, -2, 1]));
        assert_eq!(f.factors, vec![(1, 3), (2, 1)]);
        assert_eq!(f.remainder, IntPolynomial::one());

        let lehmer_like = p(&[1, -1, -1, -1, 1]);
        let f = strip_cyclotomic(&lehmer_like);
        assert!(f.factors.is_empty());
        assert_eq!(f.remainder, lehmer_like);
    }

    #[test]
    fn strip_recovers_planted_factors() {
        let salem = p(&[1, -1, -1, -1, 1]);
        // products of Φ_m (m ≤ 30) with the quartic, total degree ≤ 12
        let plants: &[&[(u64, u32)]] = &[
            &[(1, 2), (2, 1)],
            &[(3, 1), (4, 1), (6, 1)],
            &[(5, 1), (8, 1)],
            &[(7, 1), (1, 1), (2, 1)],
            &[(30, 1)],
            &[(24, 1)],
            &[(9, 1), (2, 2)],
            &[(10, 1), (12, 1)],
            &[(20, 1)],
            &[(14, 1)],
            &[(18, 1), (6, 1)],
            &[(15, 1)],
            &[(16, 1)],
            &[(1, 4), (2, 4)],
        ];
        for plant in plants {
            let f = CyclotomicFactorization {
                factors: plant.to_vec(),
                remainder: salem.clone(),
            };
            let product = f.expand();
            assert!(product.degree().unwrap() <= 12);
            let mut got = strip_cyclotomic(&product);
            got.factors.sort();
            let mut want = plant.to_vec();
            want.sort();
            assert_eq!(got.factors, want, "plant {plant:?}");
            assert_eq!(got.remainder, salem);
        }
    }
}
