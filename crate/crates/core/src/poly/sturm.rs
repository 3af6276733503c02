//! Sturm sequences and certified isolation of the largest real root.
//!
//! The chain is built on the squarefree part, so counts are of distinct roots.
//! Chain members are kept as primitive integer polynomials; each is a positive
//! multiple of the corresponding rational remainder, which leaves every sign
//! (and hence every variation count) unchanged.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{IntPolynomial, RationalInterval};
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct SturmChain {
    chain: Vec<IntPolynomial>,
}

impl SturmChain {
    pub fn new(p: &IntPolynomial) -> Result<Self> {
        let f0 = p.squarefree_part()?;
        let mut chain = vec![f0.clone()];
        let f1 = f0.derivative().primitive_part();
        if !f1.is_zero() {
            chain.push(f1);
            loop {
                let n = chain.len();
                let r = chain[n - 2].pseudo_rem(&chain[n - 1])?;
                if r.is_zero() {
                    break;
                }
                chain.push(-r.primitive_part());
            }
        }
        Ok(SturmChain { chain })
    }

    /// The squarefree polynomial the chain was built from.
    pub fn base(&self) -> &IntPolynomial {
        &self.chain[0]
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    /// Sign variations at `x`, zeros dropped.
    pub fn variations(&self, x: &BigRational) -> usize {
        let mut last = Ordering::Equal;
        let mut count = 0;
        for f in &self.chain {
            let s = f.sign_at(x);
            if s == Ordering::Equal {
                continue;
            }
            if last != Ordering::Equal && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Number of distinct real roots in the open interval `(lo, hi)`.
    ///
    /// `V(lo) - V(hi)` with zeros dropped counts roots in `(lo, hi]` whether or
    /// not the endpoints are roots; a root at `hi` is then subtracted.
    pub fn count_open(&self, lo: &BigRational, hi: &BigRational) -> usize {
        if lo >= hi {
            return 0;
        }
        let half_open = self.variations(lo) - self.variations(hi);
        if self.base().sign_at(hi) == Ordering::Equal {
            half_open - 1
        } else {
            half_open
        }
    }

    /// Integer bound `B` with every real root strictly inside `(-B, B)`.
    pub fn root_bound(&self) -> BigRational {
        cauchy_bound(self.base())
    }

    /// A point near `x` inside `(lo, hi)` that is not a root.
    fn nonroot_near(&self, x: BigRational, lo: &BigRational, hi: &BigRational) -> BigRational {
        if self.base().sign_at(&x) != Ordering::Equal {
            return x;
        }
        let mut step = (hi - lo) / BigRational::from_integer(BigInt::from(4));
        loop {
            for cand in [&x + &step, &x - &step] {
                if &cand > lo && &cand < hi && self.base().sign_at(&cand) != Ordering::Equal {
                    return cand;
                }
            }
            step /= BigRational::from_integer(BigInt::from(2));
        }
    }

    /// Enclosure of the largest real root, width at most `tol`, containing no
    /// other root; endpoints are never roots.
    pub fn isolate_largest(&self, tol: &BigRational) -> Result<RationalInterval> {
        if !tol.is_positive() {
            return Err(Error::NonPositiveTolerance);
        }
        let b = self.root_bound();
        let mut lo = -b.clone();
        let mut hi = b;
        if self.count_open(&lo, &hi) == 0 {
            return Err(Error::NoRealRoot);
        }
        let two = BigRational::from_integer(BigInt::from(2));
        // invariant: the largest root lies in (lo, hi) and neither endpoint is a root
        while self.count_open(&lo, &hi) > 1 {
            let mid = self.nonroot_near((&lo + &hi) / &two, &lo, &hi);
            if self.count_open(&mid, &hi) >= 1 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let mut enclosure = RationalInterval::new(lo, hi)?;
        self.refine(&mut enclosure, tol)?;
        Ok(enclosure)
    }

    /// Shrink an isolating interval of a single simple root to width `≤ tol`
    /// by sign bisection.
    pub fn refine(&self, enclosure: &mut RationalInterval, tol: &BigRational) -> Result<()> {
        if !tol.is_positive() {
            return Err(Error::NonPositiveTolerance);
        }
        let f = self.base();
        let mut lo = enclosure.lo().clone();
        let mut hi = enclosure.hi().clone();
        let s_hi = f.sign_at(&hi);
        if s_hi == Ordering::Equal || f.sign_at(&lo) == s_hi {
            return Err(Error::Internal("refine needs a sign change across the interval".into()));
        }
        let two = BigRational::from_integer(BigInt::from(2));
        while &(&hi - &lo) > tol {
            let mid = self.nonroot_near((&lo + &hi) / &two, &lo, &hi);
            if f.sign_at(&mid) == s_hi {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        *enclosure = RationalInterval::new(lo, hi)?;
        Ok(())
    }
}

/// `1 + ceil(max |c_i| / |lead|)` over the lower coefficients.
pub fn cauchy_bound(p: &IntPolynomial) -> BigRational {
    let Some(lead) = p.leading() else {
        return BigRational::one();
    };
    let lead = lead.abs();
    let d = p.coeffs().len() - 1;
    let max = p.coeffs()[..d]
        .iter()
        .map(Signed::abs)
        .max()
        .unwrap_or_else(BigInt::zero);
    let ratio = BigRational::new(max, lead).ceil();
    ratio + BigRational::one()
}

/// Distinct real roots of `p` in the open interval.
pub fn sturm_count(p: &IntPolynomial, interval: &RationalInterval) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(SturmChain::new(p)?.count_open(interval.lo(), interval.hi()))
}

/// Certified enclosure of the largest real root of `p`, width `≤ tol`.
pub fn isolate_largest_real_root(p: &IntPolynomial, tol: &BigRational) -> Result<RationalInterval> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    SturmChain::new(p)?.isolate_largest(tol)
}
