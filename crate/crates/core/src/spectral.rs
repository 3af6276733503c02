//! Spectral radius enclosures, hyperbolicity, and the eigenvalue bounds for
//! starlike trees.
//!
//! All comparisons involving `λ₁` against irrational bounds such as
//! `k/√(k−1)` are made on `λ₁²`, which is the largest root of `h` where
//! `φ(λ) = λ^s·h(λ²)`. Trees are bipartite, so that split always exists.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{cauchy_bound, IntPolynomial, RationalInterval, SturmChain};
use crate::trees::{adjacency, starlike_charpoly, StarlikeTree};

/// Certified enclosure of `λ₁`, the largest adjacency eigenvalue.
pub fn spectral_radius(tree: &StarlikeTree, tol: &BigRational) -> Result<RationalInterval> {
    SturmChain::new(&starlike_charpoly(tree))?.isolate_largest(tol)
}

/// Exact comparison of `λ₁²` with a rational, given the characteristic
/// polynomial of a bipartite graph with at least one edge.
pub fn compare_radius_squared(charpoly: &IntPolynomial, r: &BigRational) -> Result<Ordering> {
    let (_, h) = charpoly
        .split_even()
        .ok_or_else(|| Error::Internal("characteristic polynomial mixes parities".into()))?;
    let chain = SturmChain::new(&h)?;
    let bound = cauchy_bound(chain.base());
    if r >= &bound {
        return Ok(Ordering::Less);
    }
    if chain.count_open(r, &bound) > 0 {
        Ok(Ordering::Greater)
    } else if chain.base().sign_at(r) == Ordering::Equal {
        Ok(Ordering::Equal)
    } else {
        Ok(Ordering::Less)
    }
}

/// Decide `λ₁²` against `r` from an enclosure of `λ₁` when possible, and
/// exactly from the polynomial otherwise.
fn compare_with_enclosure(
    charpoly: &IntPolynomial,
    lambda1: &RationalInterval,
    r: &BigRational,
) -> Result<Ordering> {
    let sq = lambda1.square();
    if sq.hi() < r {
        Ok(Ordering::Less)
    } else if sq.lo() > r {
        Ok(Ordering::Greater)
    } else {
        compare_radius_squared(charpoly, r)
    }
}

/// Power iteration on `A + I` from the all-ones vector.
///
/// The shift separates `λ₁ + 1` from `|−λ₁ + 1|`, which trees (being
/// bipartite) would otherwise tie.
pub fn numeric_radius_oracle(tree: &StarlikeTree) -> Result<f64> {
    const THRESHOLD: f64 = 1e-12;
    const MAX_ITER: usize = 1_000_000;
    let adj = adjacency(tree);
    let n = adj.order();
    let neighbors: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).filter(|&j| adj.get(i, j)).collect())
        .collect();
    let mut v = vec![1.0 / (n as f64).sqrt(); n];
    let mut rayleigh = f64::NAN;
    for _ in 0..MAX_ITER {
        let w: Vec<f64> = (0..n)
            .map(|i| v[i] + neighbors[i].iter().map(|&j| v[j]).sum::<f64>())
            .collect();
        let next_rayleigh: f64 = v.iter().zip(&w).map(|(a, b)| a * b).sum();
        let norm = w.iter().map(|x| x * x).sum::<f64>().sqrt();
        v = w.into_iter().map(|x| x / norm).collect();
        if (next_rayleigh - rayleigh).abs() < THRESHOLD {
            return Ok(next_rayleigh - 1.0);
        }
        rayleigh = next_rayleigh;
    }
    Err(Error::NoConvergence(MAX_ITER))
}

/// Number of distinct eigenvalues strictly greater than 2.
pub fn eigenvalues_above_two(tree: &StarlikeTree) -> Result<usize> {
    let chain = SturmChain::new(&starlike_charpoly(tree))?;
    let two = BigRational::from_integer(BigInt::from(2));
    Ok(chain.count_open(&two, &chain.root_bound()))
}

/// Exactly one eigenvalue strictly above 2.
pub fn is_hyperbolic(tree: &StarlikeTree) -> Result<bool> {
    Ok(eigenvalues_above_two(tree)? == 1)
}

/// `√square`, kept symbolic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SqrtBound {
    #[serde(with = "crate::poly::rational_string")]
    pub square: BigRational,
}

impl SqrtBound {
    pub fn of(square: BigRational) -> Self {
        SqrtBound { square }
    }

    pub fn to_f64(&self) -> f64 {
        self.square.to_f64().unwrap_or(f64::NAN).sqrt()
    }
}

impl fmt::Display for SqrtBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sqrt({})", self.square)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundFamily {
    /// `√k ≤ λ₁ < k/√(k−1)` with `k` the number of branches.
    General,
    /// `√(k+1) ≤ λ₁ < k/√(k−1)` for `S(n, k·1)`.
    LongArm,
}

/// One `lower ≤ λ₁ < upper` check, decided exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub family: BoundFamily,
    pub k: u32,
    pub lower: SqrtBound,
    pub upper: SqrtBound,
    /// `λ₁ = lower` exactly.
    pub lower_attained: bool,
    pub lower_holds: bool,
    pub upper_holds: bool,
}

impl BoundCheck {
    pub fn holds(&self) -> bool {
        self.lower_holds && self.upper_holds
    }

    fn evaluate(
        family: BoundFamily,
        k: u32,
        charpoly: &IntPolynomial,
        lambda1: &RationalInterval,
    ) -> Result<Self> {
        let kq = BigRational::from_integer(BigInt::from(k));
        let lower_sq = match family {
            BoundFamily::General => kq.clone(),
            BoundFamily::LongArm => &kq + BigRational::one(),
        };
        let upper_sq = &kq * &kq / (&kq - BigRational::one());
        let lo = compare_with_enclosure(charpoly, lambda1, &lower_sq)?;
        let hi = compare_with_enclosure(charpoly, lambda1, &upper_sq)?;
        Ok(BoundCheck {
            family,
            k,
            lower: SqrtBound::of(lower_sq),
            upper: SqrtBound::of(upper_sq),
            lower_attained: lo == Ordering::Equal,
            lower_holds: lo != Ordering::Less,
            upper_holds: hi == Ordering::Less,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectralReport {
    pub tree: StarlikeTree,
    pub charpoly: IntPolynomial,
    pub lambda1: RationalInterval,
    /// The sharpest applicable bounds (long-arm when the shape matches).
    pub lower_bound: SqrtBound,
    pub upper_bound: SqrtBound,
    pub bounds: Vec<BoundCheck>,
    pub bounds_hold: bool,
    pub hyperbolic: bool,
}

/// Verify the general starlike bounds, and the long-arm bounds when the tree
/// is some `S(n, k·1)`.
pub fn check_bounds(tree: &StarlikeTree, tol: &BigRational) -> Result<SpectralReport> {
    let charpoly = starlike_charpoly(tree);
    let chain = SturmChain::new(&charpoly)?;
    let lambda1 = chain.isolate_largest(tol)?;
    let mut bounds = vec![BoundCheck::evaluate(BoundFamily::General, tree.k() as u32, &charpoly, &lambda1)?];
    if let Some((_, k)) = tree.as_long_arm() {
        bounds.push(BoundCheck::evaluate(BoundFamily::LongArm, k, &charpoly, &lambda1)?);
    }
    let sharpest = bounds.last().expect("general bound always present");
    let two = BigRational::from_integer(BigInt::from(2));
    let hyperbolic = chain.count_open(&two, &chain.root_bound()) == 1;
    Ok(SpectralReport {
        tree: tree.clone(),
        lower_bound: sharpest.lower.clone(),
        upper_bound: sharpest.upper.clone(),
        bounds_hold: bounds.iter().all(BoundCheck::holds),
        bounds,
        charpoly,
        lambda1,
        hyperbolic,
    })
}

/// `λ₁ ≥ 0` always, so an enclosure is clipped at zero before squaring.
pub fn radius_squared_enclosure(lambda1: &RationalInterval) -> RationalInterval {
    let lo = lambda1.lo().clone().max(BigRational::zero());
    let hi = lambda1.hi().clone().max(lo.clone());
    RationalInterval::new(lo, hi).expect("ordered").square()
}
