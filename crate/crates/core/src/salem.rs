//! Salem polynomials of the long-arm family and their certified classification.
//!
//! For `S(n, k·1)` the number `t > 1` with `√t + 1/√t = λ₁` is the largest
//! root of
//!
//! ```text
//! Q_{n,k}(t) = t^(n+3) − (k−1)·t^(n+2) + (k−1)·t − 1.
//! ```
//!
//! Classification never factors over the integers. Cyclotomic factors are
//! removed exhaustively; by Kronecker's theorem any factor left over has a
//! root off the unit circle, and reciprocity pairs it with one inside. So
//! when exactly one root lies outside the circle the remainder must be
//! irreducible, and it is the minimal polynomial of `t`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{
    cauchy_bound, strip_cyclotomic, CyclotomicFactorization, IntPolynomial, RationalInterval,
    ReciprocalType, SturmChain,
};
use crate::spectral::{compare_radius_squared, radius_squared_enclosure, spectral_radius};
use crate::trees::{path_charpoly, reduced_longarm_charpoly, starlike_charpoly, StarlikeTree};

fn check_family(n: u32, k: u32) -> Result<()> {
    if n < 1 {
        return Err(Error::Domain(format!("n = {n}; the family needs n ≥ 1")));
    }
    if k < 3 {
        return Err(Error::Domain(format!("k = {k}; the family needs k ≥ 3")));
    }
    Ok(())
}

/// `t^e − (k−1)·t^(e−1) + (k−1)·t − 1`
fn long_arm_family(exponent: usize, k: u32) -> IntPolynomial {
    let km1 = BigInt::from(k - 1);
    let mut coeffs = vec![BigInt::zero(); exponent + 1];
    coeffs[0] -= 1;
    coeffs[1] += &km1;
    coeffs[exponent - 1] -= &km1;
    coeffs[exponent] += 1;
    IntPolynomial::new(coeffs)
}

/// `Q_{n,k}(t) = t^(n+3) − (k−1)t^(n+2) + (k−1)t − 1`; anti-reciprocal.
pub fn salem_polynomial(n: u32, k: u32) -> Result<IntPolynomial> {
    check_family(n, k)?;
    Ok(long_arm_family(n as usize + 3, k))
}

/// The companion family `t^(n+2) − (k−1)t^(n+1) + (k−1)t − 1` attached to
/// `S(k·n)`.
pub fn uniform_salem_polynomial(n: u32, k: u32) -> Result<IntPolynomial> {
    check_family(n, k)?;
    Ok(long_arm_family(n as usize + 2, k))
}

/// The degree-`d` polynomial `T` with `p(t) = t^d · T(t + 1/t)`, for `p`
/// reciprocal of degree `2d`.
///
/// Uses `V_j = t^j + t^(−j)`, `V_0 = 2`, `V_1 = x`, `V_{j+1} = x·V_j − V_{j−1}`.
pub fn trace_polynomial(p: &IntPolynomial) -> Result<IntPolynomial> {
    let deg = p.degree().ok_or(Error::ZeroPolynomial)?;
    if p.reciprocal_type() != ReciprocalType::Reciprocal {
        return Err(Error::NotReciprocal);
    }
    if deg % 2 == 1 {
        return Err(Error::OddDegree(deg));
    }
    let d = deg / 2;
    let x = IntPolynomial::x();
    let mut result = IntPolynomial::constant(p.coeff(d));
    let mut prev = IntPolynomial::from_i64s(&[2]);
    let mut cur = x.clone();
    for j in 1..=d {
        result = &result + &cur.scale(&p.coeff(d + j));
        let next = &(&x * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    Ok(result)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Classification {
    Salem,
    QuadraticPisot,
    /// Every root is a root of unity.
    Degenerate,
    /// Reciprocal with non-cyclotomic part, but neither Salem nor quadratic Pisot.
    Unclassified,
}

/// Roots of the minimal-polynomial candidate by position relative to the
/// unit circle, with multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootCounts {
    pub outside_unit: usize,
    pub on_unit: usize,
    pub inside_unit: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SalemCertificate {
    pub input_poly: IntPolynomial,
    pub cyclo_factors: CyclotomicFactorization,
    pub minimal_candidate: IntPolynomial,
    /// `T` with `minimal_candidate(t) = t^d · T(t + 1/t)`; empty when degenerate.
    pub trace_poly: IntPolynomial,
    pub counts: RootCounts,
    /// Largest real root of the candidate; `[1, 1]` when degenerate with `t = 1`.
    pub t_enclosure: Option<RationalInterval>,
    pub classification: Classification,
}

/// Root counts of `T` by region, with multiplicity.
#[derive(Debug, Default)]
struct TraceRootCounts {
    above_two: usize,
    below_minus_two: usize,
    inside: usize,
    at_plus_minus_two: usize,
    nonreal: usize,
}

fn count_trace_roots(trace: &IntPolynomial) -> Result<TraceRootCounts> {
    let two = BigRational::from_integer(BigInt::from(2));
    let minus_two = -two.clone();
    let mut counts = TraceRootCounts::default();
    let mut real = 0;
    for (factor, mult) in trace.squarefree_decomposition()? {
        let chain = SturmChain::new(&factor)?;
        let b = cauchy_bound(&factor).max(&two + BigRational::one());
        let above = chain.count_open(&two, &b);
        let below = chain.count_open(&-b.clone(), &minus_two);
        let inside = chain.count_open(&minus_two, &two);
        let at = [&two, &minus_two]
            .iter()
            .filter(|x| factor.sign_at(x) == Ordering::Equal)
            .count();
        counts.above_two += above * mult;
        counts.below_minus_two += below * mult;
        counts.inside += inside * mult;
        counts.at_plus_minus_two += at * mult;
        real += (above + below + inside + at) * mult;
    }
    counts.nonreal = trace.degree().unwrap_or(0) - real;
    Ok(counts)
}

/// Classify with the default enclosure width.
pub fn classify(p: &IntPolynomial) -> Result<SalemCertificate> {
    classify_with_tol(p, &crate::default_tol())
}

/// Strip cyclotomic factors, then locate the remaining roots relative to the
/// unit circle through the trace polynomial.
pub fn classify_with_tol(p: &IntPolynomial, tol: &BigRational) -> Result<SalemCertificate> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !p.is_monic_up_to_sign() {
        return Err(Error::NotMonic);
    }
    let input = if p.leading().is_some_and(Signed::is_negative) { -p } else { p.clone() };
    let cyclo = strip_cyclotomic(&input);
    let remainder = cyclo.remainder.clone();
    let degree = remainder.degree().expect("remainder of a nonzero polynomial");

    if degree == 0 {
        let one = BigRational::one();
        let minus_one = -one.clone();
        let t_enclosure = if input.sign_at(&one) == Ordering::Equal {
            Some(RationalInterval::point(one))
        } else if input.sign_at(&minus_one) == Ordering::Equal {
            Some(RationalInterval::point(minus_one))
        } else {
            None
        };
        return Ok(SalemCertificate {
            input_poly: input,
            cyclo_factors: cyclo,
            minimal_candidate: remainder,
            trace_poly: IntPolynomial::zero(),
            counts: RootCounts {
                outside_unit: 0,
                on_unit: 0,
                inside_unit: 0,
            },
            t_enclosure,
            classification: Classification::Degenerate,
        });
    }

    match remainder.reciprocal_type() {
        ReciprocalType::Reciprocal => {}
        ReciprocalType::AntiReciprocal => {
            return Err(Error::Internal(
                "anti-reciprocal remainder after removing t − 1".into(),
            ))
        }
        ReciprocalType::Neither => return Err(Error::NotReciprocal),
    }
    let trace = trace_polynomial(&remainder)?;
    let c = count_trace_roots(&trace)?;
    // x > 2 or x < −2 gives a real pair (t, 1/t); non-real x gives t off the circle
    let outside = c.above_two + c.below_minus_two + c.nonreal;
    let counts = RootCounts {
        outside_unit: outside,
        on_unit: 2 * (c.inside + c.at_plus_minus_two),
        inside_unit: outside,
    };
    let classification = if counts.outside_unit == 1
        && c.above_two == 1
        && degree >= 4
        && c.inside >= 1
    {
        Classification::Salem
    } else if degree == 2 && c.above_two == 1 {
        Classification::QuadraticPisot
    } else {
        Classification::Unclassified
    };
    let t_enclosure = match SturmChain::new(&remainder)?.isolate_largest(tol) {
        Ok(enc) => Some(enc),
        Err(Error::NoRealRoot) => None,
        Err(e) => return Err(e),
    };
    Ok(SalemCertificate {
        input_poly: input,
        cyclo_factors: cyclo,
        minimal_candidate: remainder,
        trace_poly: trace,
        counts,
        t_enclosure,
        classification,
    })
}

/// What the theory predicts for `Q_{n,k}`: Salem for `n ≥ 2`. At `n = 1` the
/// tree is the star `K_{1,k+1}`; `Q` is `(t − 1)³(t + 1)` for `k = 3` and
/// `(t² − 1)(t² − (k−1)t + 1)` otherwise.
pub fn expected_classification(n: u32, k: u32) -> Classification {
    match (n, k) {
        (1, 3) => Classification::Degenerate,
        (1, _) => Classification::QuadraticPisot,
        _ => Classification::Salem,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeSalemReport {
    pub n: u32,
    pub k: u32,
    /// Largest real root of `Q_{n,k}`.
    pub rho: RationalInterval,
    pub lambda1: RationalInterval,
    /// Enclosure of `ρ + 1/ρ`.
    pub trace_from_rho: RationalInterval,
    /// Enclosure of `λ₁² − 2`.
    pub trace_from_lambda1: RationalInterval,
    pub certificate: SalemCertificate,
    pub consistent: bool,
    pub expected: Classification,
}

impl TreeSalemReport {
    pub fn pass(&self) -> bool {
        self.consistent && self.certificate.classification == self.expected
    }
}

/// Build `Q_{n,k}`, classify it, and cross-check `ρ + 1/ρ` against `λ₁² − 2`
/// computed from the tree.
pub fn salem_from_tree(n: u32, k: u32, tol: &BigRational) -> Result<TreeSalemReport> {
    let q = salem_polynomial(n, k)?;
    let certificate = classify_with_tol(&q, tol)?;
    let rho = SturmChain::new(&q)?.isolate_largest(tol)?;
    // Q(1) = 0, so the largest root is at least 1
    let one = BigRational::one();
    let rho_clamped = RationalInterval::new(rho.lo().clone().max(one), rho.hi().clone())?;
    let trace_from_rho = rho_clamped.plus_reciprocal()?;
    let lambda1 = spectral_radius(&StarlikeTree::long_arm(n, k)?, tol)?;
    let two = BigRational::from_integer(BigInt::from(2));
    let trace_from_lambda1 = radius_squared_enclosure(&lambda1).add_scalar(&-two);
    Ok(TreeSalemReport {
        n,
        k,
        consistent: trace_from_rho.intersects(&trace_from_lambda1),
        rho,
        lambda1,
        trace_from_rho,
        trace_from_lambda1,
        certificate,
        expected: expected_classification(n, k),
    })
}

/// `S(n, k·1)` against `S(k·(n+1))`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EqualRadiusReport {
    pub n: u32,
    pub k: u32,
    /// `φ(S(n, k·1)) = λ^(k−1) · R` with `R` the reduced polynomial.
    pub long_arm_factorization: bool,
    /// `R` divides `φ(S(k·(n+1)))` exactly.
    pub exact_divisible: bool,
    /// ... with quotient `φ(P_{n+1})^(k−1)`.
    pub quotient_matches: bool,
    pub long_arm_radius: RationalInterval,
    pub uniform_radius: RationalInterval,
    pub enclosures_intersect: bool,
}

impl EqualRadiusReport {
    pub fn pass(&self) -> bool {
        self.long_arm_factorization && self.exact_divisible && self.quotient_matches && self.enclosures_intersect
    }
}

pub fn verify_equal_radius(n: u32, k: u32) -> Result<EqualRadiusReport> {
    check_family(n, k)?;
    let long_arm = StarlikeTree::long_arm(n, k)?;
    let uniform = StarlikeTree::uniform(k, n + 1)?;
    let reduced = reduced_longarm_charpoly(n, k)?;

    let lambda_pow = IntPolynomial::monomial(BigInt::one(), k as usize - 1);
    let long_arm_factorization = starlike_charpoly(&long_arm) == &lambda_pow * &reduced;

    let (quot, rem) = starlike_charpoly(&uniform).divrem(&reduced)?;
    let exact_divisible = rem.is_zero();
    let quotient_matches = exact_divisible && quot == path_charpoly(n as usize + 1).pow(k - 1);

    let tol = crate::default_tol();
    let long_arm_radius = spectral_radius(&long_arm, &tol)?;
    let uniform_radius = spectral_radius(&uniform, &tol)?;
    Ok(EqualRadiusReport {
        n,
        k,
        long_arm_factorization,
        exact_divisible,
        quotient_matches,
        enclosures_intersect: long_arm_radius.intersects(&uniform_radius),
        long_arm_radius,
        uniform_radius,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonIntegralityReport {
    pub n: u32,
    pub k: u32,
    pub lambda1: RationalInterval,
    pub lambda1_squared: RationalInterval,
    /// `k + 1 < λ₁²`
    pub lower_strict: bool,
    /// `λ₁² < k²/(k−1)`
    pub upper_strict: bool,
    /// Perfect squares inside the open interval `(k+1, k²/(k−1))`.
    pub squares_in_window: Vec<BigInt>,
}

impl NonIntegralityReport {
    pub fn pass(&self) -> bool {
        self.lower_strict && self.upper_strict && self.squares_in_window.is_empty()
    }
}

/// `k + 1 < λ₁² < k²/(k−1)` and no perfect square in between, so the
/// algebraic integer `λ₁` is irrational.
pub fn check_nonintegrality(n: u32, k: u32) -> Result<NonIntegralityReport> {
    if n < 2 {
        return Err(Error::Domain(format!("n = {n}; non-integrality needs n ≥ 2")));
    }
    check_family(n, k)?;
    let tree = StarlikeTree::long_arm(n, k)?;
    let charpoly = starlike_charpoly(&tree);
    let lambda1 = SturmChain::new(&charpoly)?.isolate_largest(&crate::default_tol())?;
    let lambda1_squared = radius_squared_enclosure(&lambda1);

    let kq = BigRational::from_integer(BigInt::from(k));
    let low = &kq + BigRational::one();
    let high = &kq * &kq / (&kq - BigRational::one());
    let decide = |r: &BigRational| -> Result<Ordering> {
        if lambda1_squared.hi() < r {
            Ok(Ordering::Less)
        } else if lambda1_squared.lo() > r {
            Ok(Ordering::Greater)
        } else {
            compare_radius_squared(&charpoly, r)
        }
    };
    let lower_strict = decide(&low)? == Ordering::Greater;
    let upper_strict = decide(&high)? == Ordering::Less;

    let first: BigInt = low.floor().to_integer() + 1;
    let mut squares_in_window = Vec::new();
    let mut m = first;
    while BigRational::from_integer(m.clone()) < high {
        let root = m.sqrt();
        if &root * &root == m {
            squares_in_window.push(m.clone());
        }
        m += 1;
    }
    Ok(NonIntegralityReport {
        n,
        k,
        lambda1,
        lambda1_squared,
        lower_strict,
        upper_strict,
        squares_in_window,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConvergenceRow {
    pub n: u32,
    pub k: u32,
    /// Enclosure of the largest root of `Q_{n,k}`.
    pub rho: RationalInterval,
    /// Upper bound on `(k−1) − ρ`.
    #[serde(with = "crate::poly::rational_string")]
    pub gap: BigRational,
    /// Certified `ρ < k − 1`: `Q(k−1) > 0` and no root in `(rho.hi, k−1)`.
    pub below_limit: bool,
}

struct SweepCell {
    row: ConvergenceRow,
    chain: SturmChain,
}

impl SweepCell {
    fn compute(n: u32, k: u32, tol: &BigRational) -> Result<Self> {
        let q = salem_polynomial(n, k)?;
        let chain = SturmChain::new(&q)?;
        let mut rho = chain.isolate_largest(tol)?;
        let limit = BigRational::from_integer(BigInt::from(k - 1));
        let eighth = BigRational::new(BigInt::one(), BigInt::from(8));
        // keep the width well under the distance to k − 1 so that
        // neighbouring rows can be told apart
        while rho.hi() >= &limit || rho.width() > (&limit - rho.hi()) * &eighth {
            let w = rho.width() / BigRational::from_integer(BigInt::from(2));
            chain.refine(&mut rho, &w)?;
        }
        let below_limit = q.sign_at(&limit) == Ordering::Greater
            && rho.hi() < &limit
            && chain.count_open(rho.hi(), &limit) == 0;
        let gap = &limit - rho.lo();
        Ok(SweepCell {
            row: ConvergenceRow {
                n,
                k,
                rho,
                gap,
                below_limit,
            },
            chain,
        })
    }

    fn halve(&mut self) -> Result<()> {
        let w = self.row.rho.width() / BigRational::from_integer(BigInt::from(2));
        self.chain.refine(&mut self.row.rho, &w)?;
        let limit = BigRational::from_integer(BigInt::from(self.row.k - 1));
        self.row.gap = &limit - self.row.rho.lo();
        Ok(())
    }
}

/// Certified largest roots of `Q_{n,k}` for each `n`, sorted by `n`.
///
/// Rows are refined until consecutive enclosures are disjoint, so ordering
/// between them is decided by the intervals alone.
pub fn convergence_sweep(k: u32, ns: &[u32], tol: &BigRational) -> Result<Vec<ConvergenceRow>> {
    if k < 3 {
        return Err(Error::Domain(format!("k = {k}; the sweep needs k ≥ 3")));
    }
    if let Some(bad) = ns.iter().find(|&&n| n < 2) {
        return Err(Error::Domain(format!("n = {bad}; the sweep needs n ≥ 2")));
    }
    if !tol.is_positive() {
        return Err(Error::NonPositiveTolerance);
    }
    let mut ns = ns.to_vec();
    ns.sort_unstable();
    ns.dedup();
    let mut cells = ns
        .par_iter()
        .map(|&n| SweepCell::compute(n, k, tol))
        .collect::<Result<Vec<_>>>()?;
    const MAX_HALVINGS: usize = 256;
    for i in 1..cells.len() {
        let mut halvings = 0;
        while !cells[i - 1].row.rho.precedes(&cells[i].row.rho) && halvings < MAX_HALVINGS {
            cells[i - 1].halve()?;
            cells[i].halve()?;
            halvings += 1;
        }
    }
    Ok(cells.into_iter().map(|c| c.row).collect())
}

/// Enclosures strictly increasing, gaps strictly decreasing.
pub fn sweep_is_monotone(rows: &[ConvergenceRow]) -> bool {
    rows.windows(2)
        .all(|w| w[0].rho.precedes(&w[1].rho) && w[1].gap < w[0].gap)
}
