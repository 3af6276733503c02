use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use proptest::prelude::*;

use starlike::poly::{
    cauchy_bound, cyclotomic, isolate_largest_real_root, strip_cyclotomic, sturm_count, CyclotomicFactorization,
    SturmChain,
};
use starlike::salem::{
    classify, salem_from_tree, salem_polynomial, trace_polynomial, uniform_salem_polynomial, Classification,
    SalemCertificate,
};
use starlike::spectral::{
    check_bounds, compare_radius_squared, eigenvalues_above_two, numeric_radius_oracle, spectral_radius,
};
use starlike::trees::{reduced_longarm_charpoly, starlike_charpoly};
use starlike::{default_tol, IntPolynomial, RationalInterval, StarlikeTree};

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Numeric root count: scan for sign changes of the squarefree part in f64.
fn numeric_real_root_count(p: &IntPolynomial, bound: f64) -> usize {
    let sf = p.squarefree_part().unwrap();
    let coeffs: Vec<f64> = sf.coeffs().iter().map(|c| c.to_f64().unwrap()).collect();
    let eval = |x: f64| coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c);
    let steps = 200_000;
    let h = 2.0 * bound / steps as f64;
    let mut count = 0;
    let mut prev = eval(-bound);
    for i in 1..=steps {
        let x = -bound + h * i as f64;
        let v = eval(x);
        if v == 0.0 || prev * v < 0.0 {
            count += 1;
        }
        prev = if v == 0.0 { eval(x + h / 2.0) } else { v };
    }
    count
}

#[test]
fn sturm_total_count_matches_numeric_scan() {
    for tree in StarlikeTree::enumerate(12) {
        let phi = starlike_charpoly(&tree);
        let b = cauchy_bound(&phi.squarefree_part().unwrap());
        let all = RationalInterval::new(-b.clone(), b.clone()).unwrap();
        let exact = sturm_count(&phi, &all).unwrap();
        let numeric = numeric_real_root_count(&phi, b.to_f64().unwrap());
        assert_eq!(exact, numeric, "{tree}");
    }
}

#[test]
fn root_enclosures_isolate_exactly_one_root() {
    let tol = q(1, 1 << 30);
    for tree in StarlikeTree::enumerate(10) {
        let phi = starlike_charpoly(&tree);
        let enc = isolate_largest_real_root(&phi, &tol).unwrap();
        assert!(enc.width() <= tol);
        assert_eq!(sturm_count(&phi, &enc).unwrap(), 1, "{tree}");
        let above = RationalInterval::new(enc.hi().clone(), cauchy_bound(&phi) + q(1, 1)).unwrap();
        assert_eq!(sturm_count(&phi, &above).unwrap(), 0, "{tree}");
    }
}

#[test]
fn long_arm_factorization_identity() {
    for n in 1..=20 {
        for k in 3..=8 {
            let tree = StarlikeTree::long_arm(n, k).unwrap();
            let lambda_pow = IntPolynomial::monomial(BigInt::from(1), k as usize - 1);
            assert_eq!(
                starlike_charpoly(&tree),
                &lambda_pow * &reduced_longarm_charpoly(n, k).unwrap(),
                "n={n}, k={k}"
            );
        }
    }
}

#[test]
fn enclosure_agrees_with_power_iteration() {
    let tol = default_tol();
    for tree in StarlikeTree::enumerate(12) {
        let enc = spectral_radius(&tree, &tol).unwrap();
        let numeric = numeric_radius_oracle(&tree).unwrap();
        assert!((enc.midpoint_f64() - numeric).abs() <= 1e-6, "{tree}");
    }
}

#[test]
fn general_bounds_hold_for_all_small_trees() {
    for tree in StarlikeTree::enumerate(12) {
        let report = check_bounds(&tree, &default_tol()).unwrap();
        assert!(report.bounds_hold, "{tree}: {report:?}");
        // the lower bound √k is attained only by the star
        let star = tree.branches().iter().all(|&b| b == 1);
        assert_eq!(report.bounds[0].lower_attained, star, "{tree}");
    }
}

#[test]
fn interlacing_lower_bound_on_long_arms() {
    for n in 1..=30 {
        for k in 3..=10 {
            let phi = starlike_charpoly(&StarlikeTree::long_arm(n, k).unwrap());
            let (_, h) = phi.split_even().unwrap();
            let kp1 = q(k as i64 + 1, 1);
            let chain = SturmChain::new(&h).unwrap();
            let above = chain.count_open(&kp1, &chain.root_bound());
            let at = h.sign_at(&kp1) == Ordering::Equal;
            assert!(above >= 1 || at, "n={n}, k={k}");
            assert_ne!(compare_radius_squared(&phi, &kp1).unwrap(), Ordering::Less);
        }
    }
}

#[test]
fn at_most_one_eigenvalue_above_two() {
    for tree in StarlikeTree::enumerate(14) {
        assert!(eigenvalues_above_two(&tree).unwrap() <= 1, "{tree}");
    }
}

#[test]
fn salem_polynomials_are_anti_reciprocal() {
    for n in 1..=30 {
        for k in 3..=10 {
            let poly = salem_polynomial(n, k).unwrap();
            assert_eq!(poly.reversed(), -&poly);
            assert!(poly.evaluate(&q(1, 1)).is_zero());
        }
    }
}

#[test]
fn stripped_remainders_have_roots_off_the_circle() {
    for n in 2..=20 {
        for k in 3..=8 {
            let stripped = strip_cyclotomic(&salem_polynomial(n, k).unwrap());
            let trace = trace_polynomial(&stripped.remainder).unwrap();
            let chain = SturmChain::new(&trace).unwrap();
            let two = q(2, 1);
            let b = chain.root_bound().max(q(3, 1));
            let outside = chain.count_open(&two, &b) + chain.count_open(&-b.clone(), &-two.clone());
            assert!(outside >= 1, "n={n}, k={k}");
        }
    }
}

#[test]
fn radius_and_salem_root_correspond() {
    let tol = default_tol();
    for n in 2..=20 {
        for k in 3..=8 {
            let report = salem_from_tree(n, k, &tol).unwrap();
            assert!(report.consistent, "n={n}, k={k}");
            assert_eq!(report.certificate.classification, Classification::Salem, "n={n}, k={k}");
        }
    }
}

fn assert_counts_consistent(cert: &SalemCertificate) {
    let c = cert.counts;
    let degree = cert.minimal_candidate.degree().unwrap();
    if cert.classification != Classification::Degenerate {
        assert_eq!(c.outside_unit + c.on_unit + c.inside_unit, degree);
    }
    if cert.classification == Classification::Salem {
        assert_eq!((c.outside_unit, c.inside_unit), (1, 1));
        assert_eq!(c.on_unit, degree - 2);
        assert!(c.on_unit >= 2);
        assert!(cert.t_enclosure.as_ref().unwrap().lo() > &q(1, 1));
    }
}

#[test]
fn both_polynomial_families_give_salem_numbers() {
    for k in 3..=6 {
        for n in 3..=10 {
            for poly in [salem_polynomial(n, k).unwrap(), uniform_salem_polynomial(n, k).unwrap()] {
                let cert = classify(&poly).unwrap();
                assert_eq!(cert.classification, Classification::Salem, "{poly}");
                assert_counts_consistent(&cert);
            }
        }
    }
}

#[test]
fn certificates_survive_json() {
    for (n, k) in [(1, 3), (1, 8), (2, 3), (7, 5)] {
        let cert = classify(&salem_polynomial(n, k).unwrap()).unwrap();
        assert_counts_consistent(&cert);
        let s = serde_json::to_string(&cert).unwrap();
        assert_eq!(serde_json::from_str::<SalemCertificate>(&s).unwrap(), cert);
    }
}

fn arb_cyclotomic_product() -> impl Strategy<Value = Vec<(u64, u32)>> {
    // m ≤ 30 with φ(m) ≤ 8, so the product has degree ≤ 8 before the quartic
    let small: Vec<u64> = (1..=30u64).filter(|&m| cyclotomic(m).degree().unwrap() <= 8).collect();
    proptest::collection::vec(proptest::sample::select(small), 0..5).prop_filter_map(
        "degree at most 8",
        |ms| {
            let mut factors: Vec<(u64, u32)> = Vec::new();
            for m in ms {
                match factors.iter_mut().find(|(x, _)| *x == m) {
                    Some((_, mult)) => *mult += 1,
                    None => factors.push((m, 1)),
                }
            }
            factors.sort();
            let deg: usize = factors
                .iter()
                .map(|&(m, mult)| cyclotomic(m).degree().unwrap() * mult as usize)
                .sum();
            (deg <= 8).then_some(factors)
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn strip_recovers_random_plants(factors in arb_cyclotomic_product()) {
        let plant = CyclotomicFactorization {
            factors: factors.clone(),
            remainder: IntPolynomial::from_i64s(&[1, -1, -1, -1, 1]),
        };
        let product = plant.expand();
        prop_assert!(product.degree().unwrap() <= 12);
        let got = strip_cyclotomic(&product);
        prop_assert_eq!(got.factors, factors);
        prop_assert_eq!(got.remainder, plant.remainder);
    }

    #[test]
    fn expansion_of_strip_is_identity(coeffs in proptest::collection::vec(-3i64..=3, 0..8)) {
        let mut c = coeffs;
        c.push(1);
        let p = IntPolynomial::from_i64s(&c);
        let f = strip_cyclotomic(&p);
        prop_assert_eq!(f.expand(), p);
        prop_assert!(!f.remainder.evaluate(&q(1, 1)).is_zero());
    }
}
