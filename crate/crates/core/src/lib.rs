//! Exact spectral invariants of starlike trees.
//!
//! A starlike tree `S(n₁, …, n_k)` has one vertex of degree `k ≥ 3` with `k`
//! pendant paths attached. This crate builds characteristic polynomials of
//! these trees exactly, encloses spectral radii in certified rational
//! intervals, and classifies the algebraic integer `t > 1` given by
//! `√t + 1/√t = λ₁` for the long-arm family `S(n, k·1)`.
//!
//! Every verdict is backed by exact integer arithmetic: Sturm counts for root
//! locations, exact polynomial division for identities, and exact rational
//! comparisons for bounds.

pub mod error;
pub mod linalg;
pub mod poly;
pub mod salem;
pub mod spectral;
pub mod trees;
pub mod verify;

pub use error::{Error, Result};
pub use poly::{IntPolynomial, RationalInterval};
pub use trees::StarlikeTree;

use num_bigint::BigInt;
use num_rational::BigRational;

/// Default enclosure width, `10⁻⁹`.
pub fn default_tol() -> BigRational {
    BigRational::new(BigInt::from(1), BigInt::from(1_000_000_000u64))
}
