use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A closed interval `[lo, hi]` with exact rational endpoints.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RationalInterval {
    #[serde(with = "super::rational_string")]
    lo: BigRational,
    #[serde(with = "super::rational_string")]
    hi: BigRational,
}

impl RationalInterval {
    pub fn new(lo: BigRational, hi: BigRational) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidInterval);
        }
        Ok(RationalInterval { lo, hi })
    }

    pub fn point(x: BigRational) -> Self {
        RationalInterval { lo: x.clone(), hi: x }
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2))
    }

    pub fn midpoint_f64(&self) -> f64 {
        self.midpoint().to_f64().unwrap_or(f64::NAN)
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    /// Strictly to the left of `other`: `self.hi < other.lo`.
    pub fn precedes(&self, other: &Self) -> bool {
        self.hi < other.lo
    }

    /// Image under `x ↦ x²`.
    pub fn square(&self) -> Self {
        let (a, b) = (&self.lo * &self.lo, &self.hi * &self.hi);
        if !self.lo.is_negative() {
            RationalInterval { lo: a, hi: b }
        } else if !self.hi.is_positive() {
            RationalInterval { lo: b, hi: a }
        } else {
            RationalInterval {
                lo: BigRational::zero(),
                hi: a.max(b),
            }
        }
    }

    pub fn add_scalar(&self, c: &BigRational) -> Self {
        RationalInterval {
            lo: &self.lo + c,
            hi: &self.hi + c,
        }
    }

    /// Image under `x ↦ x + 1/x`; requires `lo > 0`.
    pub fn plus_reciprocal(&self) -> Result<Self> {
        if !self.lo.is_positive() {
            return Err(Error::Domain("x + 1/x needs a positive interval".into()));
        }
        let f = |x: &BigRational| x + x.recip();
        let one = BigRational::one();
        let (flo, fhi) = (f(&self.lo), f(&self.hi));
        // decreasing on (0, 1], increasing on [1, ∞)
        let lo = if self.contains(&one) {
            BigRational::from_integer(BigInt::from(2))
        } else {
            flo.clone().min(fhi.clone())
        };
        Ok(RationalInterval { lo, hi: flo.max(fhi) })
    }

    /// Display-only decimal rendering with `digits` fractional digits, rounded
    /// outward so the printed interval still contains the exact one.
    pub fn to_decimal(&self, digits: usize) -> (String, String) {
        (
            decimal_string(&self.lo, digits, false),
            decimal_string(&self.hi, digits, true),
        )
    }
}

impl fmt::Display for RationalInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// `x` written with `digits` fractional digits, rounded down (or up when `ceil`).
pub fn decimal_string(x: &BigRational, digits: usize, ceil: bool) -> String {
    let scale = num_traits::pow(BigInt::from(10), digits);
    let scaled = x * BigRational::from_integer(scale.clone());
    let n = if ceil { scaled.ceil() } else { scaled.floor() }.to_integer();
    let negative = n.is_negative();
    let (int_part, frac_part) = n.abs().div_rem(&scale);
    let mut s = String::new();
    if negative {
        s.push('-');
    }
    s.push_str(&int_part.to_string());
    if digits > 0 {
        let frac = frac_part.to_string();
        s.push('.');
        s.push_str(&"0".repeat(digits - frac.len()));
        s.push_str(&frac);
    }
    s
}
