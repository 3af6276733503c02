//! Exact univariate polynomials over the integers.
//!
//! Coefficients are stored ascending by degree (`coeffs[i]` multiplies the
//! `i`-th power) and the highest stored coefficient is always nonzero; the
//! zero polynomial is the empty vector. The variable name is display-only.

mod cyclotomic;
mod interval;
mod sturm;

pub use cyclotomic::{cyclotomic, euler_phi, mobius, strip_cyclotomic, CyclotomicFactorization};
pub use interval::{decimal_string, RationalInterval};
pub use sturm::{cauchy_bound, isolate_largest_real_root, sturm_count, SturmChain};

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An integer-coefficient polynomial.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

/// Which coefficient symmetry a polynomial has.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReciprocalType {
    Reciprocal,
    AntiReciprocal,
    Neither,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c · x^degree`
    pub fn monomial(c: BigInt, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Leading coefficient is 1 or -1.
    pub fn is_monic_up_to_sign(&self) -> bool {
        self.leading().is_some_and(|c| c.abs().is_one())
    }

    /// Exact Horner evaluation.
    pub fn evaluate(&self, x: &BigRational) -> BigRational {
        let (num, den) = self.homogeneous_eval(x);
        BigRational::new(num, den)
    }

    pub fn evaluate_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Sign of `p(x)` computed with integers only: `b^d · p(a/b)` for `x = a/b`, `b > 0`.
    pub fn sign_at(&self, x: &BigRational) -> Ordering {
        self.homogeneous_eval(x).0.sign_ordering()
    }

    /// `(b^d · p(a/b), b^d)` for `x = a/b` in lowest terms, integers only.
    fn homogeneous_eval(&self, x: &BigRational) -> (BigInt, BigInt) {
        let Some(d) = self.degree() else {
            return (BigInt::zero(), BigInt::one());
        };
        let (a, b) = (x.numer(), x.denom());
        debug_assert!(b.is_positive());
        let mut acc = self.coeffs[d].clone();
        let mut bpow = BigInt::one();
        for c in self.coeffs[..d].iter().rev() {
            bpow *= b;
            acc = acc * a + c * &bpow;
        }
        (acc, bpow)
    }

    /// Floating-point evaluation through the exact rational value of `x`.
    ///
    /// The only rounding is the final conversion, so the error is governed by
    /// the conditioning of `p` at `x` rather than by cancellation in Horner.
    pub fn evaluate_f64(&self, x: f64) -> f64 {
        let exact = BigRational::from_float(x).expect("finite argument");
        let (num, den) = self.homogeneous_eval(&exact);
        BigRational::new(num, den).to_f64().unwrap_or(f64::NAN)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiply by `x^shift`.
    pub fn shift(&self, shift: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); shift];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// `p(x^m)`
    pub fn compose_power(&self, m: usize) -> Self {
        assert!(m >= 1, "exponent must be positive");
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * m + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * m] = c.clone();
        }
        Self::new(coeffs)
    }

    /// Division by a divisor whose leading coefficient is ±1.
    ///
    /// Returns `(q, r)` with `self = q·divisor + r` and `deg r < deg divisor`.
    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let lead = divisor.leading().ok_or(Error::DivisionByZero)?;
        if !lead.abs().is_one() {
            return Err(Error::NonUnitDivisor(lead.to_string()));
        }
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] * lead;
            if !c.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] -= &c * dc;
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Exact division by an arbitrary nonzero divisor.
    ///
    /// Fails with [`Error::InexactDivision`] unless the quotient exists in `Z[x]`.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let lead = divisor.leading().ok_or(Error::DivisionByZero)?;
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return Err(Error::InexactDivision);
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let (c, r) = rem[i + dd].div_rem(lead);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            if !c.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] -= &c * dc;
                }
            }
            quot[i] = c;
        }
        if rem[..dd].iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision);
        }
        Ok(Self::new(quot))
    }

    /// Remainder of `lc(d)^(deg self - deg d + 1) · self` by `d`, using `|lc(d)|`
    /// so the result is a positive multiple of the rational remainder.
    pub fn pseudo_rem(&self, divisor: &Self) -> Result<Self> {
        let mut d = divisor.clone();
        let lead = d.leading().ok_or(Error::DivisionByZero)?.clone();
        if lead.is_negative() {
            d = -d;
        }
        let lead = lead.abs();
        let dd = d.coeffs.len() - 1;
        let mut rem = self.clone();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let lr = rem.coeffs[rd].clone();
            let mut next = rem.scale(&lead).coeffs;
            for (j, dc) in d.coeffs.iter().enumerate() {
                next[rd - dd + j] -= &lr * dc;
            }
            rem = Self::new(next);
        }
        Ok(rem)
    }

    /// Gcd of the coefficients, nonnegative.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divide out the content, keeping the sign of the leading coefficient.
    pub fn primitive_part(&self) -> Self {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        Self::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    /// Primitive part with a positive leading coefficient.
    pub fn normalized(&self) -> Self {
        let p = self.primitive_part();
        if p.leading().is_some_and(Signed::is_negative) {
            -p
        } else {
            p
        }
    }

    /// Greatest common divisor, primitive with positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.normalized();
        let mut b = other.normalized();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).expect("nonzero divisor").normalized();
            a = b;
            b = r;
        }
        a
    }

    /// `p / gcd(p, p')`, primitive with positive leading coefficient.
    pub fn squarefree_part(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let g = self.gcd(&self.derivative());
        self.normalized().div_exact(&g)
    }

    /// Yun's decomposition: primitive squarefree `a_i` with `p = c · Π a_i^i`.
    ///
    /// Returns `(a_i, i)` pairs for the nonconstant factors only.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(Self, usize)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let f = self.normalized();
        let fp = f.derivative();
        let a = f.gcd(&fp);
        // b and c are divided by the same factor each round, so c - b' stays exact.
        let mut b = f.div_exact(&a)?;
        let mut c = fp.div_exact(&a)?;
        let mut out = Vec::new();
        let mut i = 1;
        while !b.is_constant() {
            let d = &c - &b.derivative();
            let g = b.gcd(&d);
            if !g.is_constant() {
                out.push((g.clone(), i));
            }
            b = b.div_exact(&g)?;
            c = d.div_exact(&g)?;
            i += 1;
        }
        Ok(out)
    }

    /// Coefficients reversed: `x^deg · p(1/x)`.
    pub fn reversed(&self) -> Self {
        Self::new(self.coeffs.iter().rev().cloned().collect())
    }

    pub fn reciprocal_type(&self) -> ReciprocalType {
        let n = self.coeffs.len();
        if (0..n).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i]) {
            ReciprocalType::Reciprocal
        } else if (0..n).all(|i| self.coeffs[i] == -&self.coeffs[n - 1 - i]) {
            ReciprocalType::AntiReciprocal
        } else {
            ReciprocalType::Neither
        }
    }

    /// Write `p(x) = x^s · h(x²)` when only powers of one parity occur.
    ///
    /// Returns `(s, h)`; `None` if both parities are present.
    pub fn split_even(&self) -> Option<(usize, Self)> {
        let low = self.coeffs.iter().position(|c| !c.is_zero())?;
        let s = low % 2;
        if self
            .coeffs
            .iter()
            .enumerate()
            .any(|(i, c)| i % 2 != s && !c.is_zero())
        {
            return None;
        }
        let h = Self::new(self.coeffs.iter().skip(s).step_by(2).cloned().collect());
        Some((s, h))
    }

    /// Render with a chosen variable name, highest power first: `λ^4 - 3λ^2`.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mag = c.abs();
            if !mag.is_one() || i == 0 {
                out.push_str(&mag.to_string());
            }
            match i {
                0 => {}
                1 => out.push_str(var),
                _ => {
                    out.push_str(var);
                    out.push('^');
                    out.push_str(&i.to_string());
                }
            }
        }
        out
    }
}

trait SignOrdering {
    fn sign_ordering(&self) -> Ordering;
}

impl SignOrdering for BigInt {
    fn sign_ordering(&self) -> Ordering {
        self.cmp(&BigInt::zero())
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("x"))
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        -self.clone()
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;

            fn $method(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let strings: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        strings.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(deserializer)?;
        let coeffs = strings
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        let p = IntPolynomial { coeffs };
        if p.coeffs.last().is_some_and(Zero::is_zero) {
            return Err(serde::de::Error::custom("highest coefficient must be nonzero"));
        }
        Ok(p)
    }
}

/// Serde adapter writing a `BigRational` as `"p/q"` (or `"p"` for integers).
pub mod rational_string {
    use num_rational::BigRational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let s = String::deserialize(d)?;
        s.parse::<BigRational>().map_err(serde::de::Error::custom)
    }
}
