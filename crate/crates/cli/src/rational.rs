use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Parse an exact rational from `p/q`, a decimal such as `0.001`, or
/// scientific notation such as `1e-6` / `2.5E-3`.
pub fn parse_rational(s: &str) -> Result<BigRational, String> {
    let bad = || format!("not a rational number: {s:?}");
    let t = s.trim();
    if let Some((p, q)) = t.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(format!("zero denominator in {s:?}"));
        }
        return Ok(BigRational::new(p, q));
    }
    let (mantissa, exponent) = match t.find(['e', 'E']) {
        Some(i) => (&t[..i], t[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (t, 0),
    };
    let (sign, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty()
        || !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit())
    {
        return Err(bad());
    }
    let all: BigInt = format!("{int_part}{frac_part}").parse().map_err(|_| bad())?;
    let scale = exponent - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let magnitude = if scale >= 0 {
        BigRational::from_integer(all * num_traits::pow(ten, scale as usize))
    } else {
        BigRational::new(all, num_traits::pow(ten, scale.unsigned_abs() as usize))
    };
    Ok(if sign < 0 { -magnitude } else { magnitude })
}

/// Clap value parser for `--tol`.
pub fn parse_tol(s: &str) -> Result<BigRational, String> {
    let tol = parse_rational(s)?;
    if !tol.is_positive() {
        return Err(format!("tolerance must be positive, got {s:?}"));
    }
    Ok(tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn accepted_forms() {
        assert_eq!(parse_rational("1e-6").unwrap(), q(1, 1_000_000));
        assert_eq!(parse_rational("1/1000000").unwrap(), q(1, 1_000_000));
        assert_eq!(parse_rational("0.001").unwrap(), q(1, 1000));
        assert_eq!(parse_rational("2.5E-3").unwrap(), q(1, 400));
        assert_eq!(parse_rational(".5").unwrap(), q(1, 2));
        assert_eq!(parse_rational("-3").unwrap(), q(-3, 1));
        assert_eq!(parse_rational("12e2").unwrap(), q(1200, 1));
        assert_eq!(parse_rational("6/4").unwrap(), q(3, 2));
    }

    #[test]
    fn rejected_forms() {
        for s in ["", ".", "abc", "1e", "1/0", "1.2.3", "0x10", "1e-6x"] {
            assert!(parse_rational(s).is_err(), "{s}");
        }
        assert!(parse_tol("0").is_err());
        assert!(parse_tol("-1e-3").is_err());
    }
}
