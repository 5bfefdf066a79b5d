//! Scalar helpers around [`BigRational`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or `"p"` (optional sign, surrounding whitespace ignored).
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(num, den))
}

/// `"p/q"`, or `"p"` for integers. Inverse of [`parse_rational`].
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Decimal rendering rounded half away from zero to `digits` places.
pub fn to_decimal(q: &Rational, digits: u32) -> String {
    let scale = BigInt::from(10u32).pow(digits);
    let scaled = q.abs() * Rational::from_integer(scale.clone());
    let rounded = (scaled + rat(1, 2)).floor().to_integer();
    let (whole, frac) = rounded.div_rem(&scale);
    let sign = if q.is_negative() && !rounded.is_zero() { "-" } else { "" };
    if digits == 0 {
        return format!("{sign}{whole}");
    }
    format!("{sign}{whole}.{:0>width$}", frac.to_string(), width = digits as usize)
}

pub fn to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

pub fn floor_i64(q: &Rational) -> Result<i64> {
    q.floor().to_integer().to_i64().ok_or(Error::Overflow)
}

pub fn ceil_i64(q: &Rational) -> Result<i64> {
    q.ceil().to_integer().to_i64().ok_or(Error::Overflow)
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

pub fn pow(q: &Rational, exp: u32) -> Rational {
    num_traits::pow(q.clone(), exp as usize)
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("10/-4").unwrap(), rat(-5, 2));
        assert_eq!(format_rational(&rat(-5, 2)), "-5/2");
        assert_eq!(format_rational(&int(7)), "7");
        assert_eq!(parse_rational(" -3 ").unwrap(), int(-3));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1.5").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(to_decimal(&rat(5, 12), 12), "0.416666666667");
        assert_eq!(to_decimal(&rat(2, 3), 3), "0.667");
        assert_eq!(to_decimal(&rat(-1, 8), 2), "-0.13");
        assert_eq!(to_decimal(&int(3), 2), "3.00");
        assert_eq!(to_decimal(&rat(-1, 1000), 2), "0.00");
    }

    #[test]
    fn floors_and_ceils() {
        assert_eq!(floor_i64(&rat(-1, 2)).unwrap(), -1);
        assert_eq!(ceil_i64(&rat(-1, 2)).unwrap(), 0);
        assert_eq!(ceil_i64(&rat(7, 3)).unwrap(), 3);
    }
}
