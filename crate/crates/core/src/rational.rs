//! Exact rational helpers: parsing, formatting and Stern–Brocot snapping.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational used for every finite value in the crate.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseRationalError {
    #[error("empty number")]
    Empty,
    #[error("invalid number `{0}`")]
    Invalid(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

fn parse_digits(s: &str, whole: &str) -> Result<BigInt, ParseRationalError> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseRationalError::Invalid(whole.to_owned()));
    }
    s.parse::<BigInt>()
        .map_err(|_| ParseRationalError::Invalid(whole.to_owned()))
}

/// Parses `p/q`, an integer, or a finite decimal such as `-0.25`.
///
/// Scientific notation, `inf` and `nan` are rejected.
pub fn parse_rational(input: &str) -> Result<Rational, ParseRationalError> {
    let s = input.trim();
    if s.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    let (negative, body) = match s.as_bytes()[0] {
        b'-' => (true, &s[1..]),
        b'+' => (false, &s[1..]),
        _ => (false, s),
    };
    let value = if let Some((num, den)) = body.split_once('/') {
        let num = parse_digits(num.trim(), input)?;
        let den = parse_digits(den.trim(), input)?;
        if den.is_zero() {
            return Err(ParseRationalError::ZeroDenominator(input.to_owned()));
        }
        Rational::new(num, den)
    } else if let Some((whole, frac)) = body.split_once('.') {
        if whole.is_empty() && frac.is_empty() {
            return Err(ParseRationalError::Invalid(input.to_owned()));
        }
        let whole = if whole.is_empty() {
            BigInt::zero()
        } else {
            parse_digits(whole, input)?
        };
        let frac_num = if frac.is_empty() {
            BigInt::zero()
        } else {
            parse_digits(frac, input)?
        };
        let scale = num_traits::pow(BigInt::from(10u32), frac.len());
        Rational::new(whole * &scale + frac_num, scale)
    } else {
        Rational::from_integer(parse_digits(body, input)?)
    };
    Ok(if negative { -value } else { value })
}

/// Formats as `p/q`, or as a bare integer when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Formats as an exact terminating decimal when one exists, else as `p/q`.
pub fn format_decimal(r: &Rational) -> String {
    let mut den = r.denom().clone();
    let two = BigInt::from(2u32);
    let five = BigInt::from(5u32);
    let (mut twos, mut fives) = (0usize, 0usize);
    while den.is_multiple_of(&two) {
        den /= &two;
        twos += 1;
    }
    while den.is_multiple_of(&five) {
        den /= &five;
        fives += 1;
    }
    if !den.is_one() {
        return format_rational(r);
    }
    let digits = twos.max(fives);
    if digits == 0 {
        return r.numer().to_string();
    }
    let scale = num_traits::pow(BigInt::from(10u32), digits);
    let scaled = (r * Rational::from_integer(scale.clone())).to_integer();
    let sign = if scaled.is_negative() { "-" } else { "" };
    let abs = scaled.abs();
    let (whole, frac) = abs.div_rem(&scale);
    format!("{sign}{whole}.{:0>width$}", frac.to_string(), width = digits)
}

/// Displays a rational with [`format_rational`].
pub struct Exact<'a>(pub &'a Rational);

impl fmt::Display for Exact<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_rational(self.0))
    }
}

/// Returns the rational with the smallest denominator in the closed interval
/// `[lo, hi]` (Stern–Brocot descent via continued fractions).
///
/// Panics if `lo > hi`.
pub fn simplest_between(lo: &Rational, hi: &Rational) -> Rational {
    assert!(lo <= hi, "simplest_between: empty interval");
    let fl = lo.floor();
    if &fl == lo {
        return fl;
    }
    let next = &fl + Rational::one();
    if &next <= hi {
        return next;
    }
    // lo and hi share the integer part; recurse on the reciprocals of the
    // fractional parts (order flips).
    let inner = simplest_between(&(hi - &fl).recip(), &(lo - &fl).recip());
    fl + inner.recip()
}

/// Least common multiple of the denominators of `values` (one when empty).
pub fn lcm_denominators<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}
