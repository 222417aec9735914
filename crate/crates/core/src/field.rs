//! Scalar fields.
//!
//! Every algorithm in the crate is generic over [`Field`]. Two families of
//! instantiations are provided: exact arbitrary-precision rationals
//! ([`Rational`]) and machine floats (`f64`, `f32`). Identities are checked in
//! the exact field; floats are only used on the benchmark path.

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational numbers over arbitrary-precision integers.
pub type Rational = BigRational;

/// A commutative field with fallible inversion.
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// `true` when equality is exact and arithmetic never rounds.
    const EXACT: bool;

    /// Multiplicative inverse. Division by zero is an error in exact fields;
    /// floats follow IEEE semantics and return an infinity.
    fn try_inv(&self) -> Result<Self>;

    fn try_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.clone() * rhs.try_inv()?)
    }

    fn from_i64(value: i64) -> Self;

    /// Parses `"p/q"`, an integer, or a decimal literal.
    fn parse_scalar(text: &str) -> Result<Self>;

    /// Magnitude as a float, for diagnostics.
    fn magnitude(&self) -> f64;

    /// Equality for exact fields; relative tolerance comparison for floats.
    fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        if Self::EXACT {
            return self == other;
        }
        let diff = (self.clone() - other.clone()).magnitude();
        let scale = self.magnitude().max(other.magnitude()).max(1.0);
        diff <= tol * scale
    }
}

/// Returns `x` when `k` is even and `-x` otherwise, i.e. `(-1)^k x`.
pub fn signed<F: Field>(x: F, k: usize) -> F {
    if k.is_multiple_of(2) {
        x
    } else {
        -x
    }
}

/// `base^exp` by repeated multiplication.
pub fn pow<F: Field>(base: &F, exp: usize) -> F {
    let mut acc = F::one();
    for _ in 0..exp {
        acc = acc * base.clone();
    }
    acc
}

impl Field for Rational {
    const EXACT: bool = true;

    fn try_inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.recip())
    }

    fn try_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self / rhs)
    }

    fn from_i64(value: i64) -> Self {
        Rational::from_integer(BigInt::from(value))
    }

    fn parse_scalar(text: &str) -> Result<Self> {
        parse_rational(text)
    }

    fn magnitude(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.abs().to_f64().unwrap_or(f64::INFINITY)
    }
}

fn parse_error(text: &str, reason: &str) -> Error {
    Error::Parse {
        input: text.to_string(),
        reason: reason.to_string(),
    }
}

fn parse_bigint(text: &str, whole: &str) -> Result<BigInt> {
    if text.is_empty() {
        return Err(parse_error(whole, "missing digits"));
    }
    BigInt::from_str(text).map_err(|_| parse_error(whole, "invalid integer"))
}

fn parse_rational(raw: &str) -> Result<Rational> {
    let text = raw.trim();
    if text.is_empty() {
        return Err(parse_error(raw, "empty scalar"));
    }
    if let Some((num, den)) = text.split_once('/') {
        let num = parse_bigint(num.trim(), raw)?;
        let den = parse_bigint(den.trim(), raw)?;
        if den.is_zero() {
            return Err(parse_error(raw, "zero denominator"));
        }
        return Ok(Rational::new(num, den));
    }
    parse_decimal(text).ok_or_else(|| parse_error(raw, "expected p/q, an integer or a decimal"))
}

/// Exact value of a decimal literal such as `-12.5e-3`.
fn parse_decimal(text: &str) -> Option<Rational> {
    let (mantissa, exponent) = match text.find(['e', 'E']) {
        Some(pos) => (&text[..pos], text[pos + 1..].parse::<i32>().ok()?),
        None => (text, 0),
    };
    let (negative, unsigned) = match mantissa.as_bytes().first()? {
        b'-' => (true, &mantissa[1..]),
        b'+' => (false, &mantissa[1..]),
        _ => (false, mantissa),
    };
    let (int_part, frac_part) = unsigned.split_once('.').unwrap_or((unsigned, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    let mut value = Rational::from_integer(BigInt::from_str(&digits).ok()?);
    let scale = exponent - i32::try_from(frac_part.len()).ok()?;
    let ten = Rational::from_integer(BigInt::from(10));
    let factor = num_traits::pow(ten, scale.unsigned_abs() as usize);
    value = if scale >= 0 { value * factor } else { value / factor };
    Some(if negative { -value } else { value })
}

macro_rules! impl_float_field {
    ($t:ty) => {
        impl Field for $t {
            const EXACT: bool = false;

            fn try_inv(&self) -> Result<Self> {
                Ok(1.0 / *self)
            }

            fn try_div(&self, rhs: &Self) -> Result<Self> {
                Ok(*self / *rhs)
            }

            fn from_i64(value: i64) -> Self {
                value as $t
            }

            fn parse_scalar(raw: &str) -> Result<Self> {
                let text = raw.trim();
                if let Some((num, den)) = text.split_once('/') {
                    let num: $t = num.trim().parse().map_err(|_| parse_error(raw, "invalid float"))?;
                    let den: $t = den.trim().parse().map_err(|_| parse_error(raw, "invalid float"))?;
                    if den == 0.0 {
                        return Err(parse_error(raw, "zero denominator"));
                    }
                    return Ok(num / den);
                }
                text.parse().map_err(|_| parse_error(raw, "invalid float"))
            }

            fn magnitude(&self) -> f64 {
                self.abs() as f64
            }
        }
    };
}

impl_float_field!(f64);
impl_float_field!(f32);
