//! Extended-precision real scalar.
//!
//! [`Real`] wraps an MPFR float. Every value carries its own binary precision,
//! and binary operations produce a result at the larger of the two operand
//! precisions, so a computation seeded from one [`Precision`] stays in it.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use rug::float::Constant;
use rug::{Assign, Float};

use crate::error::{Error, Result};

const LOG2_10: f64 = std::f64::consts::LOG2_10;

/// Extra bits carried beyond the requested decimal digits.
pub const GUARD_BITS: u32 = 16;

/// Working precision expressed in significant decimal digits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Precision {
    digits: u32,
}

impl Precision {
    pub const MIN_DIGITS: u32 = 30;
    pub const DEFAULT_DIGITS: u32 = 40;
    pub const MAX_DIGITS: u32 = 100_000;

    pub fn new(digits: u32) -> Result<Self> {
        if !(Self::MIN_DIGITS..=Self::MAX_DIGITS).contains(&digits) {
            return Err(Error::InvalidPrecision { digits });
        }
        Ok(Precision { digits })
    }

    /// Precision without the lower bound check; used for internal guard-digit
    /// computations and for values parsed back from bit counts.
    pub(crate) fn unchecked(digits: u32) -> Self {
        Precision {
            digits: digits.max(1),
        }
    }

    pub fn digits(self) -> u32 {
        self.digits
    }

    pub fn bits(self) -> u32 {
        (self.digits as f64 * LOG2_10).ceil() as u32 + GUARD_BITS
    }

    /// Inverse of [`Precision::bits`]: `from_bits(p.bits()) == p`.
    pub fn from_bits(bits: u32) -> Self {
        let digits = (bits.saturating_sub(GUARD_BITS) as f64 / LOG2_10).floor() as u32;
        Precision::unchecked(digits)
    }

    /// The same precision with `extra` more digits.
    pub fn with_guard(self, extra: u32) -> Self {
        Precision::unchecked(self.digits + extra)
    }

    pub fn real<T>(self, value: T) -> Real
    where
        Float: Assign<T>,
    {
        Real(Float::with_val(self.bits(), value))
    }

    pub fn zero(self) -> Real {
        self.real(0)
    }

    pub fn one(self) -> Real {
        self.real(1)
    }

    pub fn pi(self) -> Real {
        Real(Float::with_val(self.bits(), Constant::Pi))
    }

    /// `num / den` as an exact rational rounded once.
    pub fn ratio(self, num: i64, den: i64) -> Real {
        self.real(num) / self.real(den)
    }

    /// `10^exponent`.
    pub fn pow10(self, exponent: i32) -> Real {
        // Parsing is correctly rounded, unlike repeated multiplication.
        self.parse(&format!("1e{exponent}"))
            .expect("power of ten literal always parses")
    }

    /// `10^(shift - digits)`, the relative tolerance scale used throughout.
    pub fn tolerance(self, shift: i32) -> Real {
        self.pow10(shift - self.digits as i32)
    }

    /// Parse a decimal literal (`"0.5"`, `"1e-5"`, `"-3.25e+2"`).
    pub fn parse(self, text: &str) -> Result<Real> {
        let trimmed = text.trim();
        let parsed = Float::parse(trimmed).map_err(|_| Error::Parse {
            input: text.to_string(),
        })?;
        let value = Float::with_val(self.bits(), parsed);
        if !value.is_finite() {
            return Err(Error::Parse {
                input: text.to_string(),
            });
        }
        Ok(Real(value))
    }
}

impl Default for Precision {
    fn default() -> Self {
        Precision {
            digits: Self::DEFAULT_DIGITS,
        }
    }
}

/// Arbitrary-precision real number.
#[derive(Clone, PartialEq, PartialOrd)]
pub struct Real(Float);

impl Real {
    pub fn precision(&self) -> Precision {
        Precision::from_bits(self.0.prec())
    }

    pub fn as_float(&self) -> &Float {
        &self.0
    }

    pub fn into_float(self) -> Float {
        self.0
    }

    pub fn from_float(value: Float) -> Self {
        Real(value)
    }

    /// Round (or extend) to another precision.
    pub fn to_precision(&self, precision: Precision) -> Real {
        Real(Float::with_val(precision.bits(), &self.0))
    }

    fn unary<F>(&self, op: F) -> Real
    where
        F: FnOnce(Float) -> Float,
    {
        Real(op(self.0.clone()))
    }

    fn constant_like(&self, value: f64) -> Real {
        Real(Float::with_val(self.0.prec(), value))
    }

    pub fn zero_like(&self) -> Real {
        self.constant_like(0.0)
    }

    pub fn one_like(&self) -> Real {
        self.constant_like(1.0)
    }

    pub fn pi_like(&self) -> Real {
        Real(Float::with_val(self.0.prec(), Constant::Pi))
    }

    pub fn sqrt(&self) -> Real {
        self.unary(Float::sqrt)
    }

    pub fn square(&self) -> Real {
        self.unary(Float::square)
    }

    pub fn recip(&self) -> Real {
        self.unary(Float::recip)
    }

    pub fn abs(&self) -> Real {
        self.unary(Float::abs)
    }

    pub fn sin(&self) -> Real {
        self.unary(Float::sin)
    }

    pub fn cos(&self) -> Real {
        self.unary(Float::cos)
    }

    pub fn tan(&self) -> Real {
        self.unary(Float::tan)
    }

    pub fn atan(&self) -> Real {
        self.unary(Float::atan)
    }

    /// Four-quadrant arctangent of `self / x`.
    pub fn atan2(&self, x: &Real) -> Real {
        let prec = self.0.prec().max(x.0.prec());
        Real(Float::with_val(prec, self.0.atan2_ref(&x.0)))
    }

    pub fn sinh(&self) -> Real {
        self.unary(Float::sinh)
    }

    pub fn cosh(&self) -> Real {
        self.unary(Float::cosh)
    }

    pub fn tanh(&self) -> Real {
        self.unary(Float::tanh)
    }

    pub fn exp(&self) -> Real {
        self.unary(Float::exp)
    }

    pub fn ln(&self) -> Real {
        self.unary(Float::ln)
    }

    pub fn log10(&self) -> Real {
        self.unary(Float::log10)
    }

    pub fn floor(&self) -> Real {
        self.unary(Float::floor)
    }

    pub fn powi(&self, n: i32) -> Real {
        use rug::ops::Pow;
        Real(Float::with_val(self.0.prec(), (&self.0).pow(n)))
    }

    /// `sin(pi * self)`.
    pub fn sin_pi(&self) -> Real {
        (self * &self.pi_like()).sin()
    }

    /// `cos(pi * self)`.
    pub fn cos_pi(&self) -> Real {
        (self * &self.pi_like()).cos()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        self.0.is_finite()
    }

    pub fn is_sign_negative(&self) -> bool {
        self.0.is_sign_negative()
    }

    /// -1, 0 or 1. NaN maps to 0.
    pub fn signum(&self) -> i32 {
        match self.0.cmp0() {
            Some(Ordering::Less) => -1,
            Some(Ordering::Greater) => 1,
            _ => 0,
        }
    }

    pub fn max(&self, other: &Real) -> Real {
        if self >= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    pub fn min(&self, other: &Real) -> Real {
        if self <= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }

    /// Decimal exponent estimate, `floor(log10|x|)`; `None` for zero.
    pub fn decimal_exponent(&self) -> Option<i64> {
        if self.0.is_zero() || !self.0.is_finite() {
            return None;
        }
        let e = self.abs().log10().floor();
        Some(e.0.to_f64() as i64)
    }

    /// Scientific notation `d.ddd…e±XX` carrying `digits` significant digits.
    pub fn to_decimal(&self, digits: u32) -> String {
        if self.0.is_zero() {
            return "0".to_string();
        }
        if !self.0.is_finite() {
            return self.0.to_string();
        }
        let (negative, mantissa, exp) = self.0.to_sign_string_exp(10, Some(digits.max(1) as usize));
        // MPFR returns 0.ddd x 10^exp.
        let exponent = exp.unwrap_or(0) as i64 - 1;
        let sign = if negative { "-" } else { "" };
        let (lead, rest) = mantissa.split_at(1);
        if rest.is_empty() {
            format!("{sign}{lead}e{exponent:+03}")
        } else {
            format!("{sign}{lead}.{rest}e{exponent:+03}")
        }
    }

    /// Scientific notation at this value's own precision.
    pub fn to_decimal_full(&self) -> String {
        self.to_decimal(self.precision().digits())
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match f.precision() {
            Some(digits) => f.write_str(&self.to_decimal(digits as u32)),
            None => f.write_str(&self.to_decimal_full()),
        }
    }
}

/// `{:.Ne}` prints `N + 1` significant digits, matching `f64`.
impl fmt::LowerExp for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().map_or(17, |d| d as u32 + 1);
        f.write_str(&self.to_decimal(digits))
    }
}

impl fmt::Debug for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Real({})", self.to_decimal_full())
    }
}

impl PartialEq<f64> for Real {
    fn eq(&self, other: &f64) -> bool {
        self.0 == *other
    }
}

impl PartialOrd<f64> for Real {
    fn partial_cmp(&self, other: &f64) -> Option<Ordering> {
        self.0.partial_cmp(other)
    }
}

impl PartialEq<i32> for Real {
    fn eq(&self, other: &i32) -> bool {
        self.0 == *other
    }
}

impl PartialOrd<i32> for Real {
    fn partial_cmp(&self, other: &i32) -> Option<Ordering> {
        self.0.partial_cmp(other)
    }
}

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real(-self.0)
    }
}

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real(-self.0.clone())
    }
}

macro_rules! real_binop {
    ($Op:ident, $op:ident, $OpAssign:ident, $op_assign:ident) => {
        impl $Op<&Real> for &Real {
            type Output = Real;
            fn $op(self, rhs: &Real) -> Real {
                let prec = self.0.prec().max(rhs.0.prec());
                Real(Float::with_val(prec, $Op::$op(&self.0, &rhs.0)))
            }
        }
        impl $Op<Real> for Real {
            type Output = Real;
            fn $op(self, rhs: Real) -> Real {
                $Op::$op(&self, &rhs)
            }
        }
        impl $Op<&Real> for Real {
            type Output = Real;
            fn $op(self, rhs: &Real) -> Real {
                $Op::$op(&self, rhs)
            }
        }
        impl $Op<Real> for &Real {
            type Output = Real;
            fn $op(self, rhs: Real) -> Real {
                $Op::$op(self, &rhs)
            }
        }
        impl $OpAssign<&Real> for Real {
            fn $op_assign(&mut self, rhs: &Real) {
                *self = $Op::$op(&*self, rhs);
            }
        }
        impl $OpAssign<Real> for Real {
            fn $op_assign(&mut self, rhs: Real) {
                *self = $Op::$op(&*self, &rhs);
            }
        }
        real_binop!(@scalar $Op, $op, $OpAssign, $op_assign, f64);
        real_binop!(@scalar $Op, $op, $OpAssign, $op_assign, i32);
    };
    (@scalar $Op:ident, $op:ident, $OpAssign:ident, $op_assign:ident, $t:ty) => {
        impl $Op<$t> for &Real {
            type Output = Real;
            fn $op(self, rhs: $t) -> Real {
                Real(Float::with_val(self.0.prec(), $Op::$op(&self.0, rhs)))
            }
        }
        impl $Op<$t> for Real {
            type Output = Real;
            fn $op(self, rhs: $t) -> Real {
                $Op::$op(&self, rhs)
            }
        }
        impl $Op<&Real> for $t {
            type Output = Real;
            fn $op(self, rhs: &Real) -> Real {
                Real(Float::with_val(rhs.0.prec(), $Op::$op(self, &rhs.0)))
            }
        }
        impl $Op<Real> for $t {
            type Output = Real;
            fn $op(self, rhs: Real) -> Real {
                $Op::$op(self, &rhs)
            }
        }
        impl $OpAssign<$t> for Real {
            fn $op_assign(&mut self, rhs: $t) {
                $OpAssign::$op_assign(&mut self.0, rhs);
            }
        }
    };
}

real_binop!(Add, add, AddAssign, add_assign);
real_binop!(Sub, sub, SubAssign, sub_assign);
real_binop!(Mul, mul, MulAssign, mul_assign);
real_binop!(Div, div, DivAssign, div_assign);

impl std::iter::Sum for Real {
    /// Panics on an empty iterator: there is no precision to give the zero.
    fn sum<I: Iterator<Item = Real>>(mut iter: I) -> Real {
        let first = iter.next().expect("sum of an empty Real iterator");
        iter.fold(first, |acc, x| acc + x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precision_bits_round_trip() {
        for digits in [30, 31, 40, 57, 100, 1000] {
            let p = Precision::new(digits).unwrap();
            assert_eq!(Precision::from_bits(p.bits()), p);
        }
    }

    #[test]
    fn rejects_low_precision() {
        assert!(Precision::new(29).is_err());
        assert!(Precision::new(30).is_ok());
    }

    #[test]
    fn arithmetic_keeps_the_wider_precision() {
        let lo = Precision::new(30).unwrap().real(1);
        let hi = Precision::new(60).unwrap().real(3);
        assert_eq!((&lo / &hi).precision().digits(), 60);
        assert_eq!((&lo + 1.5).precision().digits(), 30);
    }

    #[test]
    fn one_third_is_accurate_to_the_requested_digits() {
        let p = Precision::new(40).unwrap();
        let third = p.ratio(1, 3);
        let err = (third * 3 - 1).abs();
        assert!(err < p.tolerance(1));
    }

    #[test]
    fn decimal_output_has_signed_exponent() {
        let p = Precision::new(30).unwrap();
        assert_eq!(p.ratio(3, 2).to_decimal(5), "1.5000e+00");
        assert_eq!(p.real(-0.125).to_decimal(3), "-1.25e-01");
        assert_eq!(p.real(1234).to_decimal(4), "1.234e+03");
        assert_eq!(p.zero().to_decimal(4), "0");
    }

    #[test]
    fn parse_rejects_garbage() {
        let p = Precision::default();
        assert!(p.parse("abc").is_err());
        assert!(p.parse("inf").is_err());
        assert_eq!(p.parse(" 0.25 ").unwrap(), 0.25);
    }

    #[test]
    fn pow10_is_exact_for_positive_powers() {
        let p = Precision::default();
        assert_eq!(p.pow10(3), 1000.0);
        assert!((p.pow10(-40) * p.pow10(40) - 1).abs() < p.tolerance(2));
    }
}
