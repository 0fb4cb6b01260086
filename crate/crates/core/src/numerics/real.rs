use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use rug::float::Constant;
use rug::ops::Pow;
use rug::Float;
use serde::{Serialize, Serializer};

use crate::error::{Result, ZetaError};

/// Smallest working precision accepted anywhere in the crate.
pub const MIN_DIGITS: u32 = 15;
/// Working precision used when the caller does not choose one.
pub const DEFAULT_DIGITS: u32 = 50;

const GUARD_BITS: u32 = 16;

/// Binary precision carried for `digits` decimal digits.
pub(crate) fn bits_for(digits: u32) -> u32 {
    (f64::from(digits) * std::f64::consts::LOG2_10).ceil() as u32 + GUARD_BITS
}

/// Arbitrary-precision real number tagged with its working precision in
/// decimal digits.
///
/// Binary operations run at the larger of the two operands' precisions.
#[derive(Clone)]
pub struct Real {
    v: Float,
    digits: u32,
}

impl Real {
    pub(crate) fn from_float(v: Float, digits: u32) -> Self {
        let digits = digits.max(MIN_DIGITS);
        let mut v = v;
        let bits = bits_for(digits);
        if v.prec() != bits {
            v.set_prec(bits);
        }
        Real { v, digits }
    }

    pub(crate) fn bits(&self) -> u32 {
        bits_for(self.digits)
    }

    pub fn zero(digits: u32) -> Self {
        Self::from_float(Float::new(bits_for(digits)), digits)
    }

    pub fn one(digits: u32) -> Self {
        Self::from_i64(1, digits)
    }

    pub fn from_i64(n: i64, digits: u32) -> Self {
        Self::from_float(Float::with_val(bits_for(digits), n), digits)
    }

    pub fn from_u64(n: u64, digits: u32) -> Self {
        Self::from_float(Float::with_val(bits_for(digits), n), digits)
    }

    /// Exact conversion of the binary value of `x`.
    pub fn from_f64(x: f64, digits: u32) -> Self {
        Self::from_float(Float::with_val(bits_for(digits), x), digits)
    }

    /// Parses a decimal literal such as `"1e-30"` or `"14.134725"` at the
    /// given precision. Unlike `from_f64`, decimal literals are rounded once,
    /// at full working precision.
    pub fn parse(text: &str, digits: u32) -> Result<Self> {
        let parsed =
            Float::parse(text.trim()).map_err(|e| ZetaError::Parse(format!("{text:?}: {e}")))?;
        Ok(Self::from_float(
            Float::with_val(bits_for(digits), parsed),
            digits,
        ))
    }

    /// `10^exp` at the given precision.
    /// Exact integer rounded to working precision.
    pub fn from_integer(n: &rug::Integer, digits: u32) -> Self {
        Self::from_float(Float::with_val(bits_for(digits), n), digits)
    }

    pub fn pow10(exp: i32, digits: u32) -> Self {
        let ten = Float::with_val(bits_for(digits), 10);
        Self::from_float(ten.pow(exp), digits)
    }

    pub fn pi(digits: u32) -> Self {
        Self::from_float(Float::with_val(bits_for(digits), Constant::Pi), digits)
    }

    pub fn ln2(digits: u32) -> Self {
        Self::from_float(Float::with_val(bits_for(digits), Constant::Log2), digits)
    }

    pub fn infinity(digits: u32) -> Self {
        Self::from_float(
            Float::with_val(bits_for(digits), rug::float::Special::Infinity),
            digits,
        )
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    /// Same value re-rounded to a different working precision.
    pub fn with_digits(&self, digits: u32) -> Self {
        Self::from_float(Float::with_val(bits_for(digits), &self.v), digits)
    }

    /// `10^{-digits}` for this value's working precision.
    pub fn epsilon(&self) -> Self {
        Self::pow10(-(self.digits as i32), self.digits)
    }

    pub fn to_f64(&self) -> f64 {
        self.v.to_f64()
    }

    pub fn is_finite(&self) -> bool {
        self.v.is_finite()
    }

    pub fn is_zero(&self) -> bool {
        self.v.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.v.is_sign_negative() && !self.v.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        !self.v.is_sign_negative() && !self.v.is_zero()
    }

    fn unary(&self, f: impl FnOnce(Float) -> Float) -> Self {
        Self::from_float(f(self.v.clone()), self.digits)
    }

    pub fn abs(&self) -> Self {
        self.unary(Float::abs)
    }
    pub fn sqrt(&self) -> Self {
        self.unary(Float::sqrt)
    }
    pub fn exp(&self) -> Self {
        self.unary(Float::exp)
    }
    pub fn ln(&self) -> Self {
        self.unary(Float::ln)
    }
    pub fn sin(&self) -> Self {
        self.unary(Float::sin)
    }
    pub fn cos(&self) -> Self {
        self.unary(Float::cos)
    }
    pub fn sinh(&self) -> Self {
        self.unary(Float::sinh)
    }
    pub fn cosh(&self) -> Self {
        self.unary(Float::cosh)
    }
    pub fn recip(&self) -> Self {
        self.unary(Float::recip)
    }
    pub fn floor(&self) -> Self {
        self.unary(Float::floor)
    }
    pub fn square(&self) -> Self {
        self.unary(Float::square)
    }

    pub fn sin_cos(&self) -> (Self, Self) {
        let (s, c) = self.v.clone().sin_cos(Float::new(self.v.prec()));
        (
            Self::from_float(s, self.digits),
            Self::from_float(c, self.digits),
        )
    }

    pub fn atan2(&self, x: &Real) -> Self {
        let d = self.digits.max(x.digits);
        let y = Float::with_val(bits_for(d), &self.v);
        Self::from_float(y.atan2(&x.v), d)
    }

    pub fn hypot(&self, other: &Real) -> Self {
        let d = self.digits.max(other.digits);
        let a = Float::with_val(bits_for(d), &self.v);
        Self::from_float(a.hypot(&other.v), d)
    }

    pub fn pow(&self, e: &Real) -> Self {
        let d = self.digits.max(e.digits);
        Self::from_float(Float::with_val(bits_for(d), (&self.v).pow(&e.v)), d)
    }

    pub fn powi(&self, e: i32) -> Self {
        Self::from_float(Float::with_val(self.bits(), (&self.v).pow(e)), self.digits)
    }

    /// Integer value when the number is an exact integer that fits in `i64`.
    pub fn to_i64_exact(&self) -> Option<i64> {
        if !self.v.is_integer() {
            return None;
        }
        self.v.to_integer()?.to_i64()
    }

    pub fn max(&self, other: &Real) -> Self {
        if self >= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    pub fn min(&self, other: &Real) -> Self {
        if self <= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    /// `max(self, other)` on magnitudes, convenient for tolerance scaling.
    pub fn max_f64(&self, other: f64) -> Self {
        let o = Real::from_f64(other, self.digits);
        self.max(&o)
    }

    pub fn lt_f64(&self, x: f64) -> bool {
        self.v < x
    }

    pub fn gt_f64(&self, x: f64) -> bool {
        self.v > x
    }

    /// Fixed-width scientific rendering with `sig` significant digits.
    pub fn to_sci(&self, sig: usize) -> String {
        format_sci(&self.v, sig.max(1))
    }

    /// Shortest decimal string that reads back to within half a unit in the
    /// last of `digits` significant digits.
    pub fn to_decimal_string(&self) -> String {
        if !self.v.is_finite() {
            return if self.v.is_nan() {
                "NaN".into()
            } else if self.v.is_sign_negative() {
                "-inf".into()
            } else {
                "inf".into()
            };
        }
        if self.v.is_zero() {
            return "0".into();
        }
        let d = self.digits as usize;
        let half_ulp = Float::with_val(self.bits(), self.v.clone().abs() * 0.5)
            * Float::with_val(
                self.bits(),
                Float::with_val(self.bits(), 10).pow(1 - d as i32),
            );
        for sig in 1..=d {
            let s = format_sci(&self.v, sig);
            let back = Float::with_val(self.bits(), Float::parse(&s).expect("own output parses"));
            let err = Float::with_val(self.bits(), &back - &self.v).abs();
            if err <= half_ulp {
                return s;
            }
        }
        format_sci(&self.v, d)
    }
}

/// Renders `v` as `[-]d.ddd…e±x`, or plain positional notation when the
/// exponent is small. Trailing zeros are trimmed.
fn format_sci(v: &Float, sig: usize) -> String {
    let (neg, mant, exp) = v.to_sign_string_exp(10, Some(sig));
    let exp = match exp {
        Some(e) => e,
        None => return mant,
    };
    let mant = mant.trim_end_matches('0');
    let mant = if mant.is_empty() { "0" } else { mant };
    // value = 0.MANT × 10^exp = M.ANT × 10^(exp-1)
    let e10 = exp - 1;
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    if (-5..=20).contains(&e10) {
        if e10 < 0 {
            out.push_str("0.");
            for _ in 0..(-e10 - 1) {
                out.push('0');
            }
            out.push_str(mant);
        } else {
            let int_len = (e10 + 1) as usize;
            if mant.len() <= int_len {
                out.push_str(mant);
                for _ in mant.len()..int_len {
                    out.push('0');
                }
            } else {
                out.push_str(&mant[..int_len]);
                out.push('.');
                out.push_str(&mant[int_len..]);
            }
        }
    } else {
        out.push_str(&mant[..1]);
        if mant.len() > 1 {
            out.push('.');
            out.push_str(&mant[1..]);
        }
        out.push('e');
        out.push_str(&e10.to_string());
    }
    out
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match f.precision() {
            Some(p) => f.write_str(&format_sci(&self.v, p.max(1))),
            None => f.write_str(&self.to_decimal_string()),
        }
    }
}

impl fmt::Debug for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Real({}; {}d)", self.to_decimal_string(), self.digits)
    }
}

/// Serialized as the shortest round-tripping decimal string, never as a
/// binary float.
impl Serialize for Real {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_decimal_string())
    }
}

impl PartialEq for Real {
    fn eq(&self, other: &Self) -> bool {
        self.v == other.v
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.v.partial_cmp(&other.v)
    }
}

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real::from_float(-self.v, self.digits)
    }
}

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real::from_float(-self.v.clone(), self.digits)
    }
}

macro_rules! real_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait<&Real> for &Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                let d = self.digits.max(rhs.digits);
                Real::from_float(Float::with_val(bits_for(d), &self.v $op &rhs.v), d)
            }
        }
        impl $trait<Real> for Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Real> for Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                (&self).$method(rhs)
            }
        }
        impl $trait<Real> for &Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                self.$method(&rhs)
            }
        }
        impl $trait<f64> for &Real {
            type Output = Real;
            fn $method(self, rhs: f64) -> Real {
                Real::from_float(Float::with_val(self.bits(), &self.v $op rhs), self.digits)
            }
        }
        impl $trait<f64> for Real {
            type Output = Real;
            fn $method(self, rhs: f64) -> Real {
                (&self).$method(rhs)
            }
        }
        impl $trait<&Real> for f64 {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                Real::from_float(Float::with_val(rhs.bits(), self $op &rhs.v), rhs.digits)
            }
        }
        impl $trait<Real> for f64 {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                self.$method(&rhs)
            }
        }
    };
}

real_binop!(Add, add, +);
real_binop!(Sub, sub, -);
real_binop!(Mul, mul, *);
real_binop!(Div, div, /);

impl std::iter::Sum for Real {
    fn sum<I: Iterator<Item = Real>>(iter: I) -> Real {
        let mut acc: Option<Real> = None;
        for x in iter {
            acc = Some(match acc {
                None => x,
                Some(a) => a + x,
            });
        }
        acc.unwrap_or_else(|| Real::zero(MIN_DIGITS))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_runs_at_max_precision() {
        let a = Real::one(20);
        let b = Real::from_i64(3, 60);
        let q = &a / &b;
        assert_eq!(q.digits(), 60);
        let back = &q * 3.0;
        assert!((&back - 1.0).abs().lt_f64(1e-58));
    }

    #[test]
    fn decimal_string_is_short_for_simple_values() {
        assert_eq!(Real::from_f64(0.5, 50).to_decimal_string(), "0.5");
        assert_eq!(Real::from_i64(-12, 50).to_decimal_string(), "-12");
        assert_eq!(
            Real::parse("1e-30", 50).unwrap().to_decimal_string(),
            "1e-30"
        );
        assert_eq!(Real::zero(30).to_decimal_string(), "0");
    }

    #[test]
    fn pi_round_trips_at_carried_precision() {
        let p = Real::pi(40);
        let s = p.to_decimal_string();
        assert!(s.starts_with("3.14159265358979323846264338327950288419"));
        let back = Real::parse(&s, 40).unwrap();
        let rel = ((&back - &p) / &p).abs();
        assert!(rel <= Real::pow10(-39, 40));
    }

    #[test]
    fn precision_floor_is_enforced() {
        assert_eq!(Real::one(3).digits(), MIN_DIGITS);
    }

    #[test]
    fn exact_integer_detection() {
        assert_eq!(Real::from_i64(7, 30).to_i64_exact(), Some(7));
        assert_eq!(Real::from_f64(7.5, 30).to_i64_exact(), None);
    }
}
