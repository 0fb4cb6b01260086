use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use serde::Serialize;

use super::real::Real;

/// Complex value stored as a pair of [`Real`]s.
#[derive(Clone, PartialEq, Serialize)]
pub struct Cplx {
    pub re: Real,
    pub im: Real,
}

impl Cplx {
    pub fn new(re: Real, im: Real) -> Self {
        Cplx { re, im }
    }

    pub fn from_real(re: Real) -> Self {
        let im = Real::zero(re.digits());
        Cplx { re, im }
    }

    pub fn zero(digits: u32) -> Self {
        Cplx::from_real(Real::zero(digits))
    }

    pub fn one(digits: u32) -> Self {
        Cplx::from_real(Real::one(digits))
    }

    /// `re + i·im` from binary floats.
    pub fn from_f64(re: f64, im: f64, digits: u32) -> Self {
        Cplx::new(Real::from_f64(re, digits), Real::from_f64(im, digits))
    }

    pub fn digits(&self) -> u32 {
        self.re.digits().max(self.im.digits())
    }

    pub fn with_digits(&self, digits: u32) -> Self {
        Cplx::new(self.re.with_digits(digits), self.im.with_digits(digits))
    }

    /// `|z|` via `hypot`, which does not overflow for finite parts.
    pub fn norm(&self) -> Real {
        self.re.hypot(&self.im)
    }

    pub fn arg(&self) -> Real {
        self.im.atan2(&self.re)
    }

    pub fn conj(&self) -> Self {
        Cplx::new(self.re.clone(), -&self.im)
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// Multiplication by `i`.
    pub fn mul_i(&self) -> Self {
        Cplx::new(-&self.im, self.re.clone())
    }

    pub fn scale(&self, k: &Real) -> Self {
        Cplx::new(&self.re * k, &self.im * k)
    }

    pub fn recip(&self) -> Self {
        let d = &self.re.square() + &self.im.square();
        Cplx::new(&self.re / &d, -(&self.im / &d))
    }

    pub fn exp(&self) -> Self {
        let m = self.re.exp();
        let (s, c) = self.im.sin_cos();
        Cplx::new(&m * &c, &m * &s)
    }

    /// Principal branch of the logarithm.
    pub fn ln(&self) -> Self {
        Cplx::new(self.norm().ln(), self.arg())
    }

    /// Principal power `self^e`.
    pub fn pow(&self, e: &Cplx) -> Self {
        (e * &self.ln()).exp()
    }

    /// `base^e` for a positive real base.
    pub fn real_pow(base: &Real, e: &Cplx) -> Self {
        let lb = base.ln();
        let m = (&e.re * &lb).exp();
        let (s, c) = (&e.im * &lb).sin_cos();
        Cplx::new(&m * &c, &m * &s)
    }

    /// `n^{-s}` for a positive integer `n`.
    pub fn n_pow_neg(n: u64, s: &Cplx) -> Self {
        let digits = s.digits();
        Cplx::real_pow(&Real::from_u64(n, digits), &(-s))
    }

    pub fn sin(&self) -> Self {
        let (s, c) = self.re.sin_cos();
        Cplx::new(&s * &self.im.cosh(), &c * &self.im.sinh())
    }

    pub fn sinh(&self) -> Self {
        let (s, c) = self.im.sin_cos();
        Cplx::new(&self.re.sinh() * &c, &self.re.cosh() * &s)
    }
}

impl fmt::Display for Cplx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_negative() {
            write!(f, "{} - {}i", self.re, self.im.abs())
        } else {
            write!(f, "{} + {}i", self.re, self.im)
        }
    }
}

impl fmt::Debug for Cplx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cplx({self})")
    }
}

impl Neg for &Cplx {
    type Output = Cplx;
    fn neg(self) -> Cplx {
        Cplx::new(-&self.re, -&self.im)
    }
}

impl Neg for Cplx {
    type Output = Cplx;
    fn neg(self) -> Cplx {
        -&self
    }
}

impl Add<&Cplx> for &Cplx {
    type Output = Cplx;
    fn add(self, rhs: &Cplx) -> Cplx {
        Cplx::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub<&Cplx> for &Cplx {
    type Output = Cplx;
    fn sub(self, rhs: &Cplx) -> Cplx {
        Cplx::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul<&Cplx> for &Cplx {
    type Output = Cplx;
    fn mul(self, rhs: &Cplx) -> Cplx {
        Cplx::new(
            &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        )
    }
}

impl Div<&Cplx> for &Cplx {
    type Output = Cplx;
    fn div(self, rhs: &Cplx) -> Cplx {
        let d = &rhs.re.square() + &rhs.im.square();
        let re = &(&self.re * &rhs.re) + &(&self.im * &rhs.im);
        let im = &(&self.im * &rhs.re) - &(&self.re * &rhs.im);
        Cplx::new(&re / &d, &im / &d)
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait<Cplx> for Cplx {
            type Output = Cplx;
            fn $method(self, rhs: Cplx) -> Cplx {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Cplx> for Cplx {
            type Output = Cplx;
            fn $method(self, rhs: &Cplx) -> Cplx {
                (&self).$method(rhs)
            }
        }
        impl $trait<Cplx> for &Cplx {
            type Output = Cplx;
            fn $method(self, rhs: Cplx) -> Cplx {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Mul<&Real> for &Cplx {
    type Output = Cplx;
    fn mul(self, rhs: &Real) -> Cplx {
        self.scale(rhs)
    }
}

impl Mul<&Real> for Cplx {
    type Output = Cplx;
    fn mul(self, rhs: &Real) -> Cplx {
        self.scale(rhs)
    }
}

impl Div<&Real> for &Cplx {
    type Output = Cplx;
    fn div(self, rhs: &Real) -> Cplx {
        Cplx::new(&self.re / rhs, &self.im / rhs)
    }
}

impl Div<&Real> for Cplx {
    type Output = Cplx;
    fn div(self, rhs: &Real) -> Cplx {
        &self / rhs
    }
}

impl Add<&Real> for &Cplx {
    type Output = Cplx;
    fn add(self, rhs: &Real) -> Cplx {
        Cplx::new(&self.re + rhs, self.im.clone())
    }
}

impl Sub<&Real> for &Cplx {
    type Output = Cplx;
    fn sub(self, rhs: &Real) -> Cplx {
        Cplx::new(&self.re - rhs, self.im.clone())
    }
}

impl Mul<f64> for &Cplx {
    type Output = Cplx;
    fn mul(self, rhs: f64) -> Cplx {
        Cplx::new(&self.re * rhs, &self.im * rhs)
    }
}

impl Add<f64> for &Cplx {
    type Output = Cplx;
    fn add(self, rhs: f64) -> Cplx {
        Cplx::new(&self.re + rhs, self.im.clone())
    }
}

impl Sub<f64> for &Cplx {
    type Output = Cplx;
    fn sub(self, rhs: f64) -> Cplx {
        Cplx::new(&self.re - rhs, self.im.clone())
    }
}

impl std::iter::Sum for Cplx {
    fn sum<I: Iterator<Item = Cplx>>(iter: I) -> Cplx {
        let mut acc: Option<Cplx> = None;
        for x in iter {
            acc = Some(match acc {
                None => x,
                Some(a) => a + x,
            });
        }
        acc.unwrap_or_else(|| Cplx::zero(super::real::MIN_DIGITS))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euler_identity() {
        let ipi = Cplx::new(Real::zero(40), Real::pi(40));
        let z = ipi.exp();
        assert!((&z.re + 1.0).abs().lt_f64(1e-38));
        assert!(z.im.abs().lt_f64(1e-38));
    }

    #[test]
    fn norm_does_not_overflow() {
        let big = Real::pow10(300_000_000, 30);
        let z = Cplx::new(big.clone(), big.clone());
        let n = z.norm();
        assert!(n.is_finite());
        let ratio = &n / &big;
        assert!((ratio - 2f64.sqrt()).abs().lt_f64(1e-15));
    }

    #[test]
    fn division_inverts_multiplication() {
        let a = Cplx::from_f64(1.5, -2.25, 30);
        let b = Cplx::from_f64(-0.75, 3.0, 30);
        let q = &(&a * &b) / &b;
        assert!((&q - &a).norm().lt_f64(1e-28));
    }

    #[test]
    fn real_pow_matches_exp_ln() {
        let s = Cplx::from_f64(1.0, 14.134725, 40);
        let a = Cplx::n_pow_neg(7, &s);
        let b = (-(&s * &Cplx::from_real(Real::from_i64(7, 40).ln()))).exp();
        assert!((&a - &b).norm().lt_f64(1e-36));
    }

    #[test]
    fn sin_and_sinh_are_related_by_rotation() {
        // sinh(iz) = i sin(z)
        let z = Cplx::from_f64(0.3, -1.1, 30);
        let lhs = z.mul_i().sinh();
        let rhs = z.sin().mul_i();
        assert!((&lhs - &rhs).norm().lt_f64(1e-28));
    }
}
