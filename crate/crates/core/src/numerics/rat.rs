use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use rug::{Integer, Rational};
use serde::{Serialize, Serializer};

use super::real::{bits_for, Real};

/// Exact rational number, always in lowest terms with a positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(Rational);

impl Rat {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rat(Rational::from((num, den)))
    }

    pub fn from_int(n: i64) -> Self {
        Rat(Rational::from(n))
    }

    pub fn from_integers(num: Integer, den: Integer) -> Self {
        assert!(den != 0, "zero denominator");
        Rat(Rational::from((num, den)))
    }

    pub fn zero() -> Self {
        Rat(Rational::new())
    }

    pub fn one() -> Self {
        Rat::from_int(1)
    }

    pub fn numer(&self) -> &Integer {
        self.0.numer()
    }

    pub fn denom(&self) -> &Integer {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        *self.0.numer() == 0
    }

    pub fn to_real(&self, digits: u32) -> Real {
        Real::from_float(rug::Float::with_val(bits_for(digits), &self.0), digits)
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }

    pub(crate) fn inner(&self) -> &Rational {
        &self.0
    }
}

impl From<Rational> for Rat {
    fn from(r: Rational) -> Self {
        Rat(r)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self.0.denom() == 1 {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rat({self})")
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

macro_rules! rat_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait<&Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat(Rational::from(&self.0 $op &rhs.0))
            }
        }
        impl $trait<Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                (&self).$method(&rhs)
            }
        }
    };
}

rat_binop!(Add, add, +);
rat_binop!(Sub, sub, -);
rat_binop!(Mul, mul, *);
rat_binop!(Div, div, /);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(Rational::from(-&self.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stored_in_lowest_terms() {
        let r = Rat::new(6, -8);
        assert_eq!(*r.numer(), -3);
        assert_eq!(*r.denom(), 4);
        assert_eq!(r.to_string(), "-3/4");
    }

    #[test]
    fn arithmetic_is_exact() {
        let a = Rat::new(1, 6);
        let b = Rat::new(-1, 30);
        assert_eq!(&a + &b, Rat::new(2, 15));
        assert_eq!(&a * &b, Rat::new(-1, 180));
        assert_eq!(Rat::from_int(0).to_string(), "0");
    }
}
