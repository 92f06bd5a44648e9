//! Arbitrary-precision rational scalars.
//!
//! `Rat` is the ground field for everything in this crate. Values are kept
//! in lowest terms with a positive denominator; zero is `0/1`. Literals are
//! written `"p/q"`, or just `"p"` when the denominator is 1, and parse back
//! from the same form.

use alloc::string::String;
use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An exact rational number in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(BigRational);

impl Rat {
    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    /// Builds `p/q`, reducing to lowest terms. Panics if `q == 0`.
    pub fn new(p: BigInt, q: BigInt) -> Self {
        assert!(!q.is_zero(), "rational with zero denominator");
        Rat(BigRational::new(p, q))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        Rat(self.0.recip())
    }

    /// Parses `"p/q"` or `"p"`. Whitespace around the tokens is accepted.
    pub fn parse(s: &str) -> Result<Self, RatParseError> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (s, None),
        };
        let p: BigInt = num
            .parse()
            .map_err(|_| RatParseError(String::from(s)))?;
        let q: BigInt = match den {
            Some(d) => d.parse().map_err(|_| RatParseError(String::from(s)))?,
            None => BigInt::one(),
        };
        if q.is_zero() {
            return Err(RatParseError(String::from(s)));
        }
        Ok(Rat(BigRational::new(p, q)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatParseError(pub String);

impl fmt::Display for RatParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "malformed rational literal `{}`", self.0)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl core::str::FromStr for Rat {
    type Err = RatParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Rat::parse(s)
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat::from_int(n)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((self.0).$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &'a Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div for Rat {
    type Output = Rat;
    fn div(self, rhs: Rat) -> Rat {
        assert!(!rhs.is_zero(), "division by zero");
        Rat(self.0 / rhs.0)
    }
}

impl<'a> Div<&'a Rat> for &Rat {
    type Output = Rat;
    fn div(self, rhs: &'a Rat) -> Rat {
        assert!(!rhs.is_zero(), "division by zero");
        Rat(&self.0 / &rhs.0)
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, rhs: &Rat) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rat> for Rat {
    fn sub_assign(&mut self, rhs: &Rat) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rat> for Rat {
    fn mul_assign(&mut self, rhs: &Rat) {
        self.0 *= &rhs.0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literals_round_trip() {
        for s in ["0", "1", "-7", "3/4", "-22/7", "100000000000000000001/3"] {
            let r = Rat::parse(s).unwrap();
            assert_eq!(alloc::format!("{r}"), s);
        }
    }

    #[test]
    fn normalization() {
        assert_eq!(Rat::parse("2/4").unwrap(), Rat::parse("1/2").unwrap());
        assert_eq!(Rat::parse("3/-6").unwrap(), Rat::parse("-1/2").unwrap());
        assert_eq!(Rat::parse("0/17").unwrap(), Rat::zero());
        let r = Rat::parse("-4/-8").unwrap();
        assert!(r.denom() > &num_bigint::BigInt::from(0));
        assert_eq!(r, Rat::parse("1/2").unwrap());
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "1/0", "a", "1/2/3", "1.5"] {
            assert!(Rat::parse(s).is_err(), "accepted {s:?}");
        }
    }

    #[test]
    fn arithmetic() {
        let a = Rat::parse("1/2").unwrap();
        let b = Rat::parse("1/3").unwrap();
        assert_eq!(&a + &b, Rat::parse("5/6").unwrap());
        assert_eq!(&a - &b, Rat::parse("1/6").unwrap());
        assert_eq!(&a * &b, Rat::parse("1/6").unwrap());
        assert_eq!(&a / &b, Rat::parse("3/2").unwrap());
        assert_eq!(-&a, Rat::parse("-1/2").unwrap());
    }
}
