//! Arbitrary-precision rational numbers in canonical reduced form.
//!
//! `Rational` wraps `num_rational::BigRational` and fixes the conventions the
//! rest of the workspace relies on:
//!
//! - canonical form after every operation: gcd(|numerator|, denominator) = 1,
//!   denominator >= 1, zero is 0/1
//! - the sign lives on the numerator
//! - division is explicit and fallible ([`Rational::try_div`]); there is no
//!   `Div` operator that could panic on a zero divisor
//! - display/serialization is always the two-part string `numerator/denominator`

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::CoreError;

/// An exact rational number, always reduced, denominator always positive.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// 0/1.
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    /// 1/1.
    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    /// `numer/denom` reduced to canonical form. Fails on a zero denominator.
    pub fn new(numer: i64, denom: i64) -> Result<Self, CoreError> {
        Self::from_big(BigInt::from(numer), BigInt::from(denom))
    }

    pub fn from_big(numer: BigInt, denom: BigInt) -> Result<Self, CoreError> {
        if denom.is_zero() {
            return Err(CoreError::DivisionByZero);
        }
        Ok(Rational(BigRational::new(numer, denom)))
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

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// The value as an `i64` if it is an integer in range.
    pub fn as_i64(&self) -> Option<i64> {
        if self.0.is_integer() {
            self.0.numer().to_i64()
        } else {
            None
        }
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Multiplicative inverse; error on zero.
    pub fn recip(&self) -> Result<Self, CoreError> {
        if self.is_zero() {
            return Err(CoreError::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    /// Exact division; error on a zero divisor.
    pub fn try_div(&self, rhs: &Self) -> Result<Self, CoreError> {
        if rhs.is_zero() {
            return Err(CoreError::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    /// Exact integer power, negative exponents included (e.g. 4^-1 = 1/4).
    /// Errors on 0 raised to a negative power.
    pub fn pow(&self, exp: i64) -> Result<Self, CoreError> {
        if exp < 0 && self.is_zero() {
            return Err(CoreError::DivisionByZero);
        }
        let mag = exp.unsigned_abs();
        let mut acc = Rational::one();
        let mut base = self.clone();
        let mut e = mag;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        if exp < 0 {
            acc.recip()
        } else {
            Ok(acc)
        }
    }

    /// Nearest f64 (numerator and denominator each rounded, then divided).
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn min(&self, other: &Self) -> Self {
        match self.cmp(other) {
            Ordering::Greater => other.clone(),
            _ => self.clone(),
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

/// Parses `"n"` or `"n/d"`.
impl FromStr for Rational {
    type Err = CoreError;

    fn from_str(s: &str) -> Result<Self, CoreError> {
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let numer = BigInt::from_str(num.trim()).map_err(|_| CoreError::DivisionByZero)?;
        let denom = BigInt::from_str(den.trim()).map_err(|_| CoreError::DivisionByZero)?;
        Rational::from_big(numer, denom)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl std::ops::$trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(std::ops::$trait::$method(&self.0, &rhs.0))
            }
        }

        impl std::ops::$trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                std::ops::$trait::$method(&self, &rhs)
            }
        }

        impl std::ops::$trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                std::ops::$trait::$method(&self, rhs)
            }
        }

        impl std::ops::$trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                std::ops::$trait::$method(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl std::ops::Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl std::ops::Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}
