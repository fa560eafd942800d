//! The arithmetic surface shared by [`Rational`] and [`Jet`].
//!
//! Combinatorial primitives (Pochhammer symbols, binomials, harmonic numbers)
//! and the identity evaluators are written once against this trait; running
//! them over jets turns every evaluator into its own exact derivative.

use crate::error::CoreError;
use crate::jet::Jet;
use crate::rational::Rational;

pub trait Scalar: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;
    fn from_rational(r: &Rational) -> Self;

    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;

    /// Exact division; errors when the divisor is not invertible.
    fn try_div(&self, rhs: &Self) -> Result<Self, CoreError>;

    /// Whether division by this value is defined
    /// (nonzero rational; jet with nonzero value component).
    fn invertible(&self) -> bool;

    fn is_zero(&self) -> bool;

    fn powu(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }
}

impl Scalar for Rational {
    fn zero() -> Self {
        Rational::zero()
    }

    fn one() -> Self {
        Rational::one()
    }

    fn from_int(n: i64) -> Self {
        Rational::from_integer(n)
    }

    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    fn try_div(&self, rhs: &Self) -> Result<Self, CoreError> {
        Rational::try_div(self, rhs)
    }

    fn invertible(&self) -> bool {
        !Rational::is_zero(self)
    }

    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
}

impl Scalar for Jet {
    fn zero() -> Self {
        Jet::constant(Rational::zero())
    }

    fn one() -> Self {
        Jet::constant(Rational::one())
    }

    fn from_int(n: i64) -> Self {
        Jet::constant(Rational::from_integer(n))
    }

    fn from_rational(r: &Rational) -> Self {
        Jet::constant(r.clone())
    }

    fn add(&self, rhs: &Self) -> Self {
        Jet::add(self, rhs)
    }

    fn sub(&self, rhs: &Self) -> Self {
        Jet::sub(self, rhs)
    }

    fn mul(&self, rhs: &Self) -> Self {
        Jet::mul(self, rhs)
    }

    fn neg(&self) -> Self {
        Jet::neg(self)
    }

    fn try_div(&self, rhs: &Self) -> Result<Self, CoreError> {
        Jet::try_div(self, rhs)
    }

    fn invertible(&self) -> bool {
        !Rational::is_zero(self.value())
    }

    fn is_zero(&self) -> bool {
        Rational::is_zero(self.value())
            && Rational::is_zero(self.d1())
            && Rational::is_zero(self.c2())
    }
}
