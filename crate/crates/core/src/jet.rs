//! Order-2 jets: truncated Taylor expansions over [`Rational`].
//!
//! A jet carries f(x), f'(x) and f''(x)/2 through arithmetic, so the first and
//! second derivatives of any rational expression come out exactly. Seeding
//! with [`Jet::variable`] differentiates with respect to that variable;
//! [`Jet::constant`] embeds a scalar with zero derivative.

use std::fmt;

use crate::error::CoreError;
use crate::rational::Rational;

/// Truncated Taylor expansion f(x) + f'(x) t + (f''(x)/2) t^2.
#[derive(Clone, PartialEq, Eq)]
pub struct Jet {
    c0: Rational,
    c1: Rational,
    c2: Rational,
}

impl Jet {
    pub fn new(c0: Rational, c1: Rational, c2: Rational) -> Self {
        Jet { c0, c1, c2 }
    }

    /// The identity function expanded at `x`: (x, 1, 0).
    pub fn variable(x: Rational) -> Self {
        Jet {
            c0: x,
            c1: Rational::one(),
            c2: Rational::zero(),
        }
    }

    /// A constant: (c, 0, 0).
    pub fn constant(c: Rational) -> Self {
        Jet {
            c0: c,
            c1: Rational::zero(),
            c2: Rational::zero(),
        }
    }

    /// Value component f(x).
    pub fn value(&self) -> &Rational {
        &self.c0
    }

    /// First Taylor coefficient, i.e. f'(x).
    pub fn d1(&self) -> &Rational {
        &self.c1
    }

    /// Second Taylor coefficient, i.e. f''(x)/2.
    pub fn c2(&self) -> &Rational {
        &self.c2
    }

    /// Full second derivative f''(x) = 2 c2.
    pub fn d2(&self) -> Rational {
        &Rational::from_integer(2) * &self.c2
    }

    pub fn add(&self, rhs: &Jet) -> Jet {
        Jet {
            c0: &self.c0 + &rhs.c0,
            c1: &self.c1 + &rhs.c1,
            c2: &self.c2 + &rhs.c2,
        }
    }

    pub fn sub(&self, rhs: &Jet) -> Jet {
        Jet {
            c0: &self.c0 - &rhs.c0,
            c1: &self.c1 - &rhs.c1,
            c2: &self.c2 - &rhs.c2,
        }
    }

    /// Truncated product: (ab)' = a'b + ab', (ab)''/2 = a b2 + a1 b1 + a2 b.
    pub fn mul(&self, rhs: &Jet) -> Jet {
        Jet {
            c0: &self.c0 * &rhs.c0,
            c1: &(&self.c0 * &rhs.c1) + &(&self.c1 * &rhs.c0),
            c2: &(&(&self.c0 * &rhs.c2) + &(&self.c1 * &rhs.c1)) + &(&self.c2 * &rhs.c0),
        }
    }

    pub fn neg(&self) -> Jet {
        Jet {
            c0: -&self.c0,
            c1: -&self.c1,
            c2: -&self.c2,
        }
    }

    /// Truncated quotient. The divisor must have a nonzero value component.
    pub fn try_div(&self, rhs: &Jet) -> Result<Jet, CoreError> {
        let q0 = self.c0.try_div(&rhs.c0)?;
        let q1 = (&self.c1 - &(&q0 * &rhs.c1)).try_div(&rhs.c0)?;
        let q2 = (&(&self.c2 - &(&q0 * &rhs.c2)) - &(&q1 * &rhs.c1)).try_div(&rhs.c0)?;
        Ok(Jet {
            c0: q0,
            c1: q1,
            c2: q2,
        })
    }

    pub fn recip(&self) -> Result<Jet, CoreError> {
        Jet::constant(Rational::one()).try_div(self)
    }
}

impl fmt::Display for Jet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.c0, self.c1, self.c2)
    }
}

impl fmt::Debug for Jet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn variable_seeds() {
        let v = Jet::variable(Rational::zero());
        assert_eq!(v, Jet::new(r(0, 1), r(1, 1), r(0, 1)));
        let v = Jet::variable(r(1, 2));
        assert_eq!(v, Jet::new(r(1, 2), r(1, 1), r(0, 1)));
    }

    #[test]
    fn constant_embedding() {
        assert_eq!(Jet::constant(r(5, 1)), Jet::new(r(5, 1), r(0, 1), r(0, 1)));
    }

    #[test]
    fn square_of_variable() {
        // x^2 at x=3: value 9, d/dx = 6, half second derivative = 1
        let x = Jet::variable(r(3, 1));
        let sq = x.mul(&x);
        assert_eq!(sq, Jet::new(r(9, 1), r(6, 1), r(1, 1)));
    }

    #[test]
    fn reciprocal_of_variable() {
        // 1/x at x=2: Taylor coefficients 1/2, -1/4, 1/8
        let x = Jet::variable(r(2, 1));
        let inv = x.recip().unwrap();
        assert_eq!(inv, Jet::new(r(1, 2), r(-1, 4), r(1, 8)));
    }

    #[test]
    fn sum_with_constant() {
        let v = Jet::variable(Rational::zero()).add(&Jet::constant(Rational::one()));
        assert_eq!(v, Jet::new(r(1, 1), r(1, 1), r(0, 1)));
    }

    #[test]
    fn division_needs_nonzero_value() {
        let zero_valued = Jet::variable(Rational::zero());
        let err = Jet::constant(Rational::one()).try_div(&zero_valued);
        assert_eq!(err, Err(CoreError::DivisionByZero));
    }

    #[test]
    fn quotient_times_divisor_round_trips() {
        let a = Jet::new(r(3, 5), r(-2, 7), r(1, 3));
        let b = Jet::new(r(-4, 9), r(5, 2), r(7, 11));
        let q = a.try_div(&b).unwrap();
        assert_eq!(q.mul(&b), a);
    }
}
