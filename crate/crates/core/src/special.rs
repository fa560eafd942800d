//! Combinatorial primitives over any [`Scalar`]: shifted factorials,
//! generalized binomial coefficients and generalized harmonic numbers,
//! plus the exact rule checks that tie them to jet differentiation.
//!
//! Conventions:
//! - the shifted factorial (x)_n = x (x+1) ... (x+n-1), with (x)_0 = 1
//!   (empty product)
//! - binom(z, t) = (z - t + 1)_t / t!, so rational upper arguments such as
//!   binom(n - 1/2, n) are first-class
//! - H_n^(l)(x) = sum_{k=1..n} 1/(x+k)^l, with H_0^(l)(x) = 0

use num_bigint::BigInt;

use crate::error::CoreError;
use crate::jet::Jet;
use crate::rational::Rational;
use crate::scalar::Scalar;

/// Shifted factorial (x)_n = x (x+1) ... (x+n-1); empty product at n = 0.
pub fn pochhammer<T: Scalar>(x: &T, n: u64) -> T {
    let mut acc = T::one();
    let mut factor = x.clone();
    for j in 0..n {
        if j > 0 {
            factor = factor.add(&T::one());
        }
        acc = acc.mul(&factor);
    }
    acc
}

/// n! as an exact rational.
pub fn factorial(n: u64) -> Rational {
    let mut acc = BigInt::from(1);
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    Rational::from_bigint(acc)
}

/// Generalized binomial coefficient binom(z, t) = (z - t + 1)_t / t!.
///
/// Integer arguments reproduce the ordinary binomial coefficient; the value is
/// zero exactly when z is an integer in 0..=t-1.
pub fn binomial_gen<T: Scalar>(z: &T, t: u64) -> T {
    let start = z.sub(&T::from_int(t as i64 - 1));
    let numerator = pochhammer(&start, t);
    numerator
        .try_div(&T::from_rational(&factorial(t)))
        .expect("factorial is nonzero")
}

/// Ordinary binomial coefficient for integer arguments.
pub fn binomial_int(n: i64, t: u64) -> Rational {
    binomial_gen(&Rational::from_integer(n), t)
}

/// Generalized harmonic number H_n^(ell)(x) = sum_{k=1..n} 1/(x+k)^ell.
///
/// `ell` must be >= 1. Fails with the offending summand index when x + k = 0.
pub fn harmonic<T: Scalar>(n: u64, ell: u32, x: &T) -> Result<T, CoreError> {
    assert!(ell >= 1, "harmonic order must be >= 1");
    let mut sum = T::zero();
    let mut shifted = x.clone();
    for k in 1..=n {
        shifted = shifted.add(&T::one());
        let power = shifted.powu(ell);
        let term = T::one()
            .try_div(&power)
            .map_err(|_| CoreError::Pole { index: k })?;
        sum = sum.add(&term);
    }
    Ok(sum)
}

/// Classical harmonic number H_n^(ell) (the x = 0 case), never a pole.
pub fn harmonic_int(n: u64, ell: u32) -> Rational {
    harmonic(n, ell, &Rational::zero()).expect("positive denominators")
}

/// Prefix table [H_0^(ell)(x), ..., H_n^(ell)(x)].
pub fn harmonic_prefix<T: Scalar>(n: u64, ell: u32, x: &T) -> Result<Vec<T>, CoreError> {
    assert!(ell >= 1, "harmonic order must be >= 1");
    let mut out = Vec::with_capacity(n as usize + 1);
    let mut sum = T::zero();
    out.push(sum.clone());
    let mut shifted = x.clone();
    for k in 1..=n {
        shifted = shifted.add(&T::one());
        let power = shifted.powu(ell);
        let term = T::one()
            .try_div(&power)
            .map_err(|_| CoreError::Pole { index: k })?;
        sum = sum.add(&term);
        out.push(sum.clone());
    }
    Ok(out)
}

/// Prefix table [binom(x+k, k)] for k = 0..=k_max, built by the ratio
/// binom(x+k+1, k+1) = binom(x+k, k) (x+k+1)/(k+1).
pub fn binom_shift_prefix<T: Scalar>(x: &T, k_max: u64) -> Vec<T> {
    let mut out = Vec::with_capacity(k_max as usize + 1);
    let mut cur = T::one();
    out.push(cur.clone());
    let mut shifted = x.clone();
    for k in 1..=k_max {
        shifted = shifted.add(&T::one());
        cur = cur
            .mul(&shifted)
            .try_div(&T::from_int(k as i64))
            .expect("positive integer divisor");
        out.push(cur.clone());
    }
    out
}

/// Row [binom(z, k)] for k = 0..=k_max, built by the ratio
/// binom(z, k+1) = binom(z, k) (z-k)/(k+1).
pub fn binom_row<T: Scalar>(z: &T, k_max: u64) -> Vec<T> {
    let mut out = Vec::with_capacity(k_max as usize + 1);
    let mut cur = T::one();
    out.push(cur.clone());
    for k in 0..k_max {
        let factor = z.sub(&T::from_int(k as i64));
        cur = cur
            .mul(&factor)
            .try_div(&T::from_int(k as i64 + 1))
            .expect("positive integer divisor");
        out.push(cur.clone());
    }
    out
}

/// True when the shifted factorial (v)_n has no zero factor, i.e. v is not an
/// integer in -(n-1)..=0.
pub fn pochhammer_nonzero(v: &Rational, n: u64) -> bool {
    if n == 0 {
        return true;
    }
    match v.as_i64() {
        Some(m) => !(-(n as i64 - 1)..=0).contains(&m),
        None => !v.is_integer(),
    }
}

/// Checks the derivative rule for generalized binomials at a point:
/// d/dx binom(x+s, t) = binom(x+s, t) { H_s(x) - H_{s-t}(x) }, for t <= s.
///
/// The left side is the first jet coefficient of binom evaluated over
/// jet arithmetic; the right side is assembled from harmonic numbers.
pub fn jet_deriv_binom_check(x: &Rational, s: u64, t: u64) -> Result<bool, CoreError> {
    assert!(t <= s, "rule requires t <= s");
    let arg = Jet::variable(x.clone()).add(&Jet::constant(Rational::from_integer(s as i64)));
    let lhs = binomial_gen(&arg, t).d1().clone();

    let shifted = x + &Rational::from_integer(s as i64);
    let b = binomial_gen(&shifted, t);
    let h_s = harmonic(s, 1, x)?;
    let h_st = harmonic(s - t, 1, x)?;
    let rhs = &b * &(&h_s - &h_st);
    Ok(lhs == rhs)
}

/// Checks the derivative rule for generalized harmonic numbers at a point:
/// d/dx H_n^(ell)(x) = -ell H_n^(ell+1)(x).
pub fn jet_deriv_harmonic_check(n: u64, ell: u32, x: &Rational) -> Result<bool, CoreError> {
    let lhs = harmonic(n, ell, &Jet::variable(x.clone()))?.d1().clone();
    let rhs = &(-&Rational::from_integer(ell as i64)) * &harmonic(n, ell + 1, x)?;
    Ok(lhs == rhs)
}

/// Checks the bisection relation H_k(x/2) + H_k((x-1)/2) = 2 H_{2k}(x)
/// at a point.
pub fn bisection_relation_check(k: u64, x: &Rational) -> Result<bool, CoreError> {
    let two = Rational::from_integer(2);
    let half_x = x.try_div(&two)?;
    let half_xm1 = (x - &Rational::one()).try_div(&two)?;
    let lhs = &harmonic(k, 1, &half_x)? + &harmonic(k, 1, &half_xm1)?;
    let rhs = &two * &harmonic(2 * k, 1, x)?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn pochhammer_small_values() {
        // (1/2)(3/2)(5/2) = 15/8
        assert_eq!(pochhammer(&r(1, 2), 3), r(15, 8));
        // contains the zero factor at x = -2 + 2
        assert_eq!(pochhammer(&r(-2, 1), 5), Rational::zero());
        // empty product
        assert_eq!(pochhammer(&r(9, 7), 0), Rational::one());
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial_int(5, 2), r(10, 1));
        // (3/2)(1/2)/2! = 3/8
        assert_eq!(binomial_gen(&r(3, 2), 2), r(3, 8));
        assert_eq!(binomial_gen(&r(-17, 5), 0), Rational::one());
        // zero set: integer upper argument inside 0..t
        assert_eq!(binomial_int(1, 3), Rational::zero());
    }

    #[test]
    fn harmonic_values() {
        // 1 + 1/2 + 1/3
        assert_eq!(harmonic(3, 1, &Rational::zero()).unwrap(), r(11, 6));
        // empty sum
        assert_eq!(harmonic(0, 2, &r(1, 3)).unwrap(), Rational::zero());
        // (2/3)^2 + (2/5)^2 = 136/225
        assert_eq!(harmonic(2, 2, &r(1, 2)).unwrap(), r(136, 225));
    }

    #[test]
    fn harmonic_pole_reports_index() {
        assert_eq!(harmonic(2, 1, &r(-1, 1)), Err(CoreError::Pole { index: 1 }));
        assert_eq!(harmonic(5, 2, &r(-3, 1)), Err(CoreError::Pole { index: 3 }));
    }

    #[test]
    fn prefix_tables_match_direct_evaluation() {
        let x = r(3, 7);
        let hs = harmonic_prefix(12, 2, &x).unwrap();
        let bs = binom_shift_prefix(&x, 12);
        let row = binom_row(&r(-5, 3), 12);
        for k in 0..=12u64 {
            assert_eq!(hs[k as usize], harmonic(k, 2, &x).unwrap());
            let shifted = &x + &Rational::from_integer(k as i64);
            assert_eq!(bs[k as usize], binomial_gen(&shifted, k));
            assert_eq!(row[k as usize], binomial_gen(&r(-5, 3), k));
        }
    }

    #[test]
    fn deriv_binom_rule_spot_checks() {
        // s=2, t=1 at x=0: d/dx (x+2) = 1 = binom(2,1){H_2 - H_1}
        assert!(jet_deriv_binom_check(&Rational::zero(), 2, 1).unwrap());
        // full column t = s, H_{s-t} = H_0 = 0
        assert!(jet_deriv_binom_check(&r(1, 3), 4, 4).unwrap());
        // t = 0: constant function
        assert!(jet_deriv_binom_check(&r(-7, 9), 5, 0).unwrap());
    }

    #[test]
    fn deriv_harmonic_rule_spot_checks() {
        // n=2, l=1 at x=0: -(1 + 1/4) both sides
        assert!(jet_deriv_harmonic_check(2, 1, &Rational::zero()).unwrap());
        assert!(jet_deriv_harmonic_check(0, 3, &r(5, 4)).unwrap());
        assert!(jet_deriv_harmonic_check(3, 2, &r(1, 2)).unwrap());
    }

    #[test]
    fn bisection_spot_checks() {
        // k=1, x=0: 1 + 2 = 2 (3/2)
        assert!(bisection_relation_check(1, &Rational::zero()).unwrap());
        assert!(bisection_relation_check(0, &r(9, 11)).unwrap());
        assert!(bisection_relation_check(3, &r(1, 5)).unwrap());
    }

    #[test]
    fn pochhammer_nonzero_predicate() {
        assert!(pochhammer_nonzero(&r(1, 2), 10));
        assert!(pochhammer_nonzero(&r(-7, 1), 7));
        assert!(!pochhammer_nonzero(&r(-6, 1), 7));
        assert!(!pochhammer_nonzero(&Rational::zero(), 1));
        assert!(pochhammer_nonzero(&Rational::zero(), 0));
    }

    #[test]
    fn jets_flow_through_primitives() {
        // binom(x+4, 2) = (x+4)(x+3)/2; derivative (2x+7)/2, second derivative 1
        let x = Jet::variable(r(1, 1));
        let b = binomial_gen(&x.add(&Jet::constant(r(4, 1))), 2);
        assert_eq!(b.value(), &r(10, 1));
        assert_eq!(b.d1(), &r(9, 2));
        assert_eq!(b.d2(), r(1, 1));
    }
}
