//! Randomized checks of the combinatorial primitives: recurrences,
//! telescoping, and the two jet-differentiation rules.

use proptest::prelude::*;

use harmonid_core::special::{
    binomial_gen, bisection_relation_check, harmonic, harmonic_int, jet_deriv_binom_check,
    jet_deriv_harmonic_check, pochhammer,
};
use harmonid_core::Rational;

fn rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=12).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

/// A rational that is not an integer in -bound..=-1, so harmonic numbers and
/// binomial denominators up to that depth stay pole-free.
fn pole_free(bound: i64) -> impl Strategy<Value = Rational> {
    rational().prop_map(move |v| match v.as_i64() {
        Some(m) if (-bound..=-1).contains(&m) => &v + &Rational::new(1, 2).unwrap(),
        _ => v,
    })
}

proptest! {
    #[test]
    fn pochhammer_recurrence(x in rational(), n in 0u64..=50) {
        let step = &x + &Rational::from_integer(n as i64);
        prop_assert_eq!(pochhammer(&x, n + 1), &pochhammer(&x, n) * &step);
    }

    #[test]
    fn generalized_pascal_rule(z in rational(), t in 1u64..=20) {
        let zm1 = &z - &Rational::one();
        let expected = &binomial_gen(&zm1, t) + &binomial_gen(&zm1, t - 1);
        prop_assert_eq!(binomial_gen(&z, t), expected);
    }

    #[test]
    fn harmonic_telescoping(x in pole_free(30), n in 1u64..=30, ell in 1u32..=3) {
        let step = &x + &Rational::from_integer(n as i64);
        let increment = Rational::one().try_div(&step.pow(ell as i64).unwrap()).unwrap();
        let lhs = &harmonic(n, ell, &x).unwrap() - &harmonic(n - 1, ell, &x).unwrap();
        prop_assert_eq!(lhs, increment);
    }

    #[test]
    fn classical_specialization(n in 0u64..=40, ell in 1u32..=3) {
        // H_n^<l>(0) equals the direct sum of reciprocal powers
        let mut direct = Rational::zero();
        for k in 1..=n {
            let p = Rational::from_integer(k as i64).pow(ell as i64).unwrap();
            direct = &direct + &p.recip().unwrap();
        }
        prop_assert_eq!(harmonic_int(n, ell), direct);
    }

    #[test]
    fn binom_derivative_rule_randomized(x in pole_free(10), s in 0u64..=10) {
        for t in 0..=s {
            prop_assert!(jet_deriv_binom_check(&x, s, t).unwrap());
        }
    }

    #[test]
    fn harmonic_derivative_rule_randomized(x in pole_free(15), n in 0u64..=15, ell in 1u32..=3) {
        prop_assert!(jet_deriv_harmonic_check(n, ell, &x).unwrap());
    }

    #[test]
    fn bisection_relation_randomized(x in rational(), k in 0u64..=20) {
        // poles of either side only occur at integer-valued shifts
        let guard_ok = harmonid_core::special::pochhammer_nonzero(
            &(&x + &Rational::one()),
            2 * k,
        );
        prop_assume!(guard_ok);
        prop_assert!(bisection_relation_check(k, &x).unwrap());
    }
}
