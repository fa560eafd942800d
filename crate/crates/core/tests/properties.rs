//! Field-axiom and jet-arithmetic properties over randomized inputs.

use num_integer::Integer;
use proptest::prelude::*;

use harmonid_core::{Jet, Rational};

fn rational() -> impl Strategy<Value = Rational> {
    (-60i64..=60, 1i64..=60).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |v| !v.is_zero())
}

fn jet() -> impl Strategy<Value = Jet> {
    (rational(), rational(), rational()).prop_map(|(a, b, c)| Jet::new(a, b, c))
}

fn invertible_jet() -> impl Strategy<Value = Jet> {
    (nonzero_rational(), rational(), rational()).prop_map(|(a, b, c)| Jet::new(a, b, c))
}

fn assert_canonical(v: &Rational) {
    assert!(v.denom() > &num_bigint::BigInt::from(0));
    assert_eq!(
        v.numer().gcd(v.denom()),
        num_bigint::BigInt::from(1),
        "not reduced: {}",
        v
    );
}

proptest! {
    #[test]
    fn field_axioms(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &(-&a), Rational::zero());
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
    }

    #[test]
    fn multiplicative_inverses(a in nonzero_rational()) {
        prop_assert_eq!(&a * &a.recip().unwrap(), Rational::one());
    }

    #[test]
    fn results_stay_canonical(a in rational(), b in rational()) {
        assert_canonical(&(&a + &b));
        assert_canonical(&(&a - &b));
        assert_canonical(&(&a * &b));
        if !b.is_zero() {
            assert_canonical(&a.try_div(&b).unwrap());
        }
    }

    #[test]
    fn jet_ring_axioms(a in jet(), b in jet(), c in jet()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn jet_quotient_rule(a in jet(), b in invertible_jet()) {
        // (a/b) * b recovers a componentwise
        let q = a.try_div(&b).unwrap();
        prop_assert_eq!(q.mul(&b), a);
    }

    #[test]
    fn jet_monomial_derivatives(x in nonzero_rational(), k in 1u32..=6) {
        // f(x) = x^k by repeated multiplication: c1 = k x^{k-1}, 2 c2 = k(k-1) x^{k-2}
        let v = Jet::variable(x.clone());
        let mut f = v.clone();
        for _ in 1..k {
            f = f.mul(&v);
        }
        let kr = Rational::from_integer(k as i64);
        let expect_d1 = &kr * &x.pow(k as i64 - 1).unwrap();
        prop_assert_eq!(f.d1(), &expect_d1);
        let km1 = Rational::from_integer(k as i64 - 1);
        let expect_d2 = &(&kr * &km1) * &x.pow(k as i64 - 2).unwrap();
        prop_assert_eq!(f.d2(), expect_d2);
    }
}
