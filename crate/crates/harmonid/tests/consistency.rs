//! Cross-entry consistency: the derivation chains connecting catalog entries
//! hold exactly, both by direct evaluation and by differentiating one entry's
//! evaluators over jets to reproduce the next.

use harmonid::catalog::exact::*;
use harmonid::catalog::{thm_g_intermediate_check, thm_h_intermediate_check};
use harmonid_core::hypergeom::{dixon_a_neg2n_closed_form, pfq_exact, PfqSpec};
use harmonid_core::special::{harmonic, harmonic_int};
use harmonid_core::{Jet, Rational};

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d).unwrap()
}

fn ri(n: i64) -> Rational {
    Rational::from_integer(n)
}

fn sample_points() -> Vec<Rational> {
    vec![ri(0), ri(1), ri(3), r(1, 2), r(-1, 3), r(7, 5), r(-5, 4)]
}

const TWO: i64 = 2;

fn double(v: &Rational) -> Rational {
    &Rational::from_integer(TWO) * v
}

#[test]
fn intro_id1_is_harmonic_bb_at_p_zero() {
    for n in 1..=20u64 {
        assert_eq!(intro_id1_lhs(n).unwrap(), harmonic_bb_lhs(n, 0).unwrap());
        assert_eq!(intro_id1_rhs(n).unwrap(), harmonic_bb_rhs(n, 0).unwrap());
    }
}

#[test]
fn prop_a_is_eq_b_at_zero_minus_wgy() {
    for n in 1..=20u64 {
        let lhs = &eq_b_lhs(n, &ri(0)).unwrap() - &wgy_cor21_lhs(n).unwrap();
        assert_eq!(prop_a_lhs(n).unwrap(), lhs);
        let rhs = &eq_b_rhs(n, &ri(0)).unwrap() - &wgy_cor21_rhs(n).unwrap();
        assert_eq!(prop_a_rhs(n).unwrap(), rhs);
    }
}

#[test]
fn harmonic_bb_decomposes_into_thm_b_plus_eq_a() {
    // H^<2> with shifted index splits as H^<2>_{p+k} = H^<2>_k(p) + H^<2>_p
    for n in 1..=8u64 {
        for p in 0..=6u64 {
            let pr = ri(p as i64);
            let hp2 = harmonic_int(p, 2);
            let lhs = &thm_b_lhs(n, &pr).unwrap() + &(&hp2 * &eq_a_lhs(n, &pr, &pr).unwrap());
            assert_eq!(harmonic_bb_lhs(n, p).unwrap(), lhs, "lhs at n={n}, p={p}");
            let rhs = &thm_b_rhs(n, &pr).unwrap() + &(&hp2 * &eq_a_rhs(n, &pr, &pr).unwrap());
            assert_eq!(harmonic_bb_rhs(n, p).unwrap(), rhs, "rhs at n={n}, p={p}");
        }
    }
}

#[test]
fn eq_a_matches_the_jointly_degenerate_dixon_reduction() {
    // the substitution behind eq_a sends the first series parameter to -2n;
    // the limit closed form and the raw series must both agree with eq_a
    for n in 0..=10u64 {
        for x in sample_points() {
            for y in sample_points() {
                if !eq_a_guard(n, &x, &y) {
                    continue;
                }
                let b = &ri(1) + &x;
                let c = &ri(1) + &y;
                assert_eq!(
                    eq_a_rhs(n, &x, &y).unwrap(),
                    dixon_a_neg2n_closed_form(n, &b, &c).unwrap(),
                    "closed form at n={n}, x={x}, y={y}"
                );
                let one = ri(1);
                let a = ri(-2 * n as i64);
                let series = PfqSpec::new(
                    vec![a.clone(), b.clone(), c.clone()],
                    vec![&(&one + &a) - &b, &(&one + &a) - &c],
                    ri(1),
                );
                assert_eq!(
                    pfq_exact(&series).unwrap(),
                    eq_a_lhs(n, &x, &y).unwrap(),
                    "series at n={n}, x={x}, y={y}"
                );
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Jet links: differentiating an entry reproduces its derived entry
// ---------------------------------------------------------------------------

#[test]
fn differentiating_eq_a_gives_twice_thm_a() {
    // d/dx of the degree-0 identity, folded by the reversal symmetry; the
    // H_{2n}(x) part of the weight's log-derivative folds back onto the
    // identity's own value
    for n in 1..=6u64 {
        for x in sample_points() {
            for y in sample_points() {
                if !thm_a_guard(n, &x, &y) {
                    continue;
                }
                let h2n = harmonic(2 * n, 1, &x).unwrap();
                let xj = Jet::variable(x.clone());
                let yj = Jet::constant(y.clone());
                let d_lhs = eq_a_lhs(n, &xj, &yj).unwrap().d1().clone();
                let folded = &d_lhs + &(&h2n * &eq_a_lhs(n, &x, &y).unwrap());
                assert_eq!(
                    folded,
                    double(&thm_a_lhs(n, &x, &y).unwrap()),
                    "lhs at n={n}, x={x}, y={y}"
                );
                let d_rhs = eq_a_rhs(n, &xj, &yj).unwrap().d1().clone();
                let folded_rhs = &d_rhs + &(&h2n * &eq_a_rhs(n, &x, &y).unwrap());
                assert_eq!(
                    folded_rhs,
                    double(&thm_a_rhs(n, &x, &y).unwrap()),
                    "rhs at n={n}, x={x}, y={y}"
                );
            }
        }
    }
}

#[test]
fn differentiating_eq_c_gives_eq_d() {
    for n in 1..=6u64 {
        for x in sample_points() {
            for y in sample_points() {
                if !eq_d_guard(n, &x, &y) {
                    continue;
                }
                let xj = Jet::constant(x.clone());
                let yj = Jet::variable(y.clone());
                let d_lhs = eq_c_lhs(n, &xj, &yj).unwrap().d1().clone();
                assert_eq!(
                    d_lhs,
                    eq_d_lhs(n, &x, &y).unwrap(),
                    "lhs at n={n}, x={x}, y={y}"
                );
                let d_rhs = eq_c_rhs(n, &xj, &yj).unwrap().d1().clone();
                assert_eq!(
                    d_rhs,
                    eq_d_rhs(n, &x, &y).unwrap(),
                    "rhs at n={n}, x={x}, y={y}"
                );
            }
        }
    }
}

#[test]
fn differentiating_eq_e_gives_eq_f() {
    for n in 1..=4u64 {
        for x in [ri(1), r(7, 5), r(-1, 3)] {
            for y in [ri(0), r(1, 2)] {
                for z in [r(1, 3), r(-1, 4)] {
                    if !eq_f_guard(n, &x, &y, &z) {
                        continue;
                    }
                    let xj = Jet::constant(x.clone());
                    let yj = Jet::constant(y.clone());
                    let zj = Jet::variable(z.clone());
                    let d_lhs = eq_e_lhs(n, &xj, &yj, &zj).unwrap().d1().clone();
                    assert_eq!(d_lhs, eq_f_lhs(n, &x, &y, &z).unwrap());
                    let d_rhs = eq_e_rhs(n, &xj, &yj, &zj).unwrap().d1().clone();
                    assert_eq!(d_rhs, eq_f_rhs(n, &x, &y, &z).unwrap());
                }
            }
        }
    }
}

#[test]
fn differentiating_thm_a_in_y_at_x_recovers_eq_b() {
    // d/dy sum w_k(y) H_k(x) at y = x equals eq_b minus the H_{2n}(x) fold of
    // the squared-weight thm_a sum
    for n in 1..=5u64 {
        for x in sample_points() {
            if !eq_b_guard(n, &x) || !thm_a_guard(n, &x, &x) {
                continue;
            }
            let h2n = harmonic(2 * n, 1, &x).unwrap();
            let xj = Jet::constant(x.clone());
            let yj = Jet::variable(x.clone());
            let d_lhs = thm_a_lhs(n, &xj, &yj).unwrap().d1().clone();
            let folded = &eq_b_lhs(n, &x).unwrap() - &(&h2n * &thm_a_lhs(n, &x, &x).unwrap());
            assert_eq!(d_lhs, folded, "lhs at n={n}, x={x}");
            let d_rhs = thm_a_rhs(n, &xj, &yj).unwrap().d1().clone();
            let folded_rhs = &eq_b_rhs(n, &x).unwrap() - &(&h2n * &thm_a_rhs(n, &x, &x).unwrap());
            assert_eq!(d_rhs, folded_rhs, "rhs at n={n}, x={x}");
        }
    }
}

// ---------------------------------------------------------------------------
// Substitution links: specializing one entry reproduces another
// ---------------------------------------------------------------------------

#[test]
fn thm_e_is_eq_f_under_its_substitution() {
    for n in 1..=6u64 {
        for x in sample_points() {
            for y in sample_points() {
                if !thm_e_guard(n, &x, &y) {
                    continue;
                }
                let (tx, ty) = (double(&x), double(&y));
                if !eq_f_guard(n, &tx, &ty, &x) {
                    continue;
                }
                assert_eq!(
                    eq_f_lhs(n, &tx, &ty, &x).unwrap(),
                    double(&thm_e_lhs(n, &x, &y).unwrap())
                );
                assert_eq!(
                    eq_f_rhs(n, &tx, &ty, &x).unwrap(),
                    double(&thm_e_rhs(n, &x, &y).unwrap())
                );
            }
        }
    }
}

#[test]
fn thm_c_is_eq_d_under_its_substitution() {
    for n in 1..=6u64 {
        for x in sample_points() {
            let tx = double(&x);
            if !thm_c_guard(n, &x) || !eq_d_guard(n, &tx, &x) {
                continue;
            }
            assert_eq!(
                eq_d_lhs(n, &tx, &x).unwrap(),
                double(&thm_c_lhs(n, &x).unwrap()),
                "lhs at n={n}, x={x}"
            );
            assert_eq!(
                eq_d_rhs(n, &tx, &x).unwrap(),
                double(&thm_c_rhs(n, &x).unwrap()),
                "rhs at n={n}, x={x}"
            );
        }
    }
}

#[test]
fn thm_d_is_eq_d_under_the_bisection_substitution() {
    let half = r(1, 2);
    for n in 1..=6u64 {
        for x in sample_points() {
            let sx = &x - &half; // x - 1/2
            let sy = &x * &half; // x / 2
            if !thm_d_guard(n, &x) || !eq_d_guard(n, &sx, &sy) {
                continue;
            }
            assert_eq!(
                eq_d_lhs(n, &sx, &sy).unwrap(),
                double(&thm_d_lhs(n, &x).unwrap()),
                "lhs at n={n}, x={x}"
            );
            assert_eq!(
                eq_d_rhs(n, &sx, &sy).unwrap(),
                double(&thm_d_rhs(n, &x).unwrap()),
                "rhs at n={n}, x={x}"
            );
        }
    }
}

#[test]
fn thm_f_is_eq_f_under_the_bisection_substitution() {
    let half = r(1, 2);
    for n in 1..=5u64 {
        for x in sample_points() {
            for y in [ri(0), r(1, 3), r(-2, 5)] {
                let sx = &x - &half;
                let sz = &x * &half;
                if !thm_f_guard(n, &x, &y) || !eq_f_guard(n, &sx, &y, &sz) {
                    continue;
                }
                assert_eq!(
                    eq_f_lhs(n, &sx, &y, &sz).unwrap(),
                    double(&thm_f_lhs(n, &x, &y).unwrap())
                );
                assert_eq!(
                    eq_f_rhs(n, &sx, &y, &sz).unwrap(),
                    double(&thm_f_rhs(n, &x, &y).unwrap())
                );
            }
        }
    }
}

// ---------------------------------------------------------------------------
// The derivative-step identities carrying the named sub-evaluators
// ---------------------------------------------------------------------------

#[test]
fn thm_g_derivative_step_holds() {
    for n in 1..=5u64 {
        for x in [ri(1), r(1, 2), r(7, 5)] {
            for y in [r(1, 5), r(-1, 3), ri(2)] {
                if thm_g_intermediate_check(n, &x, &y).is_ok_and(|ok| ok) {
                    continue;
                }
                // poles are acceptable at degenerate sample points, a plain
                // false is not
                assert!(
                    thm_g_intermediate_check(n, &x, &y).is_err(),
                    "derivative step failed at n={n}, x={x}, y={y}"
                );
            }
        }
    }
}

#[test]
fn thm_h_derivative_step_holds() {
    for n in 1..=4u64 {
        for x in [r(7, 2), ri(3)] {
            for y in [r(1, 5), r(1, 2)] {
                for z in [r(1, 3), r(-1, 5)] {
                    if thm_h_intermediate_check(n, &x, &y, &z).is_ok_and(|ok| ok) {
                        continue;
                    }
                    assert!(
                        thm_h_intermediate_check(n, &x, &y, &z).is_err(),
                        "derivative step failed at n={n}, x={x}, y={y}, z={z}"
                    );
                }
            }
        }
    }
}

#[test]
fn sub_evaluators_match_their_definitions() {
    // A_n, B_n, C_n recomputed directly from harmonic numbers
    let n = 4u64;
    let x = r(7, 5);
    let y = r(1, 3);
    let z = r(-1, 4);
    let u = &x - &double(&y);
    let w = &double(&x) - &double(&y);
    let hnu = harmonic(n, 1, &u).unwrap();
    let a_direct = &(&(&harmonic(n, 1, &x).unwrap() - &hnu)
        * &(&harmonic(n, 1, &w).unwrap() - &hnu))
        - &harmonic(n, 2, &u).unwrap();
    assert_eq!(thm_g_sub_a_direct(n, &x, &y), a_direct);
    let b_direct = &(&harmonic(n, 1, &x).unwrap() + &harmonic(n, 1, &w).unwrap()) - &double(&hnu);
    assert_eq!(thm_g_sub_b_direct(n, &x, &y), b_direct);
    let v = &(&(&x - &y) - &z) - &ri(1);
    let hv = harmonic(n, 1, &v).unwrap();
    let c_direct = &(&harmonic(n, 1, &(&x - &y)).unwrap() - &hv)
        * &(&harmonic(n, 1, &(&x - &z)).unwrap() - &hv);
    assert_eq!(thm_h_sub_c_direct(n, &x, &y, &z), c_direct);
}

fn thm_g_sub_a_direct(n: u64, x: &Rational, y: &Rational) -> Rational {
    harmonid::catalog::thm_g_sub_a(n, x, y).unwrap()
}

fn thm_g_sub_b_direct(n: u64, x: &Rational, y: &Rational) -> Rational {
    harmonid::catalog::thm_g_sub_b(n, x, y).unwrap()
}

fn thm_h_sub_c_direct(n: u64, x: &Rational, y: &Rational, z: &Rational) -> Rational {
    harmonid::catalog::thm_h_sub_c(n, x, y, z).unwrap()
}
