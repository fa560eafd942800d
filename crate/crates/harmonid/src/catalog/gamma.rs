//! Float-mode evaluators for the gamma-form summation theorems, and the
//! exact terminating-reduction checks that accompany four of them.
//!
//! Float verification samples rational parameter points, restricted to
//! regions where every gamma argument on the closed-form side is positive and
//! the series balance (sum of lower minus upper parameters) is at least 3/2,
//! so truncated summation converges well inside the 1e-6 comparison gate.

use harmonid_core::hypergeom::{
    dixon_admissible, dixon_reduction, dixonlike_admissible, dixonlike_reduction,
    dougall_admissible, dougall_reduction, gamma_ratio, kummer_admissible, kummer_reduction,
    pfq_exact, pfq_float,
};
use harmonid_core::{CoreError, Rational};

/// Truncation policy for float-mode series evaluation.
#[derive(Clone, Copy, Debug)]
pub struct FloatSettings {
    /// Term-smallness cut-off relative to the partial sum. This is far below
    /// the identity comparison tolerance so algebraic-tail truncation error
    /// stays negligible.
    pub term_tol: f64,
    pub max_terms: u64,
}

impl Default for FloatSettings {
    fn default() -> Self {
        FloatSettings {
            term_tol: 1e-12,
            max_terms: 500_000,
        }
    }
}

/// One evaluated side of a float-mode identity.
#[derive(Clone, Copy, Debug)]
pub struct FloatValue {
    pub value: f64,
    pub converged: bool,
}

impl FloatValue {
    fn settled(value: f64) -> Self {
        FloatValue {
            value,
            converged: true,
        }
    }
}

fn series(num: &[f64], den: &[f64], settings: &FloatSettings) -> Result<FloatValue, CoreError> {
    let out = pfq_float(num, den, 1.0, settings.term_tol, settings.max_terms)?;
    Ok(FloatValue {
        value: out.value,
        converged: out.converged,
    })
}

fn f(v: &Rational) -> f64 {
    v.to_f64()
}

fn all_positive(args: &[Rational]) -> bool {
    args.iter().all(|v| !v.is_negative() && !v.is_zero())
}

fn at_least(v: &Rational, num: i64, den: i64) -> bool {
    !(v - &Rational::new(num, den).unwrap()).is_negative()
}

fn r(n: i64) -> Rational {
    Rational::from_integer(n)
}

// ---------------------------------------------------------------------------
// Dougall's 5F4 summation
// ---------------------------------------------------------------------------

pub fn dougall_lhs(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    d: &Rational,
    settings: &FloatSettings,
) -> Result<FloatValue, CoreError> {
    let (a, b, c, d) = (f(a), f(b), f(c), f(d));
    series(
        &[a, 1.0 + a / 2.0, b, c, d],
        &[a / 2.0, 1.0 + a - b, 1.0 + a - c, 1.0 + a - d],
        settings,
    )
}

pub fn dougall_rhs(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    d: &Rational,
) -> Result<FloatValue, CoreError> {
    let (a, b, c, d) = (f(a), f(b), f(c), f(d));
    let v = gamma_ratio(
        1.0,
        &[1.0 + a - b, 1.0 + a - c, 1.0 + a - d, 1.0 + a - b - c - d],
        &[1.0 + a, 1.0 + a - b - c, 1.0 + a - b - d, 1.0 + a - c - d],
    )?;
    Ok(FloatValue::settled(v))
}

pub fn dougall_guard(a: &Rational, b: &Rational, c: &Rational, d: &Rational) -> bool {
    let one = Rational::one();
    let args = [
        &(&one + a) - b,
        &(&one + a) - c,
        &(&one + a) - d,
        &(&(&(&one + a) - b) - c) - d,
        &one + a,
        &(&(&one + a) - b) - c,
        &(&(&one + a) - b) - d,
        &(&(&one + a) - c) - d,
    ];
    // balance of the series equals 2(1 + a - b - c - d)
    all_positive(&args) && at_least(&args[3], 3, 2) && !a.is_negative() && !a.is_zero()
}

// ---------------------------------------------------------------------------
// Dixon's 3F2 summation
// ---------------------------------------------------------------------------

pub fn dixon_lhs(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    settings: &FloatSettings,
) -> Result<FloatValue, CoreError> {
    let (a, b, c) = (f(a), f(b), f(c));
    series(&[a, b, c], &[1.0 + a - b, 1.0 + a - c], settings)
}

pub fn dixon_rhs(a: &Rational, b: &Rational, c: &Rational) -> Result<FloatValue, CoreError> {
    let (a, b, c) = (f(a), f(b), f(c));
    let h = a / 2.0;
    let v = gamma_ratio(
        1.0,
        &[1.0 + h, 1.0 + a - b, 1.0 + a - c, 1.0 + h - b - c],
        &[1.0 + a, 1.0 + h - b, 1.0 + h - c, 1.0 + a - b - c],
    )?;
    Ok(FloatValue::settled(v))
}

pub fn dixon_guard(a: &Rational, b: &Rational, c: &Rational) -> bool {
    let one = Rational::one();
    let half_a = a.try_div(&r(2)).expect("2 is nonzero");
    let args = [
        &one + &half_a,
        &(&one + a) - b,
        &(&one + a) - c,
        &(&(&one + &half_a) - b) - c,
        &one + a,
        &(&one + &half_a) - b,
        &(&one + &half_a) - c,
        &(&(&one + a) - b) - c,
    ];
    all_positive(&args) && at_least(&args[3], 3, 4)
}

// ---------------------------------------------------------------------------
// The Dixon-like 3F2 summation (two-term gamma form)
// ---------------------------------------------------------------------------

pub fn dixonlike_lhs(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    settings: &FloatSettings,
) -> Result<FloatValue, CoreError> {
    let (a, b, c) = (f(a), f(b), f(c));
    series(&[a, b, c], &[1.0 + a - b, a - c], settings)
}

pub fn dixonlike_rhs(a: &Rational, b: &Rational, c: &Rational) -> Result<FloatValue, CoreError> {
    let (a, b, c) = (f(a), f(b), f(c));
    let prefactor = 2f64.powf(-(1.0 + c));
    let first = gamma_ratio(
        prefactor,
        &[
            1.0 + a - b,
            (1.0 + a) / 2.0 - b - c,
            (a - c) / 2.0,
            (1.0 + a - c) / 2.0,
        ],
        &[
            1.0 + a - b - c,
            a / 2.0,
            (1.0 + a) / 2.0 - b,
            (1.0 + a) / 2.0 - c,
        ],
    )?;
    let second = gamma_ratio(
        prefactor,
        &[
            1.0 + a - b,
            (2.0 + a) / 2.0 - b - c,
            (a - c) / 2.0,
            (1.0 + a - c) / 2.0,
        ],
        &[
            1.0 + a - b - c,
            (1.0 + a) / 2.0,
            (2.0 + a) / 2.0 - b,
            a / 2.0 - c,
        ],
    )?;
    Ok(FloatValue::settled(first + second))
}

pub fn dixonlike_guard(a: &Rational, b: &Rational, c: &Rational) -> bool {
    let one = Rational::one();
    let two = r(2);
    let half = |v: &Rational| v.try_div(&two).expect("2 is nonzero");
    let balance = half(&(&(&one + a) - &(&two * &(b + c))));
    let args = [
        &(&one + a) - b,
        half(&(&(&one + a) - &(&two * &(b + c)))),
        half(&(a - c)),
        half(&(&(&one + a) - c)),
        &(&(&one + a) - b) - c,
        half(a),
        &half(&(&one + a)) - b,
        &half(&(&one + a)) - c,
        &half(&(&two + a)) - &(b + c),
        half(&(&one + a)),
        &half(&(&two + a)) - b,
        &half(a) - c,
    ];
    all_positive(&args) && at_least(&balance, 3, 4)
}

// ---------------------------------------------------------------------------
// Whipple's 3F2 summation, its shifted form, and their linear combination
// ---------------------------------------------------------------------------

pub fn whipple_lhs(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    settings: &FloatSettings,
) -> Result<FloatValue, CoreError> {
    let (a, b, c) = (f(a), f(b), f(c));
    series(&[a, 1.0 - a, b], &[c, 1.0 + 2.0 * b - c], settings)
}

fn whipple_gamma(a: f64, b: f64, c: f64) -> Result<f64, CoreError> {
    let prefactor = std::f64::consts::PI * 2f64.powf(1.0 - 2.0 * b);
    gamma_ratio(
        prefactor,
        &[c, 1.0 + 2.0 * b - c],
        &[
            (a + c) / 2.0,
            (1.0 + a - c) / 2.0 + b,
            (1.0 - a + c) / 2.0,
            (2.0 - a - c) / 2.0 + b,
        ],
    )
}

pub fn whipple_rhs(a: &Rational, b: &Rational, c: &Rational) -> Result<FloatValue, CoreError> {
    Ok(FloatValue::settled(whipple_gamma(f(a), f(b), f(c))?))
}

fn whipple_args(a: &Rational, b: &Rational, c: &Rational) -> [Rational; 6] {
    let one = Rational::one();
    let two = r(2);
    let half = |v: &Rational| v.try_div(&two).expect("2 is nonzero");
    [
        c.clone(),
        &(&one + &(&two * b)) - c,
        half(&(a + c)),
        &half(&(&(&one + a) - c)) + b,
        half(&(&(&one - a) + c)),
        &half(&(&(&two - a) - c)) + b,
    ]
}

pub fn whipple_guard(a: &Rational, b: &Rational, c: &Rational) -> bool {
    all_positive(&whipple_args(a, b, c)) && at_least(b, 3, 2)
}

pub fn whipple_shifted_lhs(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    settings: &FloatSettings,
) -> Result<FloatValue, CoreError> {
    let (a, b, c) = (f(a), f(b), f(c));
    series(&[1.0 + a, -a, b], &[c, 1.0 + 2.0 * b - c], settings)
}

fn whipple_shifted_gamma(a: f64, b: f64, c: f64) -> Result<f64, CoreError> {
    // the substitution a -> 1+a applied to the Whipple closed form
    whipple_gamma(1.0 + a, b, c)
}

pub fn whipple_shifted_rhs(
    a: &Rational,
    b: &Rational,
    c: &Rational,
) -> Result<FloatValue, CoreError> {
    Ok(FloatValue::settled(whipple_shifted_gamma(
        f(a),
        f(b),
        f(c),
    )?))
}

fn whipple_shifted_args(a: &Rational, b: &Rational, c: &Rational) -> [Rational; 6] {
    whipple_args(&(&Rational::one() + a), b, c)
}

pub fn whipple_shifted_guard(a: &Rational, b: &Rational, c: &Rational) -> bool {
    all_positive(&whipple_shifted_args(a, b, c)) && at_least(b, 3, 2)
}

pub fn whipple_like_lhs(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    settings: &FloatSettings,
) -> Result<FloatValue, CoreError> {
    let (a, b, c) = (f(a), f(b), f(c));
    series(&[a, -a, b], &[c, 1.0 + 2.0 * b - c], settings)
}

pub fn whipple_like_rhs(a: &Rational, b: &Rational, c: &Rational) -> Result<FloatValue, CoreError> {
    // average of the plain and shifted closed forms
    let v = 0.5 * (whipple_gamma(f(a), f(b), f(c))? + whipple_shifted_gamma(f(a), f(b), f(c))?);
    Ok(FloatValue::settled(v))
}

pub fn whipple_like_guard(a: &Rational, b: &Rational, c: &Rational) -> bool {
    all_positive(&whipple_args(a, b, c))
        && all_positive(&whipple_shifted_args(a, b, c))
        && at_least(b, 3, 2)
}

// ---------------------------------------------------------------------------
// Kummer's 3F2 transformation
// ---------------------------------------------------------------------------

pub fn kummer_lhs(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    d: &Rational,
    e: &Rational,
    settings: &FloatSettings,
) -> Result<FloatValue, CoreError> {
    let (a, b, c, d, e) = (f(a), f(b), f(c), f(d), f(e));
    series(&[a, b, c], &[d, e], settings)
}

pub fn kummer_rhs(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    d: &Rational,
    e: &Rational,
    settings: &FloatSettings,
) -> Result<FloatValue, CoreError> {
    let (a, b, c, d, e) = (f(a), f(b), f(c), f(d), f(e));
    let prefactor = gamma_ratio(1.0, &[e, d + e - a - b - c], &[e - a, d + e - b - c])?;
    let transformed = series(&[a, d - b, d - c], &[d, d + e - b - c], settings)?;
    Ok(FloatValue {
        value: prefactor * transformed.value,
        converged: transformed.converged,
    })
}

pub fn kummer_guard(a: &Rational, b: &Rational, c: &Rational, d: &Rational, e: &Rational) -> bool {
    let lhs_balance = &(&(&(d + e) - a) - b) - c;
    let rhs_balance = e - a;
    let debc = &(&(d + e) - b) - c;
    all_positive(&[
        e.clone(),
        lhs_balance.clone(),
        rhs_balance.clone(),
        debc,
        d.clone(),
    ]) && at_least(&lhs_balance, 3, 2)
        && at_least(&rhs_balance, 3, 2)
}

// ---------------------------------------------------------------------------
// Exact terminating reductions
// ---------------------------------------------------------------------------

/// One exact reduction check: a terminating specialization of a gamma-form
/// theorem whose two sides must be equal as rationals.
#[derive(Clone, Copy)]
pub struct ReductionCheck {
    pub id: &'static str,
    /// Names of the rational parameters sampled alongside the n grid.
    pub rational_params: &'static [&'static str],
    pub guard: fn(u64, &[Rational]) -> bool,
    /// Evaluates (series side, closed-form side) exactly.
    pub check: ReductionFn,
}

/// Exact two-sided evaluation of a reduction at (n, sampled parameters).
pub type ReductionFn = fn(u64, &[Rational]) -> Result<(Rational, Rational), CoreError>;

fn dougall_check(n: u64, p: &[Rational]) -> Result<(Rational, Rational), CoreError> {
    let red = dougall_reduction(n, &p[0], &p[1], &p[2])?;
    Ok((pfq_exact(&red.series)?, red.closed_form))
}

fn dixon_check(n: u64, p: &[Rational]) -> Result<(Rational, Rational), CoreError> {
    let red = dixon_reduction(n, &p[0], &p[1])?;
    Ok((pfq_exact(&red.series)?, red.closed_form))
}

fn dixonlike_check(n: u64, p: &[Rational]) -> Result<(Rational, Rational), CoreError> {
    let red = dixonlike_reduction(n, &p[0], &p[1])?;
    Ok((pfq_exact(&red.series)?, red.closed_form))
}

fn kummer_check(n: u64, p: &[Rational]) -> Result<(Rational, Rational), CoreError> {
    let red = kummer_reduction(n, &p[0], &p[1], &p[2], &p[3])?;
    let lhs = pfq_exact(&red.lhs)?;
    let rhs = &red.prefactor * &pfq_exact(&red.rhs_series)?;
    Ok((lhs, rhs))
}

/// The four exact reduction checks, in catalog order of their parents.
pub fn reduction_checks() -> Vec<ReductionCheck> {
    vec![
        ReductionCheck {
            id: "dougall_5f4_reduction",
            rational_params: &["a", "b", "c"],
            guard: |n, p| dougall_admissible(n, &p[0], &p[1], &p[2]),
            check: dougall_check,
        },
        ReductionCheck {
            id: "dixon_3f2_reduction",
            rational_params: &["a", "b"],
            guard: |n, p| dixon_admissible(n, &p[0], &p[1]),
            check: dixon_check,
        },
        ReductionCheck {
            id: "dixonlike_3f2_reduction",
            rational_params: &["a", "b"],
            guard: |n, p| dixonlike_admissible(n, &p[0], &p[1]),
            check: dixonlike_check,
        },
        ReductionCheck {
            id: "kummer_reduction",
            rational_params: &["b", "c", "d", "e"],
            guard: |n, p| kummer_admissible(n, &p[0], &p[1], &p[2], &p[3]),
            check: kummer_check,
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn dixon_series_meets_its_gamma_form() {
        // a=1/2, b=1/5, c=1/7: inside the convergence region
        let (a, b, c) = (r(1, 2), r(1, 5), r(1, 7));
        assert!(dixon_guard(&a, &b, &c));
        let settings = FloatSettings::default();
        let lhs = dixon_lhs(&a, &b, &c, &settings).unwrap();
        assert!(lhs.converged);
        let rhs = dixon_rhs(&a, &b, &c).unwrap();
        let rel = (lhs.value - rhs.value).abs() / rhs.value.abs();
        assert!(rel <= 1e-6, "relative error {rel}");
    }

    #[test]
    fn whipple_like_averages_its_parents() {
        let (a, b, c) = (r(1, 3), r(2, 1), r(3, 2));
        assert!(whipple_like_guard(&a, &b, &c));
        let settings = FloatSettings::default();
        let lhs = whipple_like_lhs(&a, &b, &c, &settings).unwrap();
        let rhs = whipple_like_rhs(&a, &b, &c).unwrap();
        assert!(lhs.converged);
        let rel = (lhs.value - rhs.value).abs() / rhs.value.abs().max(1.0);
        assert!(rel <= 1e-6, "relative error {rel}");
    }

    #[test]
    fn guards_reject_poles_and_slow_regions() {
        // balance below the floor
        assert!(!whipple_guard(&r(1, 3), &r(1, 2), &r(1, 2)));
        // zero gamma argument
        assert!(!dixon_guard(&r(-2, 1), &r(1, 5), &r(1, 7)));
        // kummer needs positive series denominators
        assert!(!kummer_guard(
            &r(1, 3),
            &r(1, 5),
            &r(1, 7),
            &r(-1, 1),
            &r(9, 1)
        ));
    }

    #[test]
    fn reduction_check_table_is_complete() {
        let checks = reduction_checks();
        assert_eq!(checks.len(), 4);
        let ids: Vec<_> = checks.iter().map(|c| c.id).collect();
        assert_eq!(
            ids,
            [
                "dougall_5f4_reduction",
                "dixon_3f2_reduction",
                "dixonlike_3f2_reduction",
                "kummer_reduction"
            ]
        );
        // each check evaluates cleanly at an admissible point
        for check in checks {
            let params: Vec<Rational> = (0..check.rational_params.len())
                .map(|i| r(1, 2 + i as i64))
                .collect();
            if (check.guard)(3, &params) {
                let (lhs, rhs) = (check.check)(3, &params).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }
}
