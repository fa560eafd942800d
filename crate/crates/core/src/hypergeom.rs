//! Hypergeometric series evaluation.
//!
//! Exact path: terminating pFq at a rational argument, summed either by
//! recomputing every Pochhammer factor per term ([`pfq_exact`]) or by the
//! consecutive-term ratio ([`pfq_exact_incremental`]); the two must agree
//! exactly, and counted variants expose how much big-rational work each does.
//!
//! Float path: truncated series summation in f64 ([`pfq_float`]), a
//! Lanczos-approximated gamma function ([`gamma_float`]) and gamma
//! product/quotient evaluation ([`gamma_ratio`]) for the non-terminating
//! gamma-form identities.
//!
//! The terminating reductions rewrite each gamma-form summation theorem at a
//! nonpositive-integer parameter into Pochhammer ratios via
//! Gamma(z+n)/Gamma(z) = (z)_n, so the theorem becomes exactly checkable.

use crate::error::CoreError;
use crate::rational::Rational;
use crate::special::{factorial, pochhammer, pochhammer_nonzero};

/// Parameters of a pFq series: numerator list, denominator list, argument.
///
/// The implicit (1)_k factorial factor in the denominator is not listed.
#[derive(Clone, Debug, PartialEq)]
pub struct PfqSpec {
    pub numerator: Vec<Rational>,
    pub denominator: Vec<Rational>,
    pub argument: Rational,
}

impl PfqSpec {
    pub fn new(numerator: Vec<Rational>, denominator: Vec<Rational>, argument: Rational) -> Self {
        PfqSpec {
            numerator,
            denominator,
            argument,
        }
    }

    /// Smallest N such that some numerator parameter equals -N with N >= 0,
    /// making term N the last nonzero one. None when the series does not
    /// terminate (no nonpositive-integer numerator parameter in u64 range).
    pub fn termination_index(&self) -> Option<u64> {
        self.numerator
            .iter()
            .filter_map(as_nonpositive_integer)
            .min()
    }

    /// Termination index after checking that no denominator factor vanishes
    /// before the series terminates.
    pub fn validate_exact(&self) -> Result<u64, CoreError> {
        let n = self.termination_index().ok_or(CoreError::NonTerminating)?;
        for b in &self.denominator {
            if let Some(m) = as_nonpositive_integer(b) {
                // (b)_k first hits a zero factor at k = m + 1
                if n > 0 && m < n {
                    return Err(CoreError::Pole { index: m + 1 });
                }
            }
        }
        Ok(n)
    }
}

fn as_nonpositive_integer(v: &Rational) -> Option<u64> {
    v.as_i64()
        .and_then(|m| if m <= 0 { Some(m.unsigned_abs()) } else { None })
}

/// Count of big-rational multiplications and divisions performed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OpCount {
    pub muls: u64,
    pub divs: u64,
}

impl OpCount {
    pub fn total(&self) -> u64 {
        self.muls + self.divs
    }
}

fn poch_counted(x: &Rational, n: u64, ops: &mut OpCount) -> Rational {
    let mut acc = Rational::one();
    let mut factor = x.clone();
    for j in 0..n {
        if j > 0 {
            factor = &factor + &Rational::one();
        }
        acc = &acc * &factor;
        ops.muls += 1;
    }
    acc
}

fn pow_counted(z: &Rational, k: u64, ops: &mut OpCount) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..k {
        acc = &acc * z;
        ops.muls += 1;
    }
    acc
}

/// Exact sum of a terminating pFq, every term built from scratch.
pub fn pfq_exact(spec: &PfqSpec) -> Result<Rational, CoreError> {
    pfq_exact_counted(spec).map(|(v, _)| v)
}

/// As [`pfq_exact`], also reporting the big-rational operation count.
pub fn pfq_exact_counted(spec: &PfqSpec) -> Result<(Rational, OpCount), CoreError> {
    let n = spec.validate_exact()?;
    let mut ops = OpCount::default();
    let mut sum = Rational::one();
    for k in 1..=n {
        let mut num = pow_counted(&spec.argument, k, &mut ops);
        for a in &spec.numerator {
            num = &num * &poch_counted(a, k, &mut ops);
            ops.muls += 1;
        }
        let mut den = factorial(k);
        for b in &spec.denominator {
            den = &den * &poch_counted(b, k, &mut ops);
            ops.muls += 1;
        }
        let term = num
            .try_div(&den)
            .map_err(|_| CoreError::Pole { index: k })?;
        ops.divs += 1;
        sum = &sum + &term;
    }
    Ok((sum, ops))
}

/// Exact sum of a terminating pFq via the consecutive-term ratio
/// t_{k+1}/t_k = z prod(a_i + k) / [(1 + k) prod(b_j + k)].
pub fn pfq_exact_incremental(spec: &PfqSpec) -> Result<Rational, CoreError> {
    pfq_exact_incremental_counted(spec).map(|(v, _)| v)
}

/// As [`pfq_exact_incremental`], also reporting the operation count.
pub fn pfq_exact_incremental_counted(spec: &PfqSpec) -> Result<(Rational, OpCount), CoreError> {
    let n = spec.validate_exact()?;
    let mut ops = OpCount::default();
    let mut term = Rational::one();
    let mut sum = Rational::one();
    for k in 0..n {
        let kr = Rational::from_integer(k as i64);
        let mut ratio_num = spec.argument.clone();
        for a in &spec.numerator {
            ratio_num = &ratio_num * &(a + &kr);
            ops.muls += 1;
        }
        let mut ratio_den = Rational::from_integer(k as i64 + 1);
        for b in &spec.denominator {
            ratio_den = &ratio_den * &(b + &kr);
            ops.muls += 1;
        }
        term = &term * &ratio_num;
        ops.muls += 1;
        term = term
            .try_div(&ratio_den)
            .map_err(|_| CoreError::Pole { index: k + 1 })?;
        ops.divs += 1;
        sum = &sum + &term;
    }
    Ok((sum, ops))
}

/// The individual terms t_0..t_N of a terminating pFq.
pub fn pfq_terms(spec: &PfqSpec) -> Result<Vec<Rational>, CoreError> {
    let n = spec.validate_exact()?;
    let mut ops = OpCount::default();
    let mut out = Vec::with_capacity(n as usize + 1);
    out.push(Rational::one());
    for k in 1..=n {
        let mut num = pow_counted(&spec.argument, k, &mut ops);
        for a in &spec.numerator {
            num = &num * &poch_counted(a, k, &mut ops);
        }
        let mut den = factorial(k);
        for b in &spec.denominator {
            den = &den * &poch_counted(b, k, &mut ops);
        }
        out.push(
            num.try_div(&den)
                .map_err(|_| CoreError::Pole { index: k })?,
        );
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Floating-point path
// ---------------------------------------------------------------------------

/// Lanczos coefficients, g = 7, 9 terms.
const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)]
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Gamma function via the Lanczos approximation with reflection for x < 1/2.
///
/// Accurate to better than 1e-12 relative over |x| <= 50 away from poles.
pub fn gamma_float(x: f64) -> Result<f64, CoreError> {
    if x <= 0.0 && x == x.floor() {
        return Err(CoreError::GammaPole { argument: x });
    }
    Ok(gamma_unchecked(x))
}

fn gamma_unchecked(x: f64) -> f64 {
    if x < 0.5 {
        // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
        std::f64::consts::PI / ((std::f64::consts::PI * x).sin() * gamma_unchecked(1.0 - x))
    } else {
        let z = x - 1.0;
        let mut acc = LANCZOS_COEFFS[0];
        for (i, c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
            acc += c / (z + i as f64);
        }
        let t = z + LANCZOS_G + 0.5;
        (2.0 * std::f64::consts::PI).sqrt() * t.powf(z + 0.5) * (-t).exp() * acc
    }
}

/// Result of a truncated floating-point series summation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SeriesFloat {
    pub value: f64,
    pub converged: bool,
    pub terms: u64,
}

/// Truncated pFq summation in f64 by the consecutive-term ratio.
///
/// Stops once |term| < tol |partial sum| for three consecutive terms (guarding
/// against alternating-term flukes), or at `max_terms` with `converged` false.
pub fn pfq_float(
    numerator: &[f64],
    denominator: &[f64],
    argument: f64,
    tol: f64,
    max_terms: u64,
) -> Result<SeriesFloat, CoreError> {
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    let mut streak = 0u32;
    let mut k = 0u64;
    while k < max_terms {
        let kf = k as f64;
        let mut ratio_num = argument;
        for a in numerator {
            ratio_num *= a + kf;
        }
        if ratio_num == 0.0 {
            // a numerator factor hit zero: the series terminated here
            return Ok(SeriesFloat {
                value: sum,
                converged: true,
                terms: k + 1,
            });
        }
        let mut ratio_den = 1.0 + kf;
        for b in denominator {
            let factor = b + kf;
            if factor == 0.0 {
                return Err(CoreError::Pole { index: k + 1 });
            }
            ratio_den *= factor;
        }
        term = term * ratio_num / ratio_den;
        sum += term;
        k += 1;
        if term.abs() < tol * sum.abs() {
            streak += 1;
            if streak >= 3 {
                return Ok(SeriesFloat {
                    value: sum,
                    converged: true,
                    terms: k,
                });
            }
        } else {
            streak = 0;
        }
    }
    Ok(SeriesFloat {
        value: sum,
        converged: false,
        terms: k,
    })
}

/// Product of gamma values over a quotient of gamma values, times a prefactor.
///
/// Numerator and denominator factors are interleaved to keep the running
/// value away from overflow. Errors when any argument is a nonpositive
/// integer, naming it.
pub fn gamma_ratio(
    prefactor: f64,
    numerator_args: &[f64],
    denominator_args: &[f64],
) -> Result<f64, CoreError> {
    let mut value = prefactor;
    let mut num = numerator_args.iter();
    let mut den = denominator_args.iter();
    loop {
        match (num.next(), den.next()) {
            (None, None) => break,
            (n, d) => {
                if let Some(&x) = n {
                    value *= gamma_float(x)?;
                }
                if let Some(&x) = d {
                    value /= gamma_float(x)?;
                }
            }
        }
    }
    Ok(value)
}

// ---------------------------------------------------------------------------
// Terminating reductions of the gamma-form summation theorems
// ---------------------------------------------------------------------------

/// A terminating series paired with its exact closed form.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub series: PfqSpec,
    pub closed_form: Rational,
}

fn ratio_of_pochhammers(
    numerators: &[(Rational, u64)],
    denominators: &[(Rational, u64)],
) -> Result<Rational, CoreError> {
    let mut num = Rational::one();
    for (v, n) in numerators {
        num = &num * &pochhammer(v, *n);
    }
    let mut den = Rational::one();
    for (v, n) in denominators {
        if !pochhammer_nonzero(v, *n) {
            return Err(CoreError::DivisionByZero);
        }
        den = &den * &pochhammer(v, *n);
    }
    num.try_div(&den)
}

/// True when every listed value has a zero-free shifted factorial of depth n.
///
/// Reduction identities are rational-function identities in their parameters;
/// they hold wherever no denominator factor of either side vanishes within the
/// intended termination depth. Tuples failing this predicate sit on 0/0
/// branches (for example a second numerator parameter truncating the series
/// early while a denominator factor vanishes at the same index) and are
/// skipped, not evaluated.
fn all_pochhammer_nonzero(values: &[Rational], depth: u64) -> bool {
    values.iter().all(|v| pochhammer_nonzero(v, depth))
}

/// Admissibility of (n, a, b, c) for [`dougall_reduction`].
pub fn dougall_admissible(n: u64, a: &Rational, b: &Rational, c: &Rational) -> bool {
    let one = Rational::one();
    let half_a = match a.try_div(&Rational::from_integer(2)) {
        Ok(v) => v,
        Err(_) => return false,
    };
    let nr = Rational::from_integer(n as i64);
    all_pochhammer_nonzero(
        &[half_a, &(&one + a) - b, &(&one + a) - c, &(&one + a) + &nr],
        n,
    )
}

/// Admissibility of (n, a, b) for [`dixon_reduction`].
pub fn dixon_admissible(n: u64, a: &Rational, b: &Rational) -> bool {
    let one = Rational::one();
    let half_a = match a.try_div(&Rational::from_integer(2)) {
        Ok(v) => v,
        Err(_) => return false,
    };
    let nr = Rational::from_integer(n as i64);
    all_pochhammer_nonzero(&[&(&one + a) - b, &(&one + a) + &nr, &one + &half_a], n)
}

/// Admissibility of (n, a, b) for [`dixonlike_reduction`].
pub fn dixonlike_admissible(n: u64, a: &Rational, b: &Rational) -> bool {
    let one = Rational::one();
    let nr = Rational::from_integer(n as i64);
    all_pochhammer_nonzero(&[&(&one + a) - b, a + &nr], n)
}

/// Admissibility of (n, b, c, d, e) for [`kummer_reduction`].
pub fn kummer_admissible(n: u64, b: &Rational, c: &Rational, d: &Rational, e: &Rational) -> bool {
    let debc = &(&(d + e) - b) - c;
    all_pochhammer_nonzero(&[d.clone(), e.clone(), debc], n)
}

/// Dougall's 5F4 summation at d = -n:
/// 5F4[a, 1+a/2, b, c, -n; a/2, 1+a-b, 1+a-c, 1+a+n; 1]
///   = (1+a)_n (1+a-b-c)_n / [(1+a-b)_n (1+a-c)_n].
pub fn dougall_reduction(
    n: u64,
    a: &Rational,
    b: &Rational,
    c: &Rational,
) -> Result<Reduction, CoreError> {
    let one = Rational::one();
    let half_a = a.try_div(&Rational::from_integer(2))?;
    let nr = Rational::from_integer(n as i64);
    let series = PfqSpec::new(
        vec![a.clone(), &one + &half_a, b.clone(), c.clone(), -&nr],
        vec![
            half_a.clone(),
            &(&one + a) - b,
            &(&one + a) - c,
            &(&one + a) + &nr,
        ],
        Rational::one(),
    );
    let closed_form = ratio_of_pochhammers(
        &[(&one + a, n), (&(&(&one + a) - b) - c, n)],
        &[(&(&one + a) - b, n), (&(&one + a) - c, n)],
    )?;
    Ok(Reduction {
        series,
        closed_form,
    })
}

/// Dixon's 3F2 summation at c = -n:
/// 3F2[a, b, -n; 1+a-b, 1+a+n; 1]
///   = (1+a)_n (1+a/2-b)_n / [(1+a/2)_n (1+a-b)_n].
pub fn dixon_reduction(n: u64, a: &Rational, b: &Rational) -> Result<Reduction, CoreError> {
    let one = Rational::one();
    let half_a = a.try_div(&Rational::from_integer(2))?;
    let nr = Rational::from_integer(n as i64);
    let series = PfqSpec::new(
        vec![a.clone(), b.clone(), -&nr],
        vec![&(&one + a) - b, &(&one + a) + &nr],
        Rational::one(),
    );
    let closed_form = ratio_of_pochhammers(
        &[(&one + a, n), (&(&one + &half_a) - b, n)],
        &[(&one + &half_a, n), (&(&one + a) - b, n)],
    )?;
    Ok(Reduction {
        series,
        closed_form,
    })
}

/// The Dixon-like 3F2 summation at c = -n:
/// 3F2[a, b, -n; 1+a-b, a+n; 1]
///   = 2^{2n-1} [ ((1+a)/2)_n ((2+a)/2 - b)_n + (a/2)_n ((1+a)/2 - b)_n ]
///     / [ (a+n)_n (1+a-b)_n ].
pub fn dixonlike_reduction(n: u64, a: &Rational, b: &Rational) -> Result<Reduction, CoreError> {
    let one = Rational::one();
    let two = Rational::from_integer(2);
    let nr = Rational::from_integer(n as i64);
    let series = PfqSpec::new(
        vec![a.clone(), b.clone(), -&nr],
        vec![&(&one + a) - b, a + &nr],
        Rational::one(),
    );

    let half_a = a.try_div(&two)?;
    let half_a1 = (&one + a).try_div(&two)?;
    let half_a2 = (&two + a).try_div(&two)?;
    let first = &pochhammer(&half_a1, n) * &pochhammer(&(&half_a2 - b), n);
    let second = &pochhammer(&half_a, n) * &pochhammer(&(&half_a1 - b), n);
    let den_parts = [(a + &nr, n), (&(&one + a) - b, n)];
    for (v, m) in &den_parts {
        if !pochhammer_nonzero(v, *m) {
            return Err(CoreError::DivisionByZero);
        }
    }
    let den = &pochhammer(&den_parts[0].0, n) * &pochhammer(&den_parts[1].0, n);
    let scale = two.pow(2 * n as i64 - 1)?;
    let closed_form = (&scale * &(&first + &second)).try_div(&den)?;
    Ok(Reduction {
        series,
        closed_form,
    })
}

/// Kummer's 3F2 transformation at a = -n: both sides terminate, related by an
/// exact Pochhammer-ratio prefactor.
#[derive(Clone, Debug)]
pub struct KummerReduction {
    pub lhs: PfqSpec,
    pub prefactor: Rational,
    pub rhs_series: PfqSpec,
}

/// 3F2[-n, b, c; d, e; 1]
///   = [(d+e-b-c)_n / (e)_n] 3F2[-n, d-b, d-c; d, d+e-b-c; 1].
pub fn kummer_reduction(
    n: u64,
    b: &Rational,
    c: &Rational,
    d: &Rational,
    e: &Rational,
) -> Result<KummerReduction, CoreError> {
    let nr = Rational::from_integer(n as i64);
    let debc = &(&(d + e) - b) - c;
    let lhs = PfqSpec::new(
        vec![-&nr, b.clone(), c.clone()],
        vec![d.clone(), e.clone()],
        Rational::one(),
    );
    let rhs_series = PfqSpec::new(
        vec![-&nr, d - b, d - c],
        vec![d.clone(), debc.clone()],
        Rational::one(),
    );
    let prefactor = ratio_of_pochhammers(&[(debc, n)], &[(e.clone(), n)])?;
    Ok(KummerReduction {
        lhs,
        prefactor,
        rhs_series,
    })
}

/// Dixon's summation in the jointly-degenerate case a = -2n (with b, c generic),
/// taken as the limit a -> -2n:
/// 2 (-1)^n (2n-1)!/(n-1)! (1-2n-b-c)_n / [(1-2n-b)_n (1-2n-c)_n], n >= 1.
///
/// The factor 2 reflects Gamma(1+a/2) approaching its pole at half the rate of
/// Gamma(1+a).
pub fn dixon_a_neg2n_closed_form(
    n: u64,
    b: &Rational,
    c: &Rational,
) -> Result<Rational, CoreError> {
    if n == 0 {
        return Ok(Rational::one());
    }
    let one = Rational::one();
    let shift = Rational::from_integer(1 - 2 * n as i64); // 1 - 2n
    let num = pochhammer(&(&(&shift - b) - c), n);
    let den_parts = [&shift - b, &shift - c];
    for v in &den_parts {
        if !pochhammer_nonzero(v, n) {
            return Err(CoreError::DivisionByZero);
        }
    }
    let den = &pochhammer(&den_parts[0], n) * &pochhammer(&den_parts[1], n);
    let sign = if n.is_multiple_of(2) {
        one.clone()
    } else {
        -&one
    };
    let fact_ratio = factorial(2 * n - 1).try_div(&factorial(n - 1))?;
    let scale = &(&Rational::from_integer(2) * &sign) * &fact_ratio;
    (&scale * &num).try_div(&den)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn ri(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn zero_numerator_parameter_gives_one() {
        // (0)_k = 0 for k >= 1, so only the k = 0 term survives
        let spec = PfqSpec::new(vec![ri(0), r(5, 3)], vec![r(7, 2)], ri(1));
        assert_eq!(pfq_exact(&spec).unwrap(), Rational::one());
        assert_eq!(pfq_exact_incremental(&spec).unwrap(), Rational::one());
    }

    #[test]
    fn small_3f2_matches_direct_loop() {
        // 3F2(-2, 1, 1; 3, 3; 1) summed by hand:
        // k=0: 1; k=1: (-2)(1)(1)/(1*3*3) = -2/9; k=2: (-2)(-1)(1)(2)(1)(2)/(2*12*12) = 8/288
        let spec = PfqSpec::new(vec![ri(-2), ri(1), ri(1)], vec![ri(3), ri(3)], ri(1));
        let expected = &(&ri(1) - &r(2, 9)) + &r(1, 36);
        assert_eq!(pfq_exact(&spec).unwrap(), expected);
        assert_eq!(pfq_exact_incremental(&spec).unwrap(), expected);
    }

    #[test]
    fn non_terminating_is_rejected() {
        let spec = PfqSpec::new(vec![r(1, 2)], vec![r(3, 2)], ri(1));
        assert_eq!(pfq_exact(&spec), Err(CoreError::NonTerminating));
    }

    #[test]
    fn denominator_pole_is_reported_with_index() {
        // (-1)_k vanishes at k = 2, before termination at k = 3
        let spec = PfqSpec::new(vec![ri(-3)], vec![ri(-1)], ri(1));
        assert_eq!(pfq_exact(&spec), Err(CoreError::Pole { index: 2 }));
    }

    #[test]
    fn terms_sum_forward_and_backward_identically() {
        let spec = PfqSpec::new(
            vec![ri(-7), r(3, 2), r(-5, 4)],
            vec![r(7, 3), r(9, 5)],
            r(2, 3),
        );
        let terms = pfq_terms(&spec).unwrap();
        assert_eq!(terms.len(), 8);
        let forward = terms.iter().fold(Rational::zero(), |acc, t| &acc + t);
        let backward = terms.iter().rev().fold(Rational::zero(), |acc, t| &acc + t);
        assert_eq!(forward, backward);
        assert_eq!(forward, pfq_exact(&spec).unwrap());
    }

    #[test]
    fn incremental_does_less_work_on_larger_series() {
        let spec = PfqSpec::new(vec![ri(-60), r(3, 2)], vec![r(5, 2)], ri(1));
        let (v1, ops1) = pfq_exact_counted(&spec).unwrap();
        let (v2, ops2) = pfq_exact_incremental_counted(&spec).unwrap();
        assert_eq!(v1, v2);
        assert!(ops2.muls < ops1.muls, "{} vs {}", ops2.muls, ops1.muls);
    }

    #[test]
    fn gamma_known_values() {
        let g5 = gamma_float(5.0).unwrap();
        assert!((g5 - 24.0).abs() / 24.0 < 1e-12);
        let ghalf = gamma_float(0.5).unwrap();
        let sqrt_pi = std::f64::consts::PI.sqrt();
        assert!((ghalf - sqrt_pi).abs() / sqrt_pi < 1e-12);
        // reflection formula product
        let p = gamma_float(0.3).unwrap() * gamma_float(0.7).unwrap();
        let expected = std::f64::consts::PI / (0.3 * std::f64::consts::PI).sin();
        assert!((p - expected).abs() / expected < 1e-11);
    }

    #[test]
    fn gamma_pole_detection() {
        assert!(matches!(gamma_float(0.0), Err(CoreError::GammaPole { .. })));
        assert!(matches!(
            gamma_float(-3.0),
            Err(CoreError::GammaPole { .. })
        ));
        assert!(gamma_float(-2.5).is_ok());
    }

    #[test]
    fn gamma_ratio_values() {
        assert_eq!(gamma_ratio(1.0, &[], &[]).unwrap(), 1.0);
        let v = gamma_ratio(1.0, &[3.0], &[2.0]).unwrap();
        assert!((v - 2.0).abs() < 1e-12);
    }

    #[test]
    fn float_agrees_with_exact_on_terminating_series() {
        let spec = PfqSpec::new(
            vec![ri(-9), r(5, 3), r(1, 2)],
            vec![r(10, 3), r(7, 4)],
            r(3, 4),
        );
        let exact = pfq_exact(&spec).unwrap().to_f64();
        let num: Vec<f64> = spec.numerator.iter().map(Rational::to_f64).collect();
        let den: Vec<f64> = spec.denominator.iter().map(Rational::to_f64).collect();
        let approx = pfq_float(&num, &den, spec.argument.to_f64(), 1e-15, 1000).unwrap();
        assert!(approx.converged);
        assert!((approx.value - exact).abs() <= 1e-12 * exact.abs().max(1.0));
    }

    #[test]
    fn divergent_parameters_hit_the_term_cap() {
        // balance <= 0 at z = 1: partial sums never settle
        let out = pfq_float(&[2.0, 3.0], &[1.5], 1.0, 1e-12, 2000).unwrap();
        assert!(!out.converged);
        assert_eq!(out.terms, 2000);
    }

    #[test]
    fn dougall_reduction_spot_value() {
        // n=1, a=2, b=1/2, c=1/3: closed form 39/40, series must match
        let red = dougall_reduction(1, &ri(2), &r(1, 2), &r(1, 3)).unwrap();
        assert_eq!(red.closed_form, r(39, 40));
        assert_eq!(pfq_exact(&red.series).unwrap(), r(39, 40));
    }

    #[test]
    fn reductions_are_trivial_at_n_zero() {
        let red = dougall_reduction(0, &ri(2), &r(1, 2), &r(1, 3)).unwrap();
        assert_eq!(red.closed_form, Rational::one());
        assert_eq!(pfq_exact(&red.series).unwrap(), Rational::one());
        let red = dixon_reduction(0, &r(5, 2), &r(1, 7)).unwrap();
        assert_eq!(red.closed_form, Rational::one());
        let red = dixonlike_reduction(0, &r(5, 2), &r(1, 7)).unwrap();
        assert_eq!(red.closed_form, Rational::one());
    }

    #[test]
    fn kummer_reduction_spot_value() {
        // n=1, b=c=1/2, d=e=3: prefactor (d+e-b-c)_1/(e)_1 = 5/3
        let red = kummer_reduction(1, &r(1, 2), &r(1, 2), &ri(3), &ri(3)).unwrap();
        assert_eq!(red.prefactor, r(5, 3));
        let lhs = pfq_exact(&red.lhs).unwrap();
        let rhs = &red.prefactor * &pfq_exact(&red.rhs_series).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn dixon_joint_limit_matches_series_small_case() {
        // n=1, generic b=4/3, c=7/5: series 3F2[-2, b, c; -1-b... ] built from
        // the substituted parameters must equal the limit closed form
        let b = r(4, 3);
        let c = r(7, 5);
        let n = 1u64;
        let a = ri(-2 * n as i64);
        let one = ri(1);
        let series = PfqSpec::new(
            vec![a.clone(), b.clone(), c.clone()],
            vec![&(&one + &a) - &b, &(&one + &a) - &c],
            ri(1),
        );
        assert_eq!(
            pfq_exact(&series).unwrap(),
            dixon_a_neg2n_closed_form(n, &b, &c).unwrap()
        );
    }
}
