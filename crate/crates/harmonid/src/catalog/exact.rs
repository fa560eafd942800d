//! Exact evaluators for the catalog's identities.
//!
//! Every function evaluates one side of one identity, written directly from
//! the summation formula; left and right sides never share intermediate
//! results beyond the shared primitives in `harmonid_core::special`. Sides of
//! identities whose parameters are free rationals are generic over [`Scalar`],
//! so the same code can be run over jets to differentiate an identity with
//! respect to one of its parameters.
//!
//! Guards are pure predicates on the parameters deciding whether both sides
//! evaluate pole-free; they mirror the denominator structure of the formulas.

use harmonid_core::special::{
    binom_row, binom_shift_prefix, binomial_gen, harmonic, harmonic_prefix,
};
use harmonid_core::{CoreError, Rational, Scalar};

// ---------------------------------------------------------------------------
// Small helpers
// ---------------------------------------------------------------------------

fn int<T: Scalar>(n: i64) -> T {
    T::from_int(n)
}

fn ratio<T: Scalar>(n: i64, d: i64) -> T {
    T::from_rational(&Rational::new(n, d).expect("nonzero denominator"))
}

/// 2^e as an exact rational, e possibly negative (2^-1 = 1/2).
fn two_pow<T: Scalar>(e: i64) -> T {
    T::from_rational(&Rational::from_integer(2).pow(e).expect("2 is invertible"))
}

/// 4^e as an exact rational, e possibly negative (4^-1 = 1/4).
fn four_pow<T: Scalar>(e: i64) -> T {
    T::from_rational(&Rational::from_integer(4).pow(e).expect("4 is invertible"))
}

/// True when v is an integer inside lo..=hi.
pub(crate) fn int_in(v: &Rational, lo: i64, hi: i64) -> bool {
    v.as_i64().is_some_and(|m| lo <= m && m <= hi)
}

/// Alternating-sign accumulator: sum += (-1)^k term.
fn signed_add<T: Scalar>(sum: &T, term: &T, k: u64) -> T {
    if k.is_multiple_of(2) {
        sum.add(term)
    } else {
        sum.sub(term)
    }
}

fn hp(n: u64, x: &Rational) -> Result<Vec<Rational>, CoreError> {
    harmonic_prefix(n, 1, x)
}

fn h0(n: u64) -> Vec<Rational> {
    harmonic_prefix(n, 1, &Rational::zero()).expect("positive denominators")
}

fn h0_ord2(n: u64) -> Vec<Rational> {
    harmonic_prefix(n, 2, &Rational::zero()).expect("positive denominators")
}

// ---------------------------------------------------------------------------
// eq_a: two-variable alternating binomial-ratio summation (degree-0 case)
// ---------------------------------------------------------------------------

pub fn eq_a_lhs<T: Scalar>(n: u64, x: &T, y: &T) -> Result<T, CoreError> {
    let kk = 2 * n;
    let c = binom_row(&int::<T>(kk as i64), kk);
    let bx = binom_shift_prefix(x, kk);
    let by = binom_shift_prefix(y, kk);
    let rx = binom_row(&x.add(&int(kk as i64)), kk);
    let ry = binom_row(&y.add(&int(kk as i64)), kk);
    let mut sum = T::zero();
    for k in 0..=kk {
        let i = k as usize;
        let num = c[i].mul(&bx[i]).mul(&by[i]);
        let den = rx[i].mul(&ry[i]);
        let term = num
            .try_div(&den)
            .map_err(|_| CoreError::Pole { index: k })?;
        sum = signed_add(&sum, &term, k);
    }
    Ok(sum)
}

pub fn eq_a_rhs<T: Scalar>(n: u64, x: &T, y: &T) -> Result<T, CoreError> {
    let kk = 2 * n;
    let bx = binom_shift_prefix(x, n);
    let by = binom_shift_prefix(y, n);
    let sum_xy = x.add(y);
    let top = binomial_gen(&sum_xy.add(&int(1 + kk as i64)), kk);
    let num = bx[n as usize].mul(&by[n as usize]).mul(&top);
    let den = binomial_gen(&x.add(&int(kk as i64)), kk)
        .mul(&binomial_gen(&y.add(&int(kk as i64)), kk))
        .mul(&binomial_gen(&sum_xy.add(&int(1 + n as i64)), n));
    num.try_div(&den).map_err(|_| CoreError::Pole { index: 0 })
}

pub fn eq_a_guard(n: u64, x: &Rational, y: &Rational) -> bool {
    let kk = 2 * n as i64;
    !int_in(x, -kk, -1) && !int_in(y, -kk, -1) && !int_in(&(x + y), -(n as i64) - 1, -2)
}

// ---------------------------------------------------------------------------
// thm_a: same weights against H_k(x)
// ---------------------------------------------------------------------------

pub fn thm_a_lhs<T: Scalar>(n: u64, x: &T, y: &T) -> Result<T, CoreError> {
    let kk = 2 * n;
    let c = binom_row(&int::<T>(kk as i64), kk);
    let bx = binom_shift_prefix(x, kk);
    let by = binom_shift_prefix(y, kk);
    let rx = binom_row(&x.add(&int(kk as i64)), kk);
    let ry = binom_row(&y.add(&int(kk as i64)), kk);
    let h = harmonic_prefix(kk, 1, x)?;
    let mut sum = T::zero();
    for k in 0..=kk {
        let i = k as usize;
        let num = c[i].mul(&bx[i]).mul(&by[i]).mul(&h[i]);
        let den = rx[i].mul(&ry[i]);
        let term = num
            .try_div(&den)
            .map_err(|_| CoreError::Pole { index: k })?;
        sum = signed_add(&sum, &term, k);
    }
    Ok(sum)
}

pub fn thm_a_rhs<T: Scalar>(n: u64, x: &T, y: &T) -> Result<T, CoreError> {
    let u = x.add(y).add(&T::one());
    let braces = harmonic(n, 1, x)?
        .sub(&harmonic(n, 1, &u)?)
        .add(&harmonic(2 * n, 1, &u)?);
    Ok(ratio::<T>(1, 2).mul(&eq_a_rhs(n, x, y)?).mul(&braces))
}

pub fn thm_a_guard(n: u64, x: &Rational, y: &Rational) -> bool {
    let kk = 2 * n as i64;
    !int_in(x, -kk, -1) && !int_in(y, -kk, -1) && !int_in(&(x + y), -kk - 1, -2)
}

// ---------------------------------------------------------------------------
// harmonic_aa: nonnegative-integer specialization of thm_a
// ---------------------------------------------------------------------------

pub fn harmonic_aa_lhs(n: u64, p: u64, q: u64) -> Result<Rational, CoreError> {
    let kk = 2 * n;
    let pr = Rational::from_integer(p as i64);
    let qr = Rational::from_integer(q as i64);
    let c = binom_row(&Rational::from_integer(kk as i64), kk);
    let bp = binom_shift_prefix(&pr, kk);
    let bq = binom_shift_prefix(&qr, kk);
    let rp = binom_row(&Rational::from_integer((p + kk) as i64), kk);
    let rq = binom_row(&Rational::from_integer((q + kk) as i64), kk);
    let h = h0(p + kk);
    let mut sum = Rational::zero();
    for k in 0..=kk {
        let i = k as usize;
        let num = &(&(&c[i] * &bp[i]) * &bq[i]) * &h[(p + k) as usize];
        let term = num.try_div(&(&rp[i] * &rq[i]))?;
        sum = signed_add(&sum, &term, k);
    }
    Ok(sum)
}

pub fn harmonic_aa_rhs(n: u64, p: u64, q: u64) -> Result<Rational, CoreError> {
    let kk = 2 * n;
    let pr = Rational::from_integer(p as i64);
    let qr = Rational::from_integer(q as i64);
    let prefactor = eq_a_rhs(n, &pr, &qr)?;
    let h = h0(1 + p + q + kk);
    let braces = &(&(&h[p as usize] + &h[(p + n) as usize]) - &h[(1 + p + q + n) as usize])
        + &h[(1 + p + q + kk) as usize];
    Ok(&(&Rational::new(1, 2).unwrap() * &prefactor) * &braces)
}

// ---------------------------------------------------------------------------
// eq_b: derivative of thm_a in y, then y = x (squared-weight form)
// ---------------------------------------------------------------------------

fn squared_weight_prefactor<T: Scalar>(n: u64, x: &T) -> Result<T, CoreError> {
    // binom(x+n,n)^2 binom(1+2x+2n,2n) / [binom(x+2n,2n)^2 binom(1+2x+n,n)]
    let kk = 2 * n;
    let two_x = x.add(x);
    let bxn = binomial_gen(&x.add(&int(n as i64)), n);
    let num = bxn
        .mul(&bxn)
        .mul(&binomial_gen(&two_x.add(&int(1 + kk as i64)), kk));
    let bx2n = binomial_gen(&x.add(&int(kk as i64)), kk);
    let den = bx2n
        .mul(&bx2n)
        .mul(&binomial_gen(&two_x.add(&int(1 + n as i64)), n));
    num.try_div(&den).map_err(|_| CoreError::Pole { index: 0 })
}

fn squared_weight_sum<T: Scalar, F>(n: u64, x: &T, factor: F) -> Result<T, CoreError>
where
    F: Fn(u64) -> Result<T, CoreError>,
{
    // sum (-1)^k binom(2n,k) binom(x+k,k)^2 / binom(x+2n,k)^2 * factor(k)
    let kk = 2 * n;
    let c = binom_row(&int::<T>(kk as i64), kk);
    let bx = binom_shift_prefix(x, kk);
    let rx = binom_row(&x.add(&int(kk as i64)), kk);
    let mut sum = T::zero();
    for k in 0..=kk {
        let i = k as usize;
        let num = c[i].mul(&bx[i]).mul(&bx[i]).mul(&factor(k)?);
        let den = rx[i].mul(&rx[i]);
        let term = num
            .try_div(&den)
            .map_err(|_| CoreError::Pole { index: k })?;
        sum = signed_add(&sum, &term, k);
    }
    Ok(sum)
}

pub fn eq_b_lhs<T: Scalar>(n: u64, x: &T) -> Result<T, CoreError> {
    let h = harmonic_prefix(2 * n, 1, x)?;
    squared_weight_sum(n, x, |k| {
        let hk = &h[k as usize];
        let hrev = &h[(2 * n - k) as usize];
        Ok(hk.mul(hk).add(&hk.mul(hrev)))
    })
}

pub fn eq_b_rhs<T: Scalar>(n: u64, x: &T) -> Result<T, CoreError> {
    let u = x.add(x).add(&T::one()); // 1 + 2x
    let h2 = harmonic_prefix(2 * n, 2, &u)?;
    let h1 = harmonic_prefix(2 * n, 1, &u)?;
    let hnx = harmonic(n, 1, x)?;
    let inner = h1[n as usize].sub(&h1[2 * n as usize]).sub(&hnx);
    let braces = h2[n as usize]
        .sub(&h2[2 * n as usize])
        .add(&inner.mul(&inner));
    Ok(ratio::<T>(1, 2)
        .mul(&squared_weight_prefactor(n, x)?)
        .mul(&braces))
}

pub fn eq_b_guard(n: u64, x: &Rational) -> bool {
    let kk = 2 * n as i64;
    let two_x = &Rational::from_integer(2) * x;
    !int_in(x, -kk, -1) && !int_in(&two_x, -kk - 1, -2)
}

// ---------------------------------------------------------------------------
// thm_b: second-order harmonic weight form
// ---------------------------------------------------------------------------

pub fn thm_b_lhs<T: Scalar>(n: u64, x: &T) -> Result<T, CoreError> {
    let h2 = harmonic_prefix(2 * n, 2, x)?;
    squared_weight_sum(n, x, |k| Ok(h2[k as usize].clone()))
}

pub fn thm_b_rhs<T: Scalar>(n: u64, x: &T) -> Result<T, CoreError> {
    Ok(ratio::<T>(1, 2)
        .mul(&squared_weight_prefactor(n, x)?)
        .mul(&harmonic(n, 2, x)?))
}

pub fn thm_b_guard(n: u64, x: &Rational) -> bool {
    let kk = 2 * n as i64;
    let two_x = &Rational::from_integer(2) * x;
    !int_in(x, -kk, -1) && !int_in(&two_x, -(n as i64) - 1, -2)
}

// ---------------------------------------------------------------------------
// harmonic_bb: nonnegative-integer specialization of thm_b
// ---------------------------------------------------------------------------

pub fn harmonic_bb_lhs(n: u64, p: u64) -> Result<Rational, CoreError> {
    let h2 = h0_ord2(p + 2 * n);
    squared_weight_sum(n, &Rational::from_integer(p as i64), |k| {
        Ok(h2[(p + k) as usize].clone())
    })
}

pub fn harmonic_bb_rhs(n: u64, p: u64) -> Result<Rational, CoreError> {
    let pr = Rational::from_integer(p as i64);
    let h2 = h0_ord2(p + n);
    let braces = &h2[(p + n) as usize] + &h2[p as usize];
    Ok(&(&Rational::new(1, 2).unwrap() * &squared_weight_prefactor(n, &pr)?) * &braces)
}

// ---------------------------------------------------------------------------
// wgy_cor21: reciprocal-binomial sum of H_k H_{2n-k}
// ---------------------------------------------------------------------------

pub fn wgy_cor21_lhs(n: u64) -> Result<Rational, CoreError> {
    let kk = 2 * n;
    let c = binom_row(&Rational::from_integer(kk as i64), kk);
    let h = h0(kk);
    let mut sum = Rational::zero();
    for k in 0..=kk {
        let i = k as usize;
        let num = &h[i] * &h[(kk - k) as usize];
        let term = num.try_div(&c[i])?;
        sum = signed_add(&sum, &term, k);
    }
    Ok(sum)
}

pub fn wgy_cor21_rhs(n: u64) -> Result<Rational, CoreError> {
    let np1 = Rational::from_integer(1 + n as i64);
    let h = h0(1 + 2 * n);
    let prefactor = Rational::from_integer(1 + 2 * n as i64)
        .try_div(&(&Rational::from_integer(2) * &(&np1 * &np1)))?;
    let braces = &np1.recip()? - &h[(1 + 2 * n) as usize];
    Ok(&prefactor * &braces)
}

// ---------------------------------------------------------------------------
// prop_a: reciprocal-binomial sum of H_k^2
// ---------------------------------------------------------------------------

pub fn prop_a_lhs(n: u64) -> Result<Rational, CoreError> {
    let kk = 2 * n;
    let c = binom_row(&Rational::from_integer(kk as i64), kk);
    let h = h0(kk);
    let mut sum = Rational::zero();
    for k in 0..=kk {
        let i = k as usize;
        let term = (&h[i] * &h[i]).try_div(&c[i])?;
        sum = signed_add(&sum, &term, k);
    }
    Ok(sum)
}

pub fn prop_a_rhs(n: u64) -> Result<Rational, CoreError> {
    let np1 = Rational::from_integer(1 + n as i64);
    let h1 = h0(1 + 2 * n);
    let h2 = h0_ord2(1 + 2 * n);
    let big_h = &h1[(1 + 2 * n) as usize];
    let braces = &(&(&(big_h * big_h) - &big_h.try_div(&np1)?) - &h2[(1 + 2 * n) as usize])
        + &h2[(1 + n) as usize];
    let prefactor = Rational::from_integer(1 + 2 * n as i64)
        .try_div(&Rational::from_integer(2 + 2 * n as i64))?;
    Ok(&prefactor * &braces)
}

// ---------------------------------------------------------------------------
// intro_id1: reciprocal-binomial sum of H_k^(2)
// ---------------------------------------------------------------------------

pub fn intro_id1_lhs(n: u64) -> Result<Rational, CoreError> {
    let kk = 2 * n;
    let c = binom_row(&Rational::from_integer(kk as i64), kk);
    let h2 = h0_ord2(kk);
    let mut sum = Rational::zero();
    for k in 0..=kk {
        let i = k as usize;
        let term = h2[i].try_div(&c[i])?;
        sum = signed_add(&sum, &term, k);
    }
    Ok(sum)
}

pub fn intro_id1_rhs(n: u64) -> Result<Rational, CoreError> {
    let prefactor = Rational::from_integer(1 + 2 * n as i64)
        .try_div(&Rational::from_integer(2 + 2 * n as i64))?;
    Ok(&prefactor * &h0_ord2(n)[n as usize])
}

// ---------------------------------------------------------------------------
// eq_c: two-part binomial closed form of the Dixon-like reduction
// ---------------------------------------------------------------------------

fn dixonlike_weights<T: Scalar>(n: u64, x: &T, y: &T) -> Result<Vec<T>, CoreError> {
    // w_k = binom(n,k) binom(x+k,k) binom(y+k,k) / [binom(x+n+k,k) binom(x-y+k,k)]
    let c = binom_row(&int::<T>(n as i64), n);
    let bx = binom_shift_prefix(x, n);
    let by = binom_shift_prefix(y, n);
    let bxn = binom_shift_prefix(&x.add(&int(n as i64)), n);
    let bxy = binom_shift_prefix(&x.sub(y), n);
    let mut out = Vec::with_capacity(n as usize + 1);
    for k in 0..=n {
        let i = k as usize;
        let num = c[i].mul(&bx[i]).mul(&by[i]);
        let den = bxn[i].mul(&bxy[i]);
        out.push(
            num.try_div(&den)
                .map_err(|_| CoreError::Pole { index: k })?,
        );
    }
    Ok(out)
}

/// The two RHS pieces shared by eq_c and eq_d:
/// 2^{2n-1} binom(x/2+n,n) binom((x-1)/2-y+n,n) / [binom(x+2n,n) binom(x-y+n,n)]
/// and its shifted partner.
fn dixonlike_rhs_pieces<T: Scalar>(n: u64, x: &T, y: &T) -> Result<(T, T), CoreError> {
    let scale = two_pow::<T>(2 * n as i64 - 1);
    let half_x = x.try_div(&int(2))?;
    let half_xm1 = x.sub(&T::one()).try_div(&int(2))?;
    let half_xm2 = x.sub(&int(2)).try_div(&int(2))?;
    let den = binomial_gen(&x.add(&int(2 * n as i64)), n)
        .mul(&binomial_gen(&x.sub(y).add(&int(n as i64)), n));
    let p1 = scale
        .mul(&binomial_gen(&half_x.add(&int(n as i64)), n))
        .mul(&binomial_gen(&half_xm1.sub(y).add(&int(n as i64)), n))
        .try_div(&den)
        .map_err(|_| CoreError::Pole { index: 0 })?;
    let p2 = scale
        .mul(&binomial_gen(&half_xm1.add(&int(n as i64)), n))
        .mul(&binomial_gen(&half_xm2.sub(y).add(&int(n as i64)), n))
        .try_div(&den)
        .map_err(|_| CoreError::Pole { index: 0 })?;
    Ok((p1, p2))
}

pub fn eq_c_lhs<T: Scalar>(n: u64, x: &T, y: &T) -> Result<T, CoreError> {
    let w = dixonlike_weights(n, x, y)?;
    let mut sum = T::zero();
    for k in 0..=n {
        sum = signed_add(&sum, &w[k as usize], k);
    }
    Ok(sum)
}

pub fn eq_c_rhs<T: Scalar>(n: u64, x: &T, y: &T) -> Result<T, CoreError> {
    let (p1, p2) = dixonlike_rhs_pieces(n, x, y)?;
    Ok(p1.add(&p2))
}

pub fn eq_c_guard(n: u64, x: &Rational, y: &Rational) -> bool {
    let ni = n as i64;
    !int_in(x, -2 * ni, -ni - 1) && !int_in(&(x - y), -ni, -1)
}

// ---------------------------------------------------------------------------
// eq_d: derivative of eq_c in y
// ---------------------------------------------------------------------------

pub fn eq_d_lhs<T: Scalar>(n: u64, x: &T, y: &T) -> Result<T, CoreError> {
    let w = dixonlike_weights(n, x, y)?;
    let hy = harmonic_prefix(n, 1, y)?;
    let hxy = harmonic_prefix(n, 1, &x.sub(y))?;
    let mut sum = T::zero();
    for k in 0..=n {
        let i = k as usize;
        let term = w[i].mul(&hy[i].add(&hxy[i]));
        sum = signed_add(&sum, &term, k);
    }
    Ok(sum)
}

pub fn eq_d_rhs<T: Scalar>(n: u64, x: &T, y: &T) -> Result<T, CoreError> {
    let (p1, p2) = dixonlike_rhs_pieces(n, x, y)?;
    let hxy = harmonic(n, 1, &x.sub(y))?;
    let half_xm1 = x.sub(&T::one()).try_div(&int(2))?;
    let half_xm2 = x.sub(&int(2)).try_div(&int(2))?;
    let b1 = hxy.sub(&harmonic(n, 1, &half_xm1.sub(y))?);
    let b2 = hxy.sub(&harmonic(n, 1, &half_xm2.sub(y))?);
    Ok(p1.mul(&b1).add(&p2.mul(&b2)))
}

pub fn eq_d_guard(n: u64, x: &Rational, y: &Rational) -> bool {
    let ni = n as i64;
    let half_xm1_y = &(&(x - &Rational::one()) * &Rational::new(1, 2).unwrap()) - y;
    let half_xm2_y = &(&(x - &Rational::from_integer(2)) * &Rational::new(1, 2).unwrap()) - y;
    eq_c_guard(n, x, y)
        && !int_in(y, -ni, -1)
        && !int_in(&half_xm1_y, -ni, -1)
        && !int_in(&half_xm2_y, -ni, -1)
}

// ---------------------------------------------------------------------------
// thm_c: single-variable form with the 4^{n-1} correction term
// ---------------------------------------------------------------------------

pub fn thm_c_lhs<T: Scalar>(n: u64, x: &T) -> Result<T, CoreError> {
    let two_x = x.add(x);
    let c = binom_row(&int::<T>(n as i64), n);
    let b2x = binom_shift_prefix(&two_x, n);
    let b2xn = binom_shift_prefix(&two_x.add(&int(n as i64)), n);
    let h = harmonic_prefix(n, 1, x)?;
    let mut sum = T::zero();
    for k in 0..=n {
        let i = k as usize;
        let num = c[i].mul(&b2x[i]).mul(&h[i]);
        let term = num
            .try_div(&b2xn[i])
            .map_err(|_| CoreError::Pole { index: k })?;
        sum = signed_add(&sum, &term, k);
    }
    Ok(sum)
}

pub fn thm_c_rhs<T: Scalar>(n: u64, x: &T) -> Result<T, CoreError> {
    assert!(n >= 1, "defined for n >= 1");
    let scale = four_pow::<T>(n as i64 - 1);
    let two_x = x.add(x);
    let b_base = binomial_gen(&two_x.add(&int(2 * n as i64)), n);
    let h = h0(2 * n);
    let braces = harmonic(n, 1, x)?
        .add(&T::from_rational(&h[n as usize]))
        .sub(&T::from_rational(
            &(&Rational::from_integer(2) * &h[2 * n as usize]),
        ));
    let first = scale
        .mul(&binomial_gen(&ratio::<T>(-1, 2).add(&int(n as i64)), n))
        .try_div(&b_base)
        .map_err(|_| CoreError::Pole { index: 0 })?
        .mul(&braces);
    let second = scale
        .mul(&binomial_gen(&x.add(&ratio(-1, 2)).add(&int(n as i64)), n))
        .try_div(
            &int::<T>(n as i64)
                .mul(&b_base)
                .mul(&binomial_gen(&x.add(&int(n as i64)), n)),
        )
        .map_err(|_| CoreError::Pole { index: 0 })?;
    Ok(first.sub(&second))
}

pub fn thm_c_guard(n: u64, x: &Rational) -> bool {
    let ni = n as i64;
    let two_x = &Rational::from_integer(2) * x;
    !int_in(&two_x, -2 * ni, -ni - 1) && !int_in(x, -ni, -1)
}

// ---------------------------------------------------------------------------
// harmonic_cc: nonnegative-integer specialization of thm_c
// ---------------------------------------------------------------------------

pub fn harmonic_cc_lhs(n: u64, p: u64) -> Result<Rational, CoreError> {
    let c = binom_row(&Rational::from_integer(n as i64), n);
    let b2p = binom_shift_prefix(&Rational::from_integer(2 * p as i64), n);
    let b2pn = binom_shift_prefix(&Rational::from_integer((2 * p + n) as i64), n);
    let h = h0(p + n);
    let mut sum = Rational::zero();
    for k in 0..=n {
        let i = k as usize;
        let num = &(&c[i] * &b2p[i]) * &h[(p + k) as usize];
        let term = num.try_div(&b2pn[i])?;
        sum = signed_add(&sum, &term, k);
    }
    Ok(sum)
}

pub fn harmonic_cc_rhs(n: u64, p: u64) -> Result<Rational, CoreError> {
    assert!(n >= 1, "defined for n >= 1");
    let scale = four_pow::<Rational>(n as i64 - 1);
    let b_base = binomial_gen(&Rational::from_integer((2 * p + 2 * n) as i64), n);
    let h = h0(2 * n.max(p + n));
    let braces = &(&(&h[(p + n) as usize] + &h[p as usize]) + &h[n as usize])
        - &(&Rational::from_integer(2) * &h[(2 * n) as usize]);
    let half = Rational::new(-1, 2).unwrap();
    let first = (&scale * &binomial_gen(&(&half + &Rational::from_integer(n as i64)), n))
        .try_div(&b_base)?
        * &braces;
    let second = (&scale * &binomial_gen(&(&half + &Rational::from_integer((p + n) as i64)), n))
        .try_div(
            &(&(&Rational::from_integer(n as i64) * &b_base)
                * &binomial_gen(&Rational::from_integer((p + n) as i64), n)),
        )?;
    Ok(&first - &second)
}

// ---------------------------------------------------------------------------
// thm_d: half-shift form with H_{2k}(x) and the -3/4, -5/4 offsets
// ---------------------------------------------------------------------------

pub fn thm_d_lhs<T: Scalar>(n: u64, x: &T) -> Result<T, CoreError> {
    let half_x = x.try_div(&int(2))?;
    let xm_half = x.sub(&ratio(1, 2));
    let half_xm1 = x.sub(&T::one()).try_div(&int(2))?;
    let c = binom_row(&int::<T>(n as i64), n);
    let ba = binom_shift_prefix(&half_x, n);
    let bb = binom_shift_prefix(&xm_half, n);
    let bc = binom_shift_prefix(&half_xm1, n);
    let bd = binom_shift_prefix(&xm_half.add(&int(n as i64)), n);
    let h = harmonic_prefix(2 * n, 1, x)?;
    let mut sum = T::zero();
    for k in 0..=n {
        let i = k as usize;
        let num = c[i].mul(&ba[i]).mul(&bb[i]).mul(&h[(2 * k) as usize]);
        let den = bc[i].mul(&bd[i]);
        let term = num
            .try_div(&den)
            .map_err(|_| CoreError::Pole { index: k })?;
        sum = signed_add(&sum, &term, k);
    }
    Ok(sum)
}

pub fn thm_d_rhs<T: Scalar>(n: u64, x: &T) -> Result<T, CoreError> {
    let scale = four_pow::<T>(n as i64 - 1);
    let half_x = x.try_div(&int(2))?;
    let half_xm1 = x.sub(&T::one()).try_div(&int(2))?;
    let nr = int::<T>(n as i64);
    let den = binomial_gen(&half_xm1.add(&nr), n).mul(&binomial_gen(
        &x.sub(&ratio(1, 2)).add(&int(2 * n as i64)),
        n,
    ));
    let h_ref = harmonic(n, 1, &half_xm1)?;
    let b1 = h_ref.sub(&T::from_rational(&harmonic(
        n,
        1,
        &Rational::new(-3, 4).unwrap(),
    )?));
    let b2 = h_ref.sub(&T::from_rational(&harmonic(
        n,
        1,
        &Rational::new(-5, 4).unwrap(),
    )?));
    let p1 = scale
        .mul(&binomial_gen(&half_x.add(&ratio(-1, 4)).add(&nr), n))
        .mul(&binomial_gen(&ratio::<T>(-3, 4).add(&nr), n))
        .mul(&b1);
    let p2 = scale
        .mul(&binomial_gen(&half_x.add(&ratio(-3, 4)).add(&nr), n))
        .mul(&binomial_gen(&ratio::<T>(-5, 4).add(&nr), n))
        .mul(&b2);
    p1.add(&p2)
        .try_div(&den)
        .map_err(|_| CoreError::Pole { index: 0 })
}

pub fn thm_d_guard(n: u64, x: &Rational) -> bool {
    let ni = n as i64;
    let half = Rational::new(1, 2).unwrap();
    let half_xm1 = &(x - &Rational::one()) * &half;
    let xm_half = x - &half;
    !int_in(&half_xm1, -ni, -1) && !int_in(&xm_half, -2 * ni, -ni - 1) && !int_in(x, -2 * ni, -1)
}

// ---------------------------------------------------------------------------
// harmonic_dd: nonnegative-integer specialization of thm_d
// ---------------------------------------------------------------------------

pub fn harmonic_dd_lhs(n: u64, p: u64) -> Result<Rational, CoreError> {
    let pr = Rational::from_integer(p as i64);
    let half = Rational::new(1, 2).unwrap();
    let half_p = &pr * &half;
    let pm_half = &pr - &half;
    let half_pm1 = &(&pr - &Rational::one()) * &half;
    let c = binom_row(&Rational::from_integer(n as i64), n);
    let ba = binom_shift_prefix(&half_p, n);
    let bb = binom_shift_prefix(&pm_half, n);
    let bc = binom_shift_prefix(&half_pm1, n);
    let bd = binom_shift_prefix(&(&pm_half + &Rational::from_integer(n as i64)), n);
    let h = h0(p + 2 * n);
    let mut sum = Rational::zero();
    for k in 0..=n {
        let i = k as usize;
        let num = &(&(&c[i] * &ba[i]) * &bb[i]) * &h[(p + 2 * k) as usize];
        let term = num.try_div(&(&bc[i] * &bd[i]))?;
        sum = signed_add(&sum, &term, k);
    }
    Ok(sum)
}

pub fn harmonic_dd_rhs(n: u64, p: u64) -> Result<Rational, CoreError> {
    let pr = Rational::from_integer(p as i64);
    let nr = Rational::from_integer(n as i64);
    let half = Rational::new(1, 2).unwrap();
    let scale = four_pow::<Rational>(n as i64 - 1);
    let half_p = &pr * &half;
    let half_pm1 = &(&pr - &Rational::one()) * &half;
    let den = &binomial_gen(&(&half_pm1 + &nr), n)
        * &binomial_gen(&(&(&pr - &half) + &Rational::from_integer(2 * n as i64)), n);
    let two_hp = &Rational::from_integer(2) * &h0(p)[p as usize];
    let h_ref = &two_hp + &harmonic(n, 1, &half_pm1)?;
    let b1 = &h_ref - &harmonic(n, 1, &Rational::new(-3, 4).unwrap())?;
    let b2 = &h_ref - &harmonic(n, 1, &Rational::new(-5, 4).unwrap())?;
    let p1 = &(&(&scale * &binomial_gen(&(&(&half_p + &Rational::new(-1, 4).unwrap()) + &nr), n))
        * &binomial_gen(&(&Rational::new(-3, 4).unwrap() + &nr), n))
        * &b1;
    let p2 = &(&(&scale * &binomial_gen(&(&(&half_p + &Rational::new(-3, 4).unwrap()) + &nr), n))
        * &binomial_gen(&(&Rational::new(-5, 4).unwrap() + &nr), n))
        * &b2;
    (&p1 + &p2).try_div(&den)
}

// ---------------------------------------------------------------------------
// eq_e: well-poised three-variable summation, degree-0 case
// ---------------------------------------------------------------------------

fn wellpoised_weights<T: Scalar>(n: u64, x: &T, y: &T, z: &T) -> Result<Vec<T>, CoreError> {
    // w_k = binom(n,k) binom(x+k,k) binom(y+k,k) binom(z+k,k) (1+x+2k)
    //       / [binom(x+n+k,k) binom(x-y+k,k) binom(x-z+k,k) (1+x+n+k)]
    let c = binom_row(&int::<T>(n as i64), n);
    let bx = binom_shift_prefix(x, n);
    let by = binom_shift_prefix(y, n);
    let bz = binom_shift_prefix(z, n);
    let bxn = binom_shift_prefix(&x.add(&int(n as i64)), n);
    let bxy = binom_shift_prefix(&x.sub(y), n);
    let bxz = binom_shift_prefix(&x.sub(z), n);
    let mut out = Vec::with_capacity(n as usize + 1);
    for k in 0..=n {
        let i = k as usize;
        let linear_num = T::one().add(x).add(&int(2 * k as i64));
        let linear_den = T::one().add(x).add(&int((n + k) as i64));
        let num = c[i].mul(&bx[i]).mul(&by[i]).mul(&bz[i]).mul(&linear_num);
        let den = bxn[i].mul(&bxy[i]).mul(&bxz[i]).mul(&linear_den);
        out.push(
            num.try_div(&den)
                .map_err(|_| CoreError::Pole { index: k })?,
        );
    }
    Ok(out)
}

fn wellpoised_prefactor<T: Scalar>(n: u64, x: &T, y: &T, z: &T) -> Result<T, CoreError> {
    // binom(x+n,n) binom(x-y-z-1+n,n) / [binom(x-y+n,n) binom(x-z+n,n)]
    let nr = int::<T>(n as i64);
    let num = binomial_gen(&x.add(&nr), n)
        .mul(&binomial_gen(&x.sub(y).sub(z).sub(&T::one()).add(&nr), n));
    let den = binomial_gen(&x.sub(y).add(&nr), n).mul(&binomial_gen(&x.sub(z).add(&nr), n));
    num.try_div(&den).map_err(|_| CoreError::Pole { index: 0 })
}

pub fn eq_e_lhs<T: Scalar>(n: u64, x: &T, y: &T, z: &T) -> Result<T, CoreError> {
    let w = wellpoised_weights(n, x, y, z)?;
    let mut sum = T::zero();
    for k in 0..=n {
        sum = signed_add(&sum, &w[k as usize], k);
    }
    Ok(sum)
}

pub fn eq_e_rhs<T: Scalar>(n: u64, x: &T, y: &T, z: &T) -> Result<T, CoreError> {
    wellpoised_prefactor(n, x, y, z)
}

pub fn eq_e_guard(n: u64, x: &Rational, y: &Rational, z: &Rational) -> bool {
    let ni = n as i64;
    !int_in(x, -2 * ni, -ni - 1)
        && !int_in(&(x - y), -ni, -1)
        && !int_in(&(x - z), -ni, -1)
        && !int_in(x, -1 - 2 * ni, -1 - ni)
}

// ---------------------------------------------------------------------------
// eq_f: derivative of eq_e in z
// ---------------------------------------------------------------------------

pub fn eq_f_lhs<T: Scalar>(n: u64, x: &T, y: &T, z: &T) -> Result<T, CoreError> {
    let w = wellpoised_weights(n, x, y, z)?;
    let hz = harmonic_prefix(n, 1, z)?;
    let hxz = harmonic_prefix(n, 1, &x.sub(z))?;
    let mut sum = T::zero();
    for k in 0..=n {
        let i = k as usize;
        let term = w[i].mul(&hz[i].add(&hxz[i]));
        sum = signed_add(&sum, &term, k);
    }
    Ok(sum)
}

pub fn eq_f_rhs<T: Scalar>(n: u64, x: &T, y: &T, z: &T) -> Result<T, CoreError> {
    let braces = harmonic(n, 1, &x.sub(z))?.sub(&harmonic(n, 1, &x.sub(y).sub(z).sub(&T::one()))?);
    Ok(wellpoised_prefactor(n, x, y, z)?.mul(&braces))
}

pub fn eq_f_guard(n: u64, x: &Rational, y: &Rational, z: &Rational) -> bool {
    let ni = n as i64;
    eq_e_guard(n, x, y, z)
        && !int_in(z, -ni, -1)
        && !int_in(&(&(&(x - y) - z) - &Rational::one()), -ni, -1)
}

// ---------------------------------------------------------------------------
// thm_e: substitution x -> 2x, y -> 2y, z -> x of eq_f
// ---------------------------------------------------------------------------

pub fn thm_e_lhs<T: Scalar>(n: u64, x: &T, y: &T) -> Result<T, CoreError> {
    let two_x = x.add(x);
    let two_y = y.add(y);
    let c = binom_row(&int::<T>(n as i64), n);
    let b2x = binom_shift_prefix(&two_x, n);
    let b2y = binom_shift_prefix(&two_y, n);
    let b2xn = binom_shift_prefix(&two_x.add(&int(n as i64)), n);
    let bxy = binom_shift_prefix(&two_x.sub(&two_y), n);
    let h = harmonic_prefix(n, 1, x)?;
    let mut sum = T::zero();
    for k in 0..=n {
        let i = k as usize;
        let linear_num = T::one().add(&two_x).add(&int(2 * k as i64));
        let linear_den = T::one().add(&two_x).add(&int((n + k) as i64));
        let num = c[i].mul(&b2x[i]).mul(&b2y[i]).mul(&linear_num).mul(&h[i]);
        let den = b2xn[i].mul(&bxy[i]).mul(&linear_den);
        let term = num
            .try_div(&den)
            .map_err(|_| CoreError::Pole { index: k })?;
        sum = signed_add(&sum, &term, k);
    }
    Ok(sum)
}

pub fn thm_e_rhs<T: Scalar>(n: u64, x: &T, y: &T) -> Result<T, CoreError> {
    let nr = int::<T>(n as i64);
    let two_x = x.add(x);
    let two_y = y.add(y);
    let shifted = x.sub(&two_y).sub(&T::one());
    let num = binomial_gen(&two_x.add(&nr), n).mul(&binomial_gen(&shifted.add(&nr), n));
    let den = binomial_gen(&x.add(&nr), n).mul(&binomial_gen(&two_x.sub(&two_y).add(&nr), n));
    let prefactor = num
        .try_div(&den)
        .map_err(|_| CoreError::Pole { index: 0 })?;
    let braces = harmonic(n, 1, x)?.sub(&harmonic(n, 1, &shifted)?);
    Ok(ratio::<T>(1, 2).mul(&prefactor).mul(&braces))
}

pub fn thm_e_guard(n: u64, x: &Rational, y: &Rational) -> bool {
    let ni = n as i64;
    let two = Rational::from_integer(2);
    let two_x = &two * x;
    let two_y = &two * y;
    let diff = &two_x - &two_y;
    let shifted = &(x - &two_y) - &Rational::one();
    !int_in(&two_x, -2 * ni, -ni - 1)
        && !int_in(&diff, -ni, -1)
        && !int_in(&two_x, -1 - 2 * ni, -1 - ni)
        && !int_in(x, -ni, -1)
        && !int_in(&shifted, -ni, -1)
}

// ---------------------------------------------------------------------------
// harmonic_ee: integer specialization x = p, y = q/2 of thm_e
// ---------------------------------------------------------------------------

pub fn harmonic_ee_lhs(n: u64, p: u64, q: u64) -> Result<Rational, CoreError> {
    let c = binom_row(&Rational::from_integer(n as i64), n);
    let b2p = binom_shift_prefix(&Rational::from_integer(2 * p as i64), n);
    let bq = binom_shift_prefix(&Rational::from_integer(q as i64), n);
    let b2pn = binom_shift_prefix(&Rational::from_integer((2 * p + n) as i64), n);
    let b2pq = binom_shift_prefix(&Rational::from_integer(2 * p as i64 - q as i64), n);
    let h = h0(p + n);
    let mut sum = Rational::zero();
    for k in 0..=n {
        let i = k as usize;
        let linear_num = Rational::from_integer((1 + 2 * p + 2 * k) as i64);
        let linear_den = Rational::from_integer((1 + 2 * p + n + k) as i64);
        let num = &(&(&(&c[i] * &b2p[i]) * &bq[i]) * &linear_num) * &h[(p + k) as usize];
        let den = &(&b2pn[i] * &b2pq[i]) * &linear_den;
        let term = num.try_div(&den)?;
        sum = signed_add(&sum, &term, k);
    }
    Ok(sum)
}

pub fn harmonic_ee_rhs(n: u64, p: u64, q: u64) -> Result<Rational, CoreError> {
    assert!(q < p, "defined for q <= p - 1");
    let nr = Rational::from_integer(n as i64);
    let num = &binomial_gen(&Rational::from_integer((2 * p + n) as i64), n)
        * &binomial_gen(&Rational::from_integer((p - q - 1 + n) as i64), n);
    let den = &binomial_gen(&Rational::from_integer((p + n) as i64), n)
        * &binomial_gen(&(&Rational::from_integer((2 * p - q) as i64) + &nr), n);
    let prefactor = num.try_div(&den)?;
    let h = h0(p + n);
    let braces = &(&(&h[p as usize] + &h[(p + n) as usize]) + &h[(p - q - 1) as usize])
        - &h[(p - q - 1 + n) as usize];
    Ok(&(&Rational::new(1, 2).unwrap() * &prefactor) * &braces)
}

// ---------------------------------------------------------------------------
// thm_f: half-shift three-parameter form with H_{2k}(x)
// ---------------------------------------------------------------------------

pub fn thm_f_lhs<T: Scalar>(n: u64, x: &T, y: &T) -> Result<T, CoreError> {
    let half_x = x.try_div(&int(2))?;
    let xm_half = x.sub(&ratio(1, 2));
    let half_xm1 = x.sub(&T::one()).try_div(&int(2))?;
    let c = binom_row(&int::<T>(n as i64), n);
    let ba = binom_shift_prefix(&half_x, n);
    let bb = binom_shift_prefix(&xm_half, n);
    let by = binom_shift_prefix(y, n);
    let bc = binom_shift_prefix(&half_xm1, n);
    let bd = binom_shift_prefix(&xm_half.add(&int(n as i64)), n);
    let be = binom_shift_prefix(&x.sub(y).sub(&ratio(1, 2)), n);
    let h = harmonic_prefix(2 * n, 1, x)?;
    let two_x = x.add(x);
    let mut sum = T::zero();
    for k in 0..=n {
        let i = k as usize;
        let linear_num = T::one().add(&two_x).add(&int(4 * k as i64));
        let linear_den = T::one().add(&two_x).add(&int((2 * n + 2 * k) as i64));
        let num = c[i]
            .mul(&ba[i])
            .mul(&bb[i])
            .mul(&by[i])
            .mul(&linear_num)
            .mul(&h[(2 * k) as usize]);
        let den = bc[i].mul(&bd[i]).mul(&be[i]).mul(&linear_den);
        let term = num
            .try_div(&den)
            .map_err(|_| CoreError::Pole { index: k })?;
        sum = signed_add(&sum, &term, k);
    }
    Ok(sum)
}

pub fn thm_f_rhs<T: Scalar>(n: u64, x: &T, y: &T) -> Result<T, CoreError> {
    let nr = int::<T>(n as i64);
    let half_xm1 = x.sub(&T::one()).try_div(&int(2))?;
    let half_xm3_y = x.sub(&int(3)).try_div(&int(2))?.sub(y);
    let num =
        binomial_gen(&x.sub(&ratio(1, 2)).add(&nr), n).mul(&binomial_gen(&half_xm3_y.add(&nr), n));
    let den = binomial_gen(&half_xm1.add(&nr), n)
        .mul(&binomial_gen(&x.sub(y).sub(&ratio(1, 2)).add(&nr), n));
    let prefactor = num
        .try_div(&den)
        .map_err(|_| CoreError::Pole { index: 0 })?;
    let braces = harmonic(n, 1, &half_xm1)?.sub(&harmonic(n, 1, &half_xm3_y)?);
    Ok(ratio::<T>(1, 2).mul(&prefactor).mul(&braces))
}

pub fn thm_f_guard(n: u64, x: &Rational, y: &Rational) -> bool {
    let ni = n as i64;
    let half = Rational::new(1, 2).unwrap();
    let half_xm1 = &(x - &Rational::one()) * &half;
    let xm_half = x - &half;
    let xy_half = &(x - y) - &half;
    let half_xm3_y = &(&(x - &Rational::from_integer(3)) * &half) - y;
    let two_x = &Rational::from_integer(2) * x;
    !int_in(&half_xm1, -ni, -1)
        && !int_in(&xm_half, -2 * ni, -ni - 1)
        && !int_in(&xy_half, -ni, -1)
        && !int_in(&two_x, -1 - 4 * ni, -1 - 2 * ni)
        && !int_in(x, -2 * ni, -1)
        && !int_in(&half_xm3_y, -ni, -1)
}

// ---------------------------------------------------------------------------
// harmonic_ff: nonnegative-integer specialization of thm_f
// ---------------------------------------------------------------------------

pub fn harmonic_ff_lhs(n: u64, p: u64, q: u64) -> Result<Rational, CoreError> {
    let pr = Rational::from_integer(p as i64);
    let qr = Rational::from_integer(q as i64);
    let half = Rational::new(1, 2).unwrap();
    let c = binom_row(&Rational::from_integer(n as i64), n);
    let ba = binom_shift_prefix(&(&pr * &half), n);
    let bb = binom_shift_prefix(&(&pr - &half), n);
    let bq = binom_shift_prefix(&qr, n);
    let bc = binom_shift_prefix(&(&(&pr - &Rational::one()) * &half), n);
    let bd = binom_shift_prefix(&(&(&pr - &half) + &Rational::from_integer(n as i64)), n);
    let be = binom_shift_prefix(&(&(&pr - &qr) - &half), n);
    let h = h0(p + 2 * n);
    let mut sum = Rational::zero();
    for k in 0..=n {
        let i = k as usize;
        let linear_num = Rational::from_integer((1 + 2 * p + 4 * k) as i64);
        let linear_den = Rational::from_integer((1 + 2 * p + 2 * n + 2 * k) as i64);
        let num =
            &(&(&(&(&c[i] * &ba[i]) * &bb[i]) * &bq[i]) * &linear_num) * &h[(p + 2 * k) as usize];
        let den = &(&(&bc[i] * &bd[i]) * &be[i]) * &linear_den;
        let term = num.try_div(&den)?;
        sum = signed_add(&sum, &term, k);
    }
    Ok(sum)
}

pub fn harmonic_ff_rhs(n: u64, p: u64, q: u64) -> Result<Rational, CoreError> {
    let pr = Rational::from_integer(p as i64);
    let qr = Rational::from_integer(q as i64);
    let nr = Rational::from_integer(n as i64);
    let half = Rational::new(1, 2).unwrap();
    let half_pm1 = &(&pr - &Rational::one()) * &half;
    let half_pm3_q = &(&(&pr - &Rational::from_integer(3)) * &half) - &qr;
    let num = &binomial_gen(&(&(&pr - &half) + &nr), n) * &binomial_gen(&(&half_pm3_q + &nr), n);
    let den =
        &binomial_gen(&(&half_pm1 + &nr), n) * &binomial_gen(&(&(&(&pr - &qr) - &half) + &nr), n);
    let prefactor = num.try_div(&den)?;
    let two_hp = &Rational::from_integer(2) * &h0(p)[p as usize];
    let braces = &(&two_hp + &harmonic(n, 1, &half_pm1)?) - &harmonic(n, 1, &half_pm3_q)?;
    Ok(&(&half * &prefactor) * &braces)
}

pub fn harmonic_ff_guard(n: u64, p: u64, q: u64) -> bool {
    // (p-3)/2 - q can be a negative integer when p is odd: H_n of it poles
    let half_pm3_q = &(&(&Rational::from_integer(p as i64) - &Rational::from_integer(3))
        * &Rational::new(1, 2).unwrap())
        - &Rational::from_integer(q as i64);
    !int_in(&half_pm3_q, -(n as i64), -1)
}

// ---------------------------------------------------------------------------
// thm_g: squared-harmonic form with the H_{n-1} closed form, plus the
// sub-evaluators its derivation hinges on
// ---------------------------------------------------------------------------

pub fn thm_g_lhs<T: Scalar>(n: u64, x: &T) -> Result<T, CoreError> {
    let two_x = x.add(x);
    let c = binom_row(&int::<T>(n as i64), n);
    let b2x = binom_shift_prefix(&two_x, n);
    let b2xn = binom_shift_prefix(&two_x.add(&int(n as i64)), n);
    let h = harmonic_prefix(n, 1, x)?;
    let mut sum = T::zero();
    for k in 0..=n {
        let i = k as usize;
        let linear_num = T::one().add(&two_x).add(&int(2 * k as i64));
        let linear_den = T::one().add(&two_x).add(&int((n + k) as i64));
        let num = c[i].mul(&b2x[i]).mul(&linear_num).mul(&h[i]).mul(&h[i]);
        let den = b2xn[i].mul(&linear_den);
        let term = num
            .try_div(&den)
            .map_err(|_| CoreError::Pole { index: k })?;
        sum = signed_add(&sum, &term, k);
    }
    Ok(sum)
}

pub fn thm_g_rhs<T: Scalar>(n: u64, x: &T) -> Result<T, CoreError> {
    assert!(n >= 1, "defined for n >= 1");
    let nr = int::<T>(n as i64);
    let two_x = x.add(x);
    let bxn = binomial_gen(&x.add(&nr), n);
    let prefactor = binomial_gen(&two_x.add(&nr), n)
        .try_div(&int::<T>(2 * n as i64).mul(&bxn).mul(&bxn))
        .map_err(|_| CoreError::Pole { index: 0 })?;
    let braces = T::from_rational(&h0(n - 1)[(n - 1) as usize]).sub(&harmonic(n, 1, x)?);
    Ok(prefactor.mul(&braces))
}

pub fn thm_g_guard(n: u64, x: &Rational) -> bool {
    let ni = n as i64;
    let two_x = &Rational::from_integer(2) * x;
    !int_in(&two_x, -2 * ni, -ni - 1)
        && !int_in(&two_x, -1 - 2 * ni, -1 - ni)
        && !int_in(x, -ni, -1)
}

/// A_n(x, y) from the derivative step behind thm_g:
/// [H_n(x) - H_n(x-2y)] [H_n(2x-2y) - H_n(x-2y)] - H_n^(2)(x-2y).
pub fn thm_g_sub_a<T: Scalar>(n: u64, x: &T, y: &T) -> Result<T, CoreError> {
    let two_y = y.add(y);
    let u = x.sub(&two_y);
    let w = x.add(x).sub(&two_y);
    let hu = harmonic(n, 1, &u)?;
    let left = harmonic(n, 1, x)?.sub(&hu);
    let right = harmonic(n, 1, &w)?.sub(&hu);
    Ok(left.mul(&right).sub(&harmonic(n, 2, &u)?))
}

/// B_n(x, y) from the derivative step behind thm_g:
/// H_n(x) + H_n(2x-2y) - 2 H_n(x-2y).
pub fn thm_g_sub_b<T: Scalar>(n: u64, x: &T, y: &T) -> Result<T, CoreError> {
    let two_y = y.add(y);
    let u = x.sub(&two_y);
    let w = x.add(x).sub(&two_y);
    Ok(harmonic(n, 1, x)?
        .add(&harmonic(n, 1, &w)?)
        .sub(&harmonic(n, 1, &u)?.add(&harmonic(n, 1, &u)?)))
}

/// The derivative-step identity behind thm_g, with A_n and B_n on the right:
/// sum of thm_e-style weights times H_k(x) {H_k(2y) + H_k(2x-2y)} equals
/// (1/(2(x-2y+n))) prefactor {(x-2y) A_n - n B_n/(x-2y+n) - 2n/(x-2y+n)^2}.
pub fn thm_g_intermediate_check(n: u64, x: &Rational, y: &Rational) -> Result<bool, CoreError> {
    let two = Rational::from_integer(2);
    let two_x = &two * x;
    let two_y = &two * y;
    let c = binom_row(&Rational::from_integer(n as i64), n);
    let b2x = binom_shift_prefix(&two_x, n);
    let b2y = binom_shift_prefix(&two_y, n);
    let b2xn = binom_shift_prefix(&(&two_x + &Rational::from_integer(n as i64)), n);
    let bxy = binom_shift_prefix(&(&two_x - &two_y), n);
    let hx = harmonic_prefix(n, 1, x)?;
    let h2y = harmonic_prefix(n, 1, &two_y)?;
    let h2x2y = harmonic_prefix(n, 1, &(&two_x - &two_y))?;
    let mut lhs = Rational::zero();
    for k in 0..=n {
        let i = k as usize;
        let linear_num = &(&Rational::one() + &two_x) + &Rational::from_integer(2 * k as i64);
        let linear_den = &(&Rational::one() + &two_x) + &Rational::from_integer((n + k) as i64);
        let num =
            &(&(&(&c[i] * &b2x[i]) * &b2y[i]) * &linear_num) * &(&hx[i] * &(&h2y[i] + &h2x2y[i]));
        let den = &(&b2xn[i] * &bxy[i]) * &linear_den;
        lhs = signed_add(&lhs, &num.try_div(&den)?, k);
    }

    let nr = Rational::from_integer(n as i64);
    let u = &(x - &two_y) + &nr; // x - 2y + n
    let prefactor = (&binomial_gen(&(&two_x + &nr), n) * &binomial_gen(&u, n))
        .try_div(&(&binomial_gen(&(x + &nr), n) * &binomial_gen(&(&(&two_x - &two_y) + &nr), n)))?;
    let a = thm_g_sub_a(n, x, y)?;
    let b = thm_g_sub_b(n, x, y)?;
    let braces =
        &(&(&(x - &two_y) * &a) - &(&nr * &b).try_div(&u)?) - &(&two * &nr).try_div(&(&u * &u))?;
    let rhs = (&prefactor * &braces).try_div(&(&two * &u))?;
    Ok(lhs == rhs)
}

// ---------------------------------------------------------------------------
// harmonic_gg: nonnegative-integer specialization of thm_g
// ---------------------------------------------------------------------------

pub fn harmonic_gg_lhs(n: u64, p: u64) -> Result<Rational, CoreError> {
    let c = binom_row(&Rational::from_integer(n as i64), n);
    let b2p = binom_shift_prefix(&Rational::from_integer(2 * p as i64), n);
    let b2pn = binom_shift_prefix(&Rational::from_integer((2 * p + n) as i64), n);
    let h = h0(p + n);
    let mut sum = Rational::zero();
    for k in 0..=n {
        let i = k as usize;
        let linear_num = Rational::from_integer((1 + 2 * p + 2 * k) as i64);
        let linear_den = Rational::from_integer((1 + 2 * p + n + k) as i64);
        let hpk = &h[(p + k) as usize];
        let num = &(&(&(&c[i] * &b2p[i]) * &linear_num) * hpk) * hpk;
        let den = &b2pn[i] * &linear_den;
        let term = num.try_div(&den)?;
        sum = signed_add(&sum, &term, k);
    }
    Ok(sum)
}

pub fn harmonic_gg_rhs(n: u64, p: u64) -> Result<Rational, CoreError> {
    assert!(n >= 1, "defined for n >= 1");
    let bpn = binomial_gen(&Rational::from_integer((p + n) as i64), n);
    let prefactor = binomial_gen(&Rational::from_integer((2 * p + n) as i64), n)
        .try_div(&(&(&Rational::from_integer(2 * n as i64) * &bpn) * &bpn))?;
    let h = h0(p + n.max(1));
    let braces = &(&h0(n - 1)[(n - 1) as usize] - &h[p as usize]) - &h[(p + n) as usize];
    Ok(&prefactor * &braces)
}

// ---------------------------------------------------------------------------
// thm_h: squared-harmonic half-shift form, plus the C_n sub-evaluator
// ---------------------------------------------------------------------------

pub fn thm_h_lhs<T: Scalar>(n: u64, x: &T) -> Result<T, CoreError> {
    let half_x = x.try_div(&int(2))?;
    let xm_half = x.sub(&ratio(1, 2));
    let half_xm1 = x.sub(&T::one()).try_div(&int(2))?;
    let c = binom_row(&int::<T>(n as i64), n);
    let ba = binom_shift_prefix(&half_x, n);
    let bb = binom_shift_prefix(&xm_half, n);
    let bc = binom_shift_prefix(&half_xm1, n);
    let bd = binom_shift_prefix(&xm_half.add(&int(n as i64)), n);
    let h = harmonic_prefix(2 * n, 1, x)?;
    let two_x = x.add(x);
    let mut sum = T::zero();
    for k in 0..=n {
        let i = k as usize;
        let linear_num = T::one().add(&two_x).add(&int(4 * k as i64));
        let linear_den = T::one().add(&two_x).add(&int((2 * n + 2 * k) as i64));
        let h2k = &h[(2 * k) as usize];
        let num = c[i]
            .mul(&ba[i])
            .mul(&ba[i])
            .mul(&bb[i])
            .mul(&linear_num)
            .mul(h2k)
            .mul(h2k);
        let den = bc[i].mul(&bc[i]).mul(&bd[i]).mul(&linear_den);
        let term = num
            .try_div(&den)
            .map_err(|_| CoreError::Pole { index: k })?;
        sum = signed_add(&sum, &term, k);
    }
    Ok(sum)
}

pub fn thm_h_rhs<T: Scalar>(n: u64, x: &T) -> Result<T, CoreError> {
    let nr = int::<T>(n as i64);
    let half_xm1 = x.sub(&T::one()).try_div(&int(2))?;
    let bc = binomial_gen(&half_xm1.add(&nr), n);
    let num = binomial_gen(&x.sub(&ratio(1, 2)).add(&nr), n)
        .mul(&binomial_gen(&ratio::<T>(-3, 2).add(&nr), n));
    let prefactor = num
        .try_div(&bc.mul(&bc))
        .map_err(|_| CoreError::Pole { index: 0 })?;
    let m32 = Rational::new(-3, 2).unwrap();
    let diff = harmonic(n, 1, &half_xm1)?.sub(&T::from_rational(&harmonic(n, 1, &m32)?));
    let braces = diff
        .mul(&diff)
        .sub(&T::from_rational(&harmonic(n, 2, &m32)?));
    Ok(ratio::<T>(1, 4).mul(&prefactor).mul(&braces))
}

pub fn thm_h_guard(n: u64, x: &Rational) -> bool {
    let ni = n as i64;
    let half = Rational::new(1, 2).unwrap();
    let half_xm1 = &(x - &Rational::one()) * &half;
    let xm_half = x - &half;
    let two_x = &Rational::from_integer(2) * x;
    !int_in(&half_xm1, -ni, -1)
        && !int_in(&xm_half, -2 * ni, -ni - 1)
        && !int_in(&two_x, -1 - 4 * ni, -1 - 2 * ni)
        && !int_in(x, -2 * ni, -1)
}

/// C_n(x, y, z) from the double-derivative step behind thm_h:
/// [H_n(x-y) - H_n(x-y-z-1)] [H_n(x-z) - H_n(x-y-z-1)].
pub fn thm_h_sub_c<T: Scalar>(n: u64, x: &T, y: &T, z: &T) -> Result<T, CoreError> {
    let w = x.sub(y).sub(z).sub(&T::one());
    let hw = harmonic(n, 1, &w)?;
    let left = harmonic(n, 1, &x.sub(y))?.sub(&hw);
    let right = harmonic(n, 1, &x.sub(z))?.sub(&hw);
    Ok(left.mul(&right))
}

/// The double-derivative identity behind thm_h: well-poised weights times
/// {H_k(y)+H_k(x-y)}{H_k(z)+H_k(x-z)} equals the prefactor times
/// {C_n(x,y,z) - H_n^(2)(x-y-z-1)}.
pub fn thm_h_intermediate_check(
    n: u64,
    x: &Rational,
    y: &Rational,
    z: &Rational,
) -> Result<bool, CoreError> {
    let w = wellpoised_weights(n, x, y, z)?;
    let hy = harmonic_prefix(n, 1, y)?;
    let hxy = harmonic_prefix(n, 1, &(x - y))?;
    let hz = harmonic_prefix(n, 1, z)?;
    let hxz = harmonic_prefix(n, 1, &(x - z))?;
    let mut lhs = Rational::zero();
    for k in 0..=n {
        let i = k as usize;
        let term = &w[i] * &(&(&hy[i] + &hxy[i]) * &(&hz[i] + &hxz[i]));
        lhs = signed_add(&lhs, &term, k);
    }
    let shifted = &(&(&(x - y) - z) - &Rational::one());
    let braces = &thm_h_sub_c(n, x, y, z)? - &harmonic(n, 2, shifted)?;
    let rhs = &wellpoised_prefactor(n, x, y, z)? * &braces;
    Ok(lhs == rhs)
}

// ---------------------------------------------------------------------------
// harmonic_hh: nonnegative-integer specialization of thm_h
// ---------------------------------------------------------------------------

pub fn harmonic_hh_lhs(n: u64, p: u64) -> Result<Rational, CoreError> {
    let pr = Rational::from_integer(p as i64);
    let half = Rational::new(1, 2).unwrap();
    let c = binom_row(&Rational::from_integer(n as i64), n);
    let ba = binom_shift_prefix(&(&pr * &half), n);
    let bb = binom_shift_prefix(&(&pr - &half), n);
    let bc = binom_shift_prefix(&(&(&pr - &Rational::one()) * &half), n);
    let bd = binom_shift_prefix(&(&(&pr - &half) + &Rational::from_integer(n as i64)), n);
    let h = h0(p + 2 * n);
    let mut sum = Rational::zero();
    for k in 0..=n {
        let i = k as usize;
        let linear_num = Rational::from_integer((1 + 2 * p + 4 * k) as i64);
        let linear_den = Rational::from_integer((1 + 2 * p + 2 * n + 2 * k) as i64);
        let hpk = &h[(p + 2 * k) as usize];
        let num = &(&(&(&(&(&c[i] * &ba[i]) * &ba[i]) * &bb[i]) * &linear_num) * hpk) * hpk;
        let den = &(&(&bc[i] * &bc[i]) * &bd[i]) * &linear_den;
        let term = num.try_div(&den)?;
        sum = signed_add(&sum, &term, k);
    }
    Ok(sum)
}

pub fn harmonic_hh_rhs(n: u64, p: u64) -> Result<Rational, CoreError> {
    let pr = Rational::from_integer(p as i64);
    let nr = Rational::from_integer(n as i64);
    let half = Rational::new(1, 2).unwrap();
    let half_pm1 = &(&pr - &Rational::one()) * &half;
    let bc = binomial_gen(&(&half_pm1 + &nr), n);
    let num = &binomial_gen(&(&(&pr - &half) + &nr), n)
        * &binomial_gen(&(&Rational::new(-3, 2).unwrap() + &nr), n);
    let prefactor = num.try_div(&(&bc * &bc))?;
    let m32 = Rational::new(-3, 2).unwrap();
    let diff = &harmonic(n, 1, &half_pm1)? - &harmonic(n, 1, &m32)?;
    let hp = h0(p)[p as usize].clone();
    let correction = &(&Rational::from_integer(4) * &hp) * &(&hp + &diff);
    let braces = &(&(&diff * &diff) - &harmonic(n, 2, &m32)?) + &correction;
    Ok(&(&Rational::new(1, 4).unwrap() * &prefactor) * &braces)
}

// ---------------------------------------------------------------------------
// bisect_relation: H_k(x/2) + H_k((x-1)/2) = 2 H_{2k}(x) as an entry
// ---------------------------------------------------------------------------

pub fn bisect_lhs(k: u64, x: &Rational) -> Result<Rational, CoreError> {
    let two = Rational::from_integer(2);
    let half_x = x.try_div(&two)?;
    let half_xm1 = (x - &Rational::one()).try_div(&two)?;
    Ok(&harmonic(k, 1, &half_x)? + &harmonic(k, 1, &half_xm1)?)
}

pub fn bisect_rhs(k: u64, x: &Rational) -> Result<Rational, CoreError> {
    Ok(&Rational::from_integer(2) * &harmonic(2 * k, 1, x)?)
}

pub fn bisect_guard(k: u64, x: &Rational) -> bool {
    !int_in(x, -2 * k as i64, -1)
}

// ---------------------------------------------------------------------------
// reversal symmetry: the re-indexing k -> 2n-k leaves the weighted sum fixed
// ---------------------------------------------------------------------------

/// Checks that sum (-1)^k binom(2n,k) W_k H_k(x) equals the same sum with
/// H_{2n-k}(x), where W_k = binom(x+k,k) binom(y+k,k) / [binom(x+2n,k) binom(y+2n,k)].
pub fn reversal_symmetry_check(n: u64, x: &Rational, y: &Rational) -> Result<bool, CoreError> {
    let kk = 2 * n;
    let c = binom_row(&Rational::from_integer(kk as i64), kk);
    let bx = binom_shift_prefix(x, kk);
    let by = binom_shift_prefix(y, kk);
    let rx = binom_row(&(x + &Rational::from_integer(kk as i64)), kk);
    let ry = binom_row(&(y + &Rational::from_integer(kk as i64)), kk);
    let h = hp(kk, x)?;
    let mut forward = Rational::zero();
    let mut reversed = Rational::zero();
    for k in 0..=kk {
        let i = k as usize;
        let w = (&(&c[i] * &bx[i]) * &by[i]).try_div(&(&rx[i] * &ry[i]))?;
        forward = signed_add(&forward, &(&w * &h[i]), k);
        reversed = signed_add(&reversed, &(&w * &h[(kk - k) as usize]), k);
    }
    Ok(forward == reversed)
}

pub fn reversal_guard(n: u64, x: &Rational, y: &Rational) -> bool {
    eq_a_guard(n, x, y) && !int_in(x, -2 * n as i64, -1)
}
