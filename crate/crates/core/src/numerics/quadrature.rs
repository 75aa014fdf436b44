//! Tanh-sinh quadrature on `(0,1)`.
//!
//! `t = 1/(1 + e^{−2u})`, `u = (π/2) sinh s`. For `u ≥ 0` put `e = e^{−2u}`;
//! then `log t = −log1p(e)` and `log(1−t) = −2u − log1p(e)`, so both
//! endpoint logarithms are formed without cancellation (mirror for `u < 0`).
//! `dt = 2t(1−t) du` and `du = (π/2) cosh s ds`.

use super::bigfloat::{BigFloat, Precision};
use crate::error::{Error, Result};
use crate::exact::factorial;

pub const MAX_LEVEL: u32 = 12;

/// Abscissa data handed to an integrand.
struct Node {
    log_t: BigFloat,
    log_1mt: BigFloat,
    t: BigFloat,
    one_minus_t: BigFloat,
    /// `2 du/ds`
    two_du_ds: BigFloat,
}

/// Node at `s = k / 2^level`.
fn node(k: i64, level: u32, half_pi: &BigFloat, p: &Precision) -> Node {
    let sb = BigFloat::from_i64(k, p) / BigFloat::from_i64(1i64 << level, p);
    let u = half_pi * &sb.sinh();
    let du_ds = half_pi * &sb.cosh();
    let neg = u.is_negative();
    let au = u.abs();
    let two_u = &au * &BigFloat::from_i64(2, p);
    let e = (-&two_u).exp();
    let l1p = e.ln_1p();
    let one_plus_e = BigFloat::one(p) + &e;
    let small = &e / &one_plus_e; // the endpoint-side of t / 1−t
    let large = one_plus_e.recip();
    let (log_small, log_large) = (-(&two_u + &l1p), -l1p);
    let two_du_ds = du_ds * BigFloat::from_i64(2, p);
    if neg {
        Node { log_t: log_small, log_1mt: log_large, t: small, one_minus_t: large, two_du_ds }
    } else {
        Node { log_t: log_large, log_1mt: log_small, t: large, one_minus_t: small, two_du_ds }
    }
}

/// Integrates over `(0,1)`; `f` returns the integrand times `dt/ds`.
fn tanh_sinh(p: &Precision, f: impl Fn(&Node) -> BigFloat) -> Result<BigFloat> {
    let wd = p.working_digits() as f64;
    // beyond u_max every node weight is below 10^-(P+G+10)
    let u_max = (wd + 10.0) * std::f64::consts::LN_10 / 2.0 + 5.0;
    let s_max = (2.0 * u_max / std::f64::consts::PI).asinh();
    let half_pi = &BigFloat::pi(p) / &BigFloat::from_i64(2, p);

    let eval = |k: i64, level: u32| f(&node(k, level, &half_pi, p));
    let n0 = s_max.ceil() as i64;
    let mut raw = eval(0, 0);
    for k in 1..=n0 {
        raw = raw + eval(k, 0) + eval(-k, 0);
    }
    let mut prev = raw.clone();
    for level in 1..=MAX_LEVEL {
        let n = (s_max * (1i64 << level) as f64).ceil() as i64;
        for k in (1..=n).step_by(2) {
            raw = raw + eval(k, level) + eval(-k, level);
        }
        let est = &raw / &BigFloat::from_i64(1i64 << level, p);
        if (&est - &prev).below_pow10(p.digits as i64 + 2) && level >= 3 {
            return Ok(est);
        }
        prev = est;
    }
    Err(Error::NonConvergence { digits: p.digits, max_level: MAX_LEVEL })
}

fn pow_log(x: &BigFloat, k: u32, p: &Precision) -> BigFloat {
    if k == 0 {
        BigFloat::one(p)
    } else {
        x.powi(k)
    }
}

/// Raw `lz(a,b) = ∫₀¹ log^a t · log^b(1−t) dt`.
pub fn lz_raw_quadrature(a: u32, b: u32, p: &Precision) -> Result<BigFloat> {
    tanh_sinh(p, |n| {
        let w = &n.t * &n.one_minus_t * &n.two_du_ds;
        pow_log(&n.log_t, a, p) * pow_log(&n.log_1mt, b, p) * w
    })
}

/// `Lz(a,b) = 1/((a−1)! b!) ∫₀¹ log^{a−1} t · log^b(1−t) / t dt`.
pub fn lz_quadrature(a: u32, b: u32, p: &Precision) -> Result<BigFloat> {
    if a < 1 || b < 1 {
        return Err(Error::invalid(format!("Lz({a},{b}) needs a, b ≥ 1")));
    }
    let norm = BigFloat::from_bigint(&(factorial(a - 1) * factorial(b)), p);
    let v = tanh_sinh(p, |n| {
        let w = &n.one_minus_t * &n.two_du_ds;
        pow_log(&n.log_t, a - 1, p) * pow_log(&n.log_1mt, b, p) * w
    })?;
    Ok(v / norm)
}
