//! `Lz(a,b) = (−1)^{a+b−1}/b! · Σ_{n≥b} S_n^{(b)}/n^a`.
//!
//! Write `u_n(x) = (x)_n / n! = Σ_j u_n^{(j)} x^j`, so that
//! `u_n^{(b)} = S_n^{(b)}/b!` and `u_{n+1}(x) = u_n(x)(x+n)/(n+1)`.
//! The first `K` terms are summed directly. For the tail, Stirling's
//! series gives, for `n ≥ K`,
//!
//! ```text
//! u_n(x) = u_K(x) · (n/K)^{x−1} · exp(D(x,1/n) − D(x,1/K)),
//! D(x,w) = Σ_{j≥1} (−1)^{j+1} (B_{j+1}(x) − B_{j+1}(1)) / (j(j+1)) · w^j,
//! ```
//!
//! so with `exp(D(x,w)) = Σ_k C_k(x) w^k` the tail is
//!
//! ```text
//! Σ_{n>K} u_n(x)/n^a = u_K(x) K^{1−x} e^{−D(x,1/K)} Σ_k C_k(x) ζ(a+1+k−x, K+1)
//! ```
//!
//! and each Hurwitz tail is expanded by Euler–Maclaurin. Everything is a
//! power series in `x` truncated at degree `b`; the answer is the `x^b`
//! coefficient. The `K^{−x}` factors cancel exactly, so no `log K` terms
//! appear. The tail terms decay like `K^{−k}`, and summation stops once a
//! term drops below `10^{−(P+G)}`; if that does not happen within the
//! configured budget the evaluation fails instead of returning a guess.

use std::cmp::Ordering;

use num_traits::{One, Zero};

use super::bigfloat::{BigFloat, Precision};
use crate::error::{Error, Result};
use crate::exact::{bernoulli_number, bernoulli_polynomial, factorial, Rational};

/// Knobs for the tail-corrected series.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeriesConfig {
    /// Directly summed terms `K`; default `max(48, P + G)`.
    pub head_terms: Option<usize>,
    /// Maximum number of terms in each asymptotic expansion of the tail.
    pub tail_budget: usize,
}

impl Default for SeriesConfig {
    fn default() -> Self {
        SeriesConfig { head_terms: None, tail_budget: 400 }
    }
}

/// Truncated power series in `x`, lowest degree first, fixed length.
type Ser = Vec<BigFloat>;

fn ser_zero(len: usize, p: &Precision) -> Ser {
    vec![BigFloat::zero(p); len]
}

fn ser_mul(a: &Ser, b: &Ser) -> Ser {
    let len = a.len();
    let mut out: Ser = a.iter().map(|x| x * &b[0]).collect();
    for i in 0..len {
        if a[i].is_zero() {
            continue;
        }
        for j in 1..len - i {
            out[i + j] = &out[i + j] + &(&a[i] * &b[j]);
        }
    }
    out
}

fn ser_add_scaled(acc: &mut Ser, a: &Ser, s: &BigFloat) {
    for (x, y) in acc.iter_mut().zip(a) {
        *x = &*x + &(y * s);
    }
}

/// `exp(f)` for `f(0) = 0`: `n g_n = Σ_k k f_k g_{n−k}`.
fn ser_exp(f: &Ser, p: &Precision) -> Ser {
    debug_assert!(f[0].is_zero());
    let mut g = ser_zero(f.len(), p);
    g[0] = BigFloat::one(p);
    for n in 1..f.len() {
        let mut acc = BigFloat::zero(p);
        for k in 1..=n {
            acc = acc + &f[k] * &g[n - k] * BigFloat::from_i64(k as i64, p);
        }
        g[n] = acc / BigFloat::from_i64(n as i64, p);
    }
    g
}

fn ser_small(s: &Ser, digits: i64) -> bool {
    s.iter().all(|c| c.below_pow10(digits))
}

/// Coefficients of `d_j(x)`, truncated to `len` terms.
fn stirling_poly(j: usize, len: usize, p: &Precision) -> Ser {
    let bp = bernoulli_polynomial(j + 1);
    let at_one: Rational = bp.iter().sum();
    let sign = if j % 2 == 1 { Rational::one() } else { -Rational::one() };
    let scale = sign / Rational::from_integer(((j * (j + 1)) as i64).into());
    (0..len)
        .map(|deg| {
            let mut c = bp.get(deg).cloned().unwrap_or_else(Rational::zero);
            if deg == 0 {
                c -= &at_one;
            }
            BigFloat::from_rational(&(c * &scale), p)
        })
        .collect()
}

/// `Σ_{n>K} n^{−(s−x)} · K^{1−x}` as a series in `x`.
fn hurwitz_tail(s: u32, k_head: usize, len: usize, p: &Precision, cfg: &SeriesConfig) -> Result<Ser> {
    let wd = p.working_digits() as i64;
    let kf = BigFloat::from_i64(k_head as i64, p);
    let kinv2 = (&kf * &kf).recip();
    // K^{1−s}
    let lead = kf.powi(s - 1).recip();

    // K/(s−1−x) − 1/2
    let sm1 = BigFloat::from_i64(s as i64 - 1, p);
    let mut bracket = ser_zero(len, p);
    let mut geo = &kf / &sm1;
    for c in bracket.iter_mut() {
        *c = geo.clone();
        geo = &geo / &sm1;
    }
    bracket[0] = &bracket[0] - &BigFloat::from_rational(&Rational::new(1.into(), 2.into()), p);

    // Σ_m B_{2m}/(2m)! · (s−x)_{2m−1} · K^{1−2m}
    let mut poch = ser_zero(len, p); // (s−x)_1 = s − x
    poch[0] = BigFloat::from_i64(s as i64, p);
    if len > 1 {
        poch[1] = -BigFloat::one(p);
    }
    let mut kpow = kf.recip(); // K^{1−2m} at m = 1
    for m in 1..=cfg.tail_budget {
        let bm = bernoulli_number(2 * m);
        let coeff = BigFloat::from_rational(&(bm / Rational::from_integer(factorial(2 * m as u32))), p);
        let scale = &coeff * &kpow;
        let mut term = ser_zero(len, p);
        ser_add_scaled(&mut term, &poch, &scale);
        if ser_small(&term, wd + 5) {
            return Ok(bracket.iter().map(|c| c * &lead).collect());
        }
        ser_add_scaled(&mut bracket, &term, &BigFloat::one(p));
        for i in [2 * m - 1, 2 * m] {
            let mut lin = ser_zero(len, p);
            lin[0] = BigFloat::from_i64((s as usize + i) as i64, p);
            if len > 1 {
                lin[1] = -BigFloat::one(p);
            }
            poch = ser_mul(&poch, &lin);
        }
        kpow = kpow * &kinv2;
    }
    Err(Error::PrecisionUnreachable { digits: p.digits, budget: cfg.tail_budget })
}

/// Running coefficients `u_n^{(j)}`, `0 ≤ j ≤ order`, starting at `n = 1`.
struct Pochhammer {
    n: usize,
    coeffs: Ser,
}

impl Pochhammer {
    fn new(order: usize, p: &Precision) -> Self {
        let mut coeffs = ser_zero(order + 1, p);
        if order >= 1 {
            coeffs[1] = BigFloat::one(p);
        }
        Pochhammer { n: 1, coeffs }
    }

    /// `u_{n+1}^{(k)} = (n u_n^{(k)} + u_n^{(k−1)}) / (n+1)`
    fn advance(&mut self, p: &Precision) {
        let n = BigFloat::from_i64(self.n as i64, p);
        let n1 = BigFloat::from_i64(self.n as i64 + 1, p);
        for k in (0..self.coeffs.len()).rev() {
            let mut v = &self.coeffs[k] * &n;
            if k > 0 {
                v = v + &self.coeffs[k - 1];
            }
            self.coeffs[k] = v / &n1;
        }
        self.n += 1;
    }
}

/// `Σ_{n=order}^{n_max} u_n^{(order)} / n^exponent`, no tail correction.
pub fn series_partial_sum(exponent: u32, order: u32, n_max: usize, p: &Precision) -> BigFloat {
    assert!(order >= 1, "order must be ≥ 1");
    let mut u = Pochhammer::new(order as usize, p);
    let mut sum = BigFloat::zero(p);
    for n in 1..=n_max {
        if n > 1 {
            u.advance(p);
        }
        if n >= order as usize {
            sum = sum + &u.coeffs[order as usize] / &BigFloat::from_i64(n as i64, p).powi(exponent);
        }
    }
    sum
}

/// `Σ_{n≥order} u_n^{(order)} / n^exponent = (1/order!) Σ_n S_n^{(order)} / n^exponent`,
/// head plus asymptotic tail, with no symmetry swap.
pub fn series_sum(exponent: u32, order: u32, p: &Precision, cfg: &SeriesConfig) -> Result<BigFloat> {
    if exponent < 1 || order < 1 {
        return Err(Error::invalid(format!("series needs exponent, order ≥ 1, got ({exponent}, {order})")));
    }
    let wd = p.working_digits() as i64;
    let len = order as usize + 1;
    let k_head = cfg
        .head_terms
        .unwrap_or_else(|| (p.working_digits() as usize).max(48))
        .max(order as usize + 2);

    // head
    let mut u = Pochhammer::new(order as usize, p);
    let mut head = BigFloat::zero(p);
    for n in 1..=k_head {
        if n > 1 {
            u.advance(p);
        }
        if n >= order as usize {
            head = head + &u.coeffs[order as usize] / &BigFloat::from_i64(n as i64, p).powi(exponent);
        }
    }

    // exp(−D(x, 1/K)) and the d_j for the C_k recurrence
    let kf = BigFloat::from_i64(k_head as i64, p);
    let mut d: Vec<Ser> = vec![ser_zero(len, p)]; // d_0 unused
    let mut minus_d = ser_zero(len, p);
    let mut wpow = kf.recip();
    let mut converged = false;
    for j in 1..=cfg.tail_budget {
        let dj = stirling_poly(j, len, p);
        let mut term = ser_zero(len, p);
        ser_add_scaled(&mut term, &dj, &wpow);
        d.push(dj);
        if ser_small(&term, wd + 5) {
            converged = true;
            break;
        }
        ser_add_scaled(&mut minus_d, &term, &-BigFloat::one(p));
        wpow = &wpow / &kf;
    }
    if !converged {
        return Err(Error::PrecisionUnreachable { digits: p.digits, budget: cfg.tail_budget });
    }
    let prefactor = ser_mul(&u.coeffs, &ser_exp(&minus_d, p));

    // Σ_k C_k(x) · W_k(x)
    let mut c: Vec<Ser> = vec![{
        let mut one = ser_zero(len, p);
        one[0] = BigFloat::one(p);
        one
    }];
    let mut tail = ser_zero(len, p);
    let mut quiet = 0;
    for k in 0..=cfg.tail_budget {
        if k > 0 {
            let mut ck = ser_zero(len, p);
            for j in 1..=k.min(d.len() - 1) {
                let prod = ser_mul(&d[j], &c[k - j]);
                ser_add_scaled(&mut ck, &prod, &BigFloat::from_i64(j as i64, p));
            }
            let inv_k = BigFloat::from_i64(k as i64, p).recip();
            ck.iter_mut().for_each(|v| *v = &*v * &inv_k);
            c.push(ck);
        }
        let w = hurwitz_tail(exponent + 1 + k as u32, k_head, len, p, cfg)?;
        let term = ser_mul(&ser_mul(&c[k], &w), &prefactor);
        let small = term[order as usize].below_pow10(wd + 2) && ser_small(&term, wd - 10);
        ser_add_scaled(&mut tail, &term, &BigFloat::one(p));
        quiet = if small { quiet + 1 } else { 0 };
        if quiet >= 2 {
            return Ok(head + &tail[order as usize]);
        }
    }
    Err(Error::PrecisionUnreachable { digits: p.digits, budget: cfg.tail_budget })
}

/// `Lz(a,b)` from the series, evaluated with `max(a,b)` as the exponent.
pub fn lz_series(a: u32, b: u32, p: &Precision) -> Result<BigFloat> {
    lz_series_with(a, b, p, &SeriesConfig::default())
}

pub fn lz_series_with(a: u32, b: u32, p: &Precision, cfg: &SeriesConfig) -> Result<BigFloat> {
    if a < 1 || b < 1 {
        return Err(Error::invalid(format!("Lz({a},{b}) needs a, b ≥ 1")));
    }
    let (exponent, order) = match a.cmp(&b) {
        Ordering::Less => (b, a),
        _ => (a, b),
    };
    let s = series_sum(exponent, order, p, cfg)?;
    Ok(if (a + b).is_multiple_of(2) { -s } else { s })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::zeta::zeta_value;

    #[test]
    fn order_one_is_zeta() {
        let p = Precision::new(40);
        for a in 1..=6u32 {
            let s = series_sum(a, 1, &p, &SeriesConfig::default()).unwrap();
            let z = zeta_value(a + 1, &p).unwrap();
            assert!((s - z).below_pow10(40), "a={a}");
        }
    }

    #[test]
    fn apery_and_swap() {
        let p = Precision::new(30);
        let z3 = zeta_value(3, &p).unwrap();
        let v = lz_series(2, 1, &p).unwrap();
        assert!((&v - &z3).below_pow10(30));
        let w = lz_series(1, 2, &p).unwrap();
        assert_eq!(v.to_decimal(40), w.to_decimal(40));
    }

    #[test]
    fn budget_is_reported() {
        let p = Precision::new(50);
        let cfg = SeriesConfig { head_terms: Some(4), tail_budget: 3 };
        match lz_series_with(3, 3, &p, &cfg) {
            Err(Error::PrecisionUnreachable { digits: 50, budget: 3 }) => {}
            other => panic!("expected budget failure, got {other:?}"),
        }
    }

    #[test]
    fn partial_sums_approach_limit() {
        let p = Precision::new(20);
        let full = series_sum(3, 2, &p, &SeriesConfig::default()).unwrap();
        let part = series_partial_sum(3, 2, 2000, &p);
        let gap = (&full - &part).to_f64();
        assert!(gap > 0.0 && gap < 1e-5, "{gap}");
    }
}
