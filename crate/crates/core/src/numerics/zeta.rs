use super::bigfloat::{BigFloat, Precision};
use crate::error::{Error, Result};
use crate::exact::{bernoulli_number, factorial, Rational};

/// `ζ(s)` for integer `s ≥ 2` by Euler–Maclaurin summation.
///
/// With `N` head terms,
/// `ζ(s) = Σ_{k<N} k^{-s} + N^{1-s}/(s-1) + N^{-s}/2 + Σ_j B_{2j}/(2j)! (s)_{2j-1} N^{1-s-2j} + R`,
/// and for real `s > 1` the remainder is bounded by the first omitted
/// correction term, which is where the sum is stopped.
pub fn zeta_value(s: u32, p: &Precision) -> Result<BigFloat> {
    if s < 2 {
        return Err(Error::invalid(format!("zeta_value needs s ≥ 2, got {s}")));
    }
    let wd = p.working_digits() as i64;
    let n = (p.working_digits() / 2).max(10) as i64 + s as i64 / 2;

    let mut sum = BigFloat::zero(p);
    for k in 1..n {
        sum = sum + BigFloat::from_i64(k, p).powi(s).recip();
    }
    let big_n = BigFloat::from_i64(n, p);
    let n_pow = big_n.powi(s); // N^s
    let inv_n2 = (&big_n * &big_n).recip();
    sum = sum + &big_n / &(&n_pow * &BigFloat::from_i64(s as i64 - 1, p));
    sum = sum + (&n_pow * &BigFloat::from_i64(2, p)).recip();

    // term_j = B_{2j}/(2j)! · (s)_{2j−1} · N^{1−s−2j}
    let mut pochhammer = BigFloat::from_i64(s as i64, p); // (s)_1
    let mut npow = &big_n / &n_pow * &inv_n2; // N^{1−s−2}
    for j in 1..=(4 * wd as u32 + 40) {
        let coeff = Rational::new(
            bernoulli_number(2 * j as usize).numer().clone(),
            bernoulli_number(2 * j as usize).denom() * factorial(2 * j),
        );
        let term = BigFloat::from_rational(&coeff, p) * &pochhammer * &npow;
        if term.below_pow10(wd) {
            return Ok(sum);
        }
        sum = sum + term;
        let a = BigFloat::from_i64((s + 2 * j - 1) as i64, p);
        let b = BigFloat::from_i64((s + 2 * j) as i64, p);
        pochhammer = pochhammer * a * b;
        npow = npow * &inv_n2;
    }
    Err(Error::PrecisionUnreachable { digits: p.digits, budget: (4 * wd + 40) as usize })
}
