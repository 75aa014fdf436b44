use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::rational::{binomial, factorial, Rational};
use crate::error::{Error, Result};

fn table() -> &'static Mutex<Vec<Rational>> {
    static TABLE: OnceLock<Mutex<Vec<Rational>>> = OnceLock::new();
    TABLE.get_or_init(|| Mutex::new(vec![Rational::one()]))
}

/// `B_m` with `B₁ = −1/2`, from `Σ_{k=0}^{m} C(m+1,k) B_k = 0`.
///
/// Values are memoized process-wide up to the largest index requested.
pub fn bernoulli_number(m: usize) -> Rational {
    let mut t = table().lock().expect("bernoulli table poisoned");
    while t.len() <= m {
        let n = t.len();
        let b = if n > 1 && n % 2 == 1 {
            Rational::zero()
        } else {
            let s = t.iter().enumerate().fold(Rational::zero(), |acc, (k, bk)| {
                acc + bk * Rational::from(binomial(n as u32 + 1, k as u32))
            });
            -s / Rational::from(BigInt::from(n + 1))
        };
        t.push(b);
    }
    t[m].clone()
}

/// Coefficients of `B_n(x) = Σ_k C(n,k) B_k x^{n−k}`, lowest degree first.
pub fn bernoulli_polynomial(n: usize) -> Vec<Rational> {
    (0..=n)
        .map(|deg| {
            let k = n - deg;
            bernoulli_number(k) * Rational::from(binomial(n as u32, k as u32))
        })
        .collect()
}

/// The rational `q` with `ζ(2n) = q·π^{2n}`.
pub fn zeta_even_pi_coeff(n: u32) -> Result<Rational> {
    if n == 0 {
        return Err(Error::invalid("ζ(0) is not an even zeta value of interest (n must be ≥ 1)"));
    }
    let two_n = 2 * n;
    let b = bernoulli_number(two_n as usize);
    let sign = if n % 2 == 1 { 1 } else { -1 };
    let num = b * Rational::from(BigInt::from(sign) * (BigInt::one() << two_n));
    Ok(num / Rational::from(BigInt::from(2) * factorial(two_n)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn small_values() {
        assert_eq!(bernoulli_number(0), rat(1, 1));
        assert_eq!(bernoulli_number(1), rat(-1, 2));
        assert_eq!(bernoulli_number(2), rat(1, 6));
        assert_eq!(bernoulli_number(3), rat(0, 1));
        assert_eq!(bernoulli_number(4), rat(-1, 30));
        assert_eq!(bernoulli_number(12), rat(-691, 2730));
    }

    #[test]
    fn recurrence_residual_vanishes() {
        for m in 1..=60usize {
            let res = (0..=m).fold(Rational::zero(), |acc, k| {
                acc + bernoulli_number(k) * Rational::from(binomial(m as u32 + 1, k as u32))
            });
            assert!(res.is_zero(), "residual at m={m}");
        }
    }

    #[test]
    fn polynomial_matches_known() {
        // B_2(x) = x² − x + 1/6
        assert_eq!(bernoulli_polynomial(2), vec![rat(1, 6), rat(-1, 1), rat(1, 1)]);
    }

    #[test]
    fn even_zeta_coefficients() {
        assert_eq!(zeta_even_pi_coeff(1).unwrap(), rat(1, 6));
        assert_eq!(zeta_even_pi_coeff(2).unwrap(), rat(1, 90));
        assert_eq!(zeta_even_pi_coeff(3).unwrap(), rat(1, 945));
        assert_eq!(zeta_even_pi_coeff(4).unwrap(), rat(1, 9450));
        assert!(zeta_even_pi_coeff(0).is_err());
    }

    #[test]
    fn concurrent_access_is_consistent() {
        let handles: Vec<_> = (0..4)
            .map(|i| std::thread::spawn(move || bernoulli_number(40 + 2 * i)))
            .collect();
        let got: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        for (i, b) in got.iter().enumerate() {
            assert_eq!(b, &bernoulli_number(40 + 2 * i));
        }
    }
}
