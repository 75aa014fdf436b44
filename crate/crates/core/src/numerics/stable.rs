use num_traits::Zero;

use super::bigfloat::{BigFloat, Precision};
use crate::exact::Rational;

/// `S_n^{(k)}`: sum over compositions of `n` into `k` positive parts of
/// `∏ 1/m_j`, for `1 ≤ k ≤ b_max`, `0 ≤ n ≤ n_max`.
///
/// Built by `S_n^{(1)} = 1/n`, `S_n^{(k)} = Σ_m S_{n-m}^{(k-1)}/m`.
#[derive(Clone, Debug)]
pub struct STable<T> {
    b_max: usize,
    n_max: usize,
    rows: Vec<Vec<T>>,
}

impl<T: Clone> STable<T> {
    pub fn b_max(&self) -> usize {
        self.b_max
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    /// `S_n^{(k)}`; panics outside the built range.
    pub fn get(&self, k: usize, n: usize) -> &T {
        assert!((1..=self.b_max).contains(&k) && n <= self.n_max, "S[{k}][{n}] outside table");
        &self.rows[k - 1][n]
    }
}

fn build<T: Clone>(
    b_max: usize,
    n_max: usize,
    zero: T,
    inv: impl Fn(usize) -> T,
    mul_add: impl Fn(&T, &T, &T) -> T,
) -> STable<T> {
    assert!(b_max >= 1, "b_max must be ≥ 1");
    let inverses: Vec<T> = (0..=n_max).map(|m| if m == 0 { zero.clone() } else { inv(m) }).collect();
    let mut rows = vec![inverses.clone()];
    for k in 2..=b_max {
        let prev = &rows[k - 2];
        let mut row = vec![zero.clone(); n_max + 1];
        for n in k..=n_max {
            let mut acc = zero.clone();
            for m in 1..=n - (k - 1) {
                acc = mul_add(&acc, &inverses[m], &prev[n - m]);
            }
            row[n] = acc;
        }
        rows.push(row);
    }
    STable { b_max, n_max, rows }
}

/// Floating table at precision `p`.
pub fn build_s_table(b_max: usize, n_max: usize, p: &Precision) -> STable<BigFloat> {
    let one = BigFloat::one(p);
    build(
        b_max,
        n_max,
        BigFloat::zero(p),
        |m| &one / &BigFloat::from_i64(m as i64, p),
        |acc, x, y| acc + &(x * y),
    )
}

/// Exact rational table.
pub fn build_exact_s_table(b_max: usize, n_max: usize) -> STable<Rational> {
    build(
        b_max,
        n_max,
        Rational::zero(),
        |m| Rational::new(1.into(), (m as i64).into()),
        |acc, x, y| acc + x * y,
    )
}
