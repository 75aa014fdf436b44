//! Expansion of `Lz(a,b)` as an exact combination of zeta monomials.
//!
//! With `N = a + b`,
//!
//! ```text
//! Lz(a,b) = Σ_{X ∈ P₂(N), ‖X‖ ≤ min(b, N−b)} c_b(X) · ∏_{(n,k) ∈ Supp(X)} ζ(n)^k
//! ```
//!
//! and [`reduce_even`] then folds every `ζ(2n)` into `q·π^{2n}`.
//!
//! Note: the closed form sometimes quoted for `Lz(2n−2, 2)`, namely
//! `(n−½)ζ(2n) − Σ ζ(j)ζ(2n−j)`, is wrong; e.g. it gives `Lz(2,2) = −ζ(4)`
//! while the true value (confirmed by quadrature) is `−¼ζ(4)`. The odd
//! companion `Lz(2n−1, 2) = nζ(2n+1) − Σ ζ(j)ζ(2n+1−j)` is correct.

mod combination;
mod monomial;

use std::collections::BTreeMap;

use num_traits::{One, Zero};

pub(crate) use combination::{join_latex, join_text};
pub use combination::{PiReducedCombination, ZetaCombination};
pub use monomial::ZetaMonomial;

use crate::coefficients::little_c;
use crate::exact::{zeta_even_pi_coeff, Rational};
use crate::partitions::{enumerate_partitions, PartitionElement, PartitionFilter};

fn expand_from(p2: &[PartitionElement], a: u32, b: u32) -> ZetaCombination {
    let n = a + b;
    let bound = a.min(b);
    let mut out = ZetaCombination::new(n);
    for x in p2.iter().filter(|x| x.norm() <= bound) {
        let c = little_c(x, b);
        if !c.is_zero() {
            out.add_term(ZetaMonomial::from_partition(x), c);
        }
    }
    out
}

/// `Lz(a,b)` as a ℚ-combination of weight-`(a+b)` zeta monomials.
pub fn expand_lz(a: u32, b: u32) -> ZetaCombination {
    assert!(a >= 1 && b >= 1, "Lz(a,b) needs a, b ≥ 1");
    let p2 = enumerate_partitions(a + b, &PartitionFilter::new(2));
    expand_from(&p2, a, b)
}

/// Every `Lz(a,b)` with `a + b = n`, `a ≥ b ≥ 1`, keyed by `(a, b)`.
pub fn expand_weight(n: u32) -> BTreeMap<(u32, u32), ZetaCombination> {
    assert!(n >= 2, "weight must be ≥ 2");
    let p2 = enumerate_partitions(n, &PartitionFilter::new(2));
    (1..=n / 2).map(|b| ((n - b, b), expand_from(&p2, n - b, b))).collect()
}

/// Replaces every `ζ(2n)^k` by `(q_n π^{2n})^k` and merges like terms.
pub fn reduce_even(c: &ZetaCombination) -> PiReducedCombination {
    let mut out = PiReducedCombination::new(c.weight());
    for (m, coeff) in c.terms() {
        let (even, odd) = m.split_even();
        let factor = even.iter().fold(Rational::one(), |acc, &(n, k)| {
            let q = zeta_even_pi_coeff(n / 2).expect("even argument ≥ 2");
            acc * num_traits::pow(q, k as usize)
        });
        out.add_term(odd, coeff * factor).expect("odd part of a homogeneous term");
    }
    out
}

/// `Lz(a,b)=<expansion>` in the LaTeX layout used by [`expand_lz`] tables.
pub fn latex_line(a: u32, b: u32, body: &str) -> String {
    format!("Lz({a},{b})={body}")
}
