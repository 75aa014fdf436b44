//! Closed forms for every `Lz(a,b)` with `3 ≤ a+b ≤ 9` listed in the
//! worked tables, plus helpers shared by the integration tests.

#![allow(dead_code)]

use std::collections::BTreeMap;

use lz_core::exact::{binomial, parse_rational};
use lz_core::partitions::PartitionElement;
use lz_core::{PiReducedCombination, ZetaCombination, ZetaMonomial};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// A listed identity. `zeta` is the form with even zeta values kept, when
/// one is printed; `reduced` is the π-reduced form `(coeff, π power,
/// odd monomial or "1")`, when one is printed.
pub struct Golden {
    pub a: u32,
    pub b: u32,
    pub zeta: &'static [(&'static str, &'static str)],
    pub reduced: &'static [(&'static str, u32, &'static str)],
}

pub const GOLDENS: &[Golden] = &[
    Golden { a: 1, b: 2, zeta: &[("1", "z3")], reduced: &[] },
    Golden { a: 2, b: 1, zeta: &[("1", "z3")], reduced: &[] },
    Golden { a: 3, b: 1, zeta: &[("-1", "z4")], reduced: &[] },
    Golden { a: 2, b: 2, zeta: &[("-1/4", "z4")], reduced: &[] },
    Golden { a: 1, b: 3, zeta: &[("-1", "z4")], reduced: &[] },
    Golden { a: 4, b: 1, zeta: &[("1", "z5")], reduced: &[] },
    Golden { a: 3, b: 2, zeta: &[("2", "z5"), ("-1", "z2*z3")], reduced: &[] },
    Golden { a: 5, b: 1, zeta: &[("-1", "z6")], reduced: &[] },
    Golden {
        a: 4,
        b: 2,
        zeta: &[("1/2", "z3^2"), ("1", "z2*z4"), ("-5/2", "z6")],
        reduced: &[("1/2", 0, "z3^2"), ("-1/1260", 6, "1")],
    },
    Golden {
        a: 3,
        b: 3,
        zeta: &[("1", "z3^2"), ("3/2", "z2*z4"), ("-10/3", "z6"), ("-1/6", "z2^3")],
        reduced: &[("1", 0, "z3^2"), ("-23/15120", 6, "1")],
    },
    Golden { a: 6, b: 1, zeta: &[("1", "z7")], reduced: &[] },
    Golden { a: 5, b: 2, zeta: &[("3", "z7"), ("-1", "z2*z5"), ("-1", "z3*z4")], reduced: &[] },
    Golden { a: 4, b: 3, zeta: &[("5", "z7"), ("-2", "z2*z5"), ("-5/4", "z3*z4")], reduced: &[] },
    Golden { a: 7, b: 1, zeta: &[("-1", "z8")], reduced: &[] },
    Golden { a: 6, b: 2, zeta: &[], reduced: &[("1", 0, "z3*z5"), ("-1/7560", 8, "1")] },
    Golden {
        a: 5,
        b: 3,
        zeta: &[],
        reduced: &[("3", 0, "z3*z5"), ("-1/12", 2, "z3^2"), ("-61/226800", 8, "1")],
    },
    Golden {
        a: 4,
        b: 4,
        zeta: &[],
        reduced: &[("4", 0, "z3*z5"), ("-1/6", 2, "z3^2"), ("-499/1814400", 8, "1")],
    },
    Golden { a: 8, b: 1, zeta: &[("1", "z9")], reduced: &[] },
    Golden {
        a: 7,
        b: 2,
        zeta: &[("4", "z9"), ("-1", "z2*z7"), ("-1", "z4*z5"), ("-1", "z3*z6")],
        reduced: &[],
    },
    Golden {
        a: 6,
        b: 3,
        zeta: &[
            ("28/3", "z9"),
            ("-3", "z2*z7"),
            ("-7/2", "z4*z5"),
            ("-7/2", "z3*z6"),
            ("1", "z2*z3*z4"),
            ("1/2", "z2^2*z5"),
            ("1/6", "z3^3"),
        ],
        reduced: &[
            ("1/6", 0, "z3^3"),
            ("28/3", 0, "z9"),
            ("-1/540", 6, "z3"),
            ("-1/40", 4, "z5"),
            ("-1/2", 2, "z7"),
        ],
    },
    Golden {
        a: 5,
        b: 4,
        zeta: &[
            ("14", "z9"),
            ("-5", "z2*z7"),
            ("-6", "z4*z5"),
            ("-35/6", "z3*z6"),
            ("5/2", "z2*z3*z4"),
            ("1", "z2^2*z5"),
            ("1/2", "z3^3"),
            ("-1/6", "z2^3*z3"),
        ],
        reduced: &[
            ("1/2", 0, "z3^3"),
            ("14", 0, "z9"),
            ("-1/432", 6, "z3"),
            ("-7/180", 4, "z5"),
            ("-5/6", 2, "z7"),
        ],
    },
];

pub fn mono(s: &str) -> ZetaMonomial {
    if s == "1" {
        ZetaMonomial::unit()
    } else {
        s.parse().expect("monomial literal")
    }
}

pub fn zeta_form(weight: u32, terms: &[(&str, &str)]) -> ZetaCombination {
    let mut c = ZetaCombination::new(weight);
    for (q, m) in terms {
        c.add_term(mono(m), parse_rational(q).unwrap());
    }
    c
}

pub fn reduced_form(weight: u32, terms: &[(&str, u32, &str)]) -> PiReducedCombination {
    let mut c = PiReducedCombination::new(weight);
    for (q, pi, m) in terms {
        let m = mono(m);
        assert_eq!(m.weight() + pi, weight, "inconsistent literal {m}");
        c.add_term(m, parse_rational(q).unwrap()).unwrap();
    }
    c
}

/// Unrestricted partition counts `p(0..=n)` by Euler's pentagonal recurrence.
pub fn partition_numbers(n: usize) -> Vec<u128> {
    let mut p = vec![0u128; n + 1];
    p[0] = 1;
    for m in 1..=n {
        let mut acc: i128 = 0;
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > m {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc += sign * p[m - g1] as i128;
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= m {
                acc += sign * p[m - g2] as i128;
            }
        }
        p[m] = acc as u128;
    }
    p
}

/// Homogeneous bivariate polynomial, `y`-degree → coefficient.
pub type Poly = BTreeMap<u32, BigInt>;

pub fn poly_mul(p: &Poly, q: &Poly) -> Poly {
    let mut out = Poly::new();
    for (i, a) in p {
        for (j, b) in q {
            *out.entry(i + j).or_insert_with(BigInt::zero) += a * b;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// `(x+y)^n − x^n − y^n`.
fn p_n(n: u32) -> Poly {
    (1..n).map(|j| (j, binomial(n, j))).collect()
}

/// `Π_{(n,k)} P_n^k` expanded by brute force, with `P_n = (x+y)^n − x^n − y^n`.
pub fn big_c_oracle(x: &PartitionElement) -> Poly {
    let mut acc: Poly = [(0, BigInt::one())].into();
    for (n, k) in x.support() {
        for _ in 0..k {
            acc = poly_mul(&acc, &p_n(n));
        }
    }
    acc
}
