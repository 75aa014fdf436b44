//! Binomial composition sums.
//!
//! For a partition `X` with parts `n_j ≥ 2` (multiplicity `k_j`), the
//! product `∏ P_{n_j}^{k_j}` with `P_n = (x+y)^n − x^n − y^n` has
//! `x^{N−b} y^b` coefficient
//!
//! ```text
//! C_b(X) = Σ_{ℓ ∈ 𝔖(b)} ∏_j ∏_{i ≤ k_j} C(n_j, ℓ_{ji})
//! ```
//!
//! where `𝔖(b)` assigns every slot `(j,i)` a value `1 ≤ ℓ_{ji} ≤ n_j − 1`
//! with total `b`. The upper bound is `n_j − 1`: `P_n` has no `y^n` term.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::exact::{binomial, factorial, rational_str, Rational};
use crate::partitions::PartitionElement;

/// One slot of a composition: the `slot`-th copy of part `part` receives `value`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SlotValue {
    pub part: u32,
    pub slot: u32,
    pub value: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CompositionAssignment {
    pub entries: Vec<SlotValue>,
    pub total: u32,
}

impl CompositionAssignment {
    pub fn binomial_product(&self) -> BigInt {
        self.entries.iter().map(|e| binomial(e.part, e.value)).product()
    }
}

/// Slot list in (ascending part, slot index) order.
fn slots(x: &PartitionElement) -> Vec<(u32, u32)> {
    assert!(x.min_part() >= 2, "composition sums need every part ≥ 2, got {x}");
    x.support().flat_map(|(n, k)| (0..k).map(move |i| (n, i))).collect()
}

fn feasible(x: &PartitionElement, b: u32) -> bool {
    b >= x.norm() && b <= x.weight() - x.norm()
}

/// Every assignment in `𝔖(b)`; empty outside `‖X‖ ≤ b ≤ N − ‖X‖`.
pub fn enumerate_compositions(x: &PartitionElement, b: u32) -> Vec<CompositionAssignment> {
    let slots = slots(x);
    let mut out = Vec::new();
    if !feasible(x, b) {
        return out;
    }
    // suffix bounds: min and max reachable total from slot i onward
    let mut max_rest = vec![0u32; slots.len() + 1];
    for i in (0..slots.len()).rev() {
        max_rest[i] = max_rest[i + 1] + slots[i].0 - 1;
    }
    let mut current = Vec::with_capacity(slots.len());
    fill(&slots, &max_rest, 0, b, &mut current, &mut out);
    out
}

fn fill(
    slots: &[(u32, u32)],
    max_rest: &[u32],
    i: usize,
    remaining: u32,
    current: &mut Vec<SlotValue>,
    out: &mut Vec<CompositionAssignment>,
) {
    if i == slots.len() {
        if remaining == 0 {
            let total = current.iter().map(|e| e.value).sum();
            out.push(CompositionAssignment { entries: current.clone(), total });
        }
        return;
    }
    let (part, slot) = slots[i];
    let left = (slots.len() - i - 1) as u32;
    for value in 1..part {
        if value > remaining {
            break;
        }
        let rest = remaining - value;
        if rest < left || rest > max_rest[i + 1] {
            continue;
        }
        current.push(SlotValue { part, slot, value });
        fill(slots, max_rest, i + 1, rest, current, out);
        current.pop();
    }
}

/// `|𝔖(b)|` without enumerating.
pub fn count_compositions(x: &PartitionElement, b: u32) -> BigInt {
    if !feasible(x, b) {
        return BigInt::zero();
    }
    slot_sum(&slots(x), b, |_, _| BigInt::one())
}

/// `C_b(X)`; zero outside `‖X‖ ≤ b ≤ N − ‖X‖`.
pub fn big_c(x: &PartitionElement, b: u32) -> BigInt {
    if !feasible(x, b) {
        // still enforce the precondition
        let _ = slots(x);
        return BigInt::zero();
    }
    slot_sum(&slots(x), b, binomial)
}

/// Memoized `Σ_{ℓ ∈ 𝔖(b)} ∏ weight(n_j, ℓ_{ji})` over the slot list.
fn slot_sum(slots: &[(u32, u32)], b: u32, weight: impl Fn(u32, u32) -> BigInt) -> BigInt {
    let mut memo: HashMap<(usize, u32), BigInt> = HashMap::new();
    let mut max_rest = vec![0u32; slots.len() + 1];
    for i in (0..slots.len()).rev() {
        max_rest[i] = max_rest[i + 1] + slots[i].0 - 1;
    }
    fn go(
        i: usize,
        remaining: u32,
        slots: &[(u32, u32)],
        max_rest: &[u32],
        weight: &dyn Fn(u32, u32) -> BigInt,
        memo: &mut HashMap<(usize, u32), BigInt>,
    ) -> BigInt {
        if i == slots.len() {
            return if remaining == 0 { BigInt::one() } else { BigInt::zero() };
        }
        if remaining < (slots.len() - i) as u32 || remaining > max_rest[i] {
            return BigInt::zero();
        }
        if let Some(v) = memo.get(&(i, remaining)) {
            return v.clone();
        }
        let n = slots[i].0;
        let mut acc = BigInt::zero();
        for l in 1..n.min(remaining + 1) {
            let rest = go(i + 1, remaining - l, slots, max_rest, weight, memo);
            if !rest.is_zero() {
                acc += weight(n, l) * rest;
            }
        }
        memo.insert((i, remaining), acc.clone());
        acc
    }
    go(0, b, slots, &max_rest, &weight, &mut memo)
}

/// `C̃(X) = (−1)^{N+‖X‖} ∏_{(n,k)} 1/(k!·n^k)`.
pub fn c_tilde(x: &PartitionElement) -> Rational {
    assert!(x.min_part() >= 2, "c_tilde needs every part ≥ 2, got {x}");
    let denom: BigInt = x
        .support()
        .map(|(n, k)| factorial(k) * BigInt::from(n).pow(k))
        .product();
    let sign = if (x.weight() + x.norm()).is_multiple_of(2) { 1 } else { -1 };
    Rational::new(BigInt::from(sign), denom)
}

/// `c_b(X) = C_b(X)·C̃(X)`, the coefficient of `Π(X)` in `Lz(N−b, b)`.
pub fn little_c(x: &PartitionElement, b: u32) -> Rational {
    let c = big_c(x, b);
    if c.is_zero() {
        return Rational::zero();
    }
    Rational::from(c) * c_tilde(x)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientRecord {
    pub partition: PartitionElement,
    pub b: u32,
    #[serde(with = "bigint_str")]
    pub big_c: BigInt,
    #[serde(with = "rational_str")]
    pub c_tilde: Rational,
    #[serde(with = "rational_str")]
    pub little_c: Rational,
}

impl CoefficientRecord {
    pub fn new(x: &PartitionElement, b: u32) -> Self {
        let big = big_c(x, b);
        let tilde = c_tilde(x);
        let little = Rational::from(big.clone()) * &tilde;
        CoefficientRecord { partition: x.clone(), b, big_c: big, c_tilde: tilde, little_c: little }
    }
}

mod bigint_str {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}
