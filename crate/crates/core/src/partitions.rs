//! Restricted integer partitions: `P(N)`, `P_s(N)`, `P_s^t(N)` and their
//! odd-part / even-part subsets.
//!
//! A partition is stored sparsely as `part size -> multiplicity`; the
//! support is the stored entries and the norm is the number of parts.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PartitionElement {
    weight: u32,
    #[serde(with = "support_pairs")]
    parts: BTreeMap<u32, u32>,
}

impl PartitionElement {
    /// Builds from a list of parts in any order.
    pub fn from_parts(parts: &[u32]) -> Result<Self> {
        let mut map = BTreeMap::new();
        for &p in parts {
            if p == 0 {
                return Err(Error::invalid("partition parts must be positive"));
            }
            *map.entry(p).or_insert(0) += 1;
        }
        Self::from_map(map)
    }

    /// Builds from `(part size, multiplicity)` pairs.
    pub fn from_support(support: &[(u32, u32)]) -> Result<Self> {
        let mut map = BTreeMap::new();
        for &(n, k) in support {
            if n == 0 || k == 0 {
                return Err(Error::invalid("support entries must be positive"));
            }
            *map.entry(n).or_insert(0) += k;
        }
        Self::from_map(map)
    }

    fn from_map(parts: BTreeMap<u32, u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::invalid("a partition needs at least one part"));
        }
        let weight = parts.iter().map(|(n, k)| n * k).sum();
        Ok(PartitionElement { weight, parts })
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    /// `(part size, multiplicity)` in ascending part size.
    pub fn support(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.parts.iter().map(|(&n, &k)| (n, k))
    }

    pub fn norm(&self) -> u32 {
        self.parts.values().sum()
    }

    pub fn min_part(&self) -> u32 {
        *self.parts.keys().next().expect("nonempty")
    }

    pub fn parts_descending(&self) -> Vec<u32> {
        self.parts
            .iter()
            .rev()
            .flat_map(|(&n, &k)| std::iter::repeat_n(n, k as usize))
            .collect()
    }

    pub fn satisfies(&self, filter: &PartitionFilter) -> bool {
        self.min_part() >= filter.min_part
            && filter.exact_parts.is_none_or(|t| self.norm() == t)
            && self.parts.keys().all(|&n| filter.parity.admits(n))
    }
}

impl fmt::Display for PartitionElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts_descending().iter().map(u32::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

pub fn norm(x: &PartitionElement) -> u32 {
    x.norm()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    #[default]
    Any,
    Odd,
    Even,
}

impl Parity {
    fn admits(self, part: u32) -> bool {
        match self {
            Parity::Any => true,
            Parity::Odd => part % 2 == 1,
            Parity::Even => part.is_multiple_of(2),
        }
    }
}

/// Minimum part size `s`, optional exact part count `t`, and a parity
/// restriction on every part.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PartitionFilter {
    min_part: u32,
    exact_parts: Option<u32>,
    parity: Parity,
}

impl Default for PartitionFilter {
    fn default() -> Self {
        PartitionFilter { min_part: 1, exact_parts: None, parity: Parity::Any }
    }
}

impl PartitionFilter {
    /// `min_part` below 1 is treated as 1.
    pub fn new(min_part: u32) -> Self {
        PartitionFilter { min_part: min_part.max(1), ..Default::default() }
    }

    pub fn with_parts(mut self, t: u32) -> Self {
        self.exact_parts = Some(t);
        self
    }

    pub fn with_parity(mut self, parity: Parity) -> Self {
        self.parity = parity;
        self
    }

    pub fn min_part(&self) -> u32 {
        self.min_part
    }

    pub fn exact_parts(&self) -> Option<u32> {
        self.exact_parts
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    fn allowed_parts(&self, n: u32) -> impl DoubleEndedIterator<Item = u32> + '_ {
        (self.min_part..=n).filter(move |&p| self.parity.admits(p))
    }
}

/// Every partition of `n` passing `filter`, in descending lexicographic
/// order of the descending part lists: `[6], [4,2], [3,3], [2,2,2]`.
pub fn enumerate_partitions(n: u32, filter: &PartitionFilter) -> Vec<PartitionElement> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let allowed: Vec<u32> = filter.allowed_parts(n).rev().collect();
    let mut stack = Vec::new();
    descend(n, 0, &allowed, filter.exact_parts, &mut stack, &mut out);
    out
}

fn descend(
    remaining: u32,
    start: usize,
    allowed: &[u32],
    parts_left: Option<u32>,
    stack: &mut Vec<u32>,
    out: &mut Vec<PartitionElement>,
) {
    if remaining == 0 {
        if parts_left.is_none_or(|t| t == 0) {
            out.push(PartitionElement::from_parts(stack).expect("nonempty"));
        }
        return;
    }
    if parts_left == Some(0) {
        return;
    }
    for (i, &p) in allowed.iter().enumerate().skip(start) {
        if p > remaining {
            continue;
        }
        if let Some(t) = parts_left {
            // t parts each ≤ p cannot reach `remaining`, nor can smaller p
            if p * t < remaining {
                break;
            }
        }
        stack.push(p);
        descend(remaining - p, i, allowed, parts_left.map(|t| t - 1), stack, out);
        stack.pop();
    }
}

/// `|enumerate_partitions(n, filter)|` by dynamic programming, without
/// materializing the partitions.
pub fn count_partitions(n: u32, filter: &PartitionFilter) -> u128 {
    if n == 0 {
        return 0;
    }
    let n_us = n as usize;
    let max_parts = match filter.exact_parts {
        Some(t) => t as usize,
        None => n_us,
    };
    // ways[m][c]: partitions of m into exactly c allowed parts
    let mut ways = vec![vec![0u128; max_parts + 1]; n_us + 1];
    ways[0][0] = 1;
    for p in filter.allowed_parts(n) {
        let p = p as usize;
        for m in p..=n_us {
            for c in 1..=max_parts {
                let add = ways[m - p][c - 1];
                ways[m][c] += add;
            }
        }
    }
    match filter.exact_parts {
        Some(t) => ways[n_us][t as usize],
        None => ways[n_us].iter().sum(),
    }
}

mod support_pairs {
    use std::collections::BTreeMap;

    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(m: &BTreeMap<u32, u32>, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<(u32, u32)> = m.iter().map(|(&a, &b)| (a, b)).collect();
        v.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<u32, u32>, D::Error> {
        let v: Vec<(u32, u32)> = Vec::deserialize(d)?;
        Ok(v.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn supports(xs: &[PartitionElement]) -> Vec<Vec<(u32, u32)>> {
        xs.iter().map(|x| x.support().collect()).collect()
    }

    #[test]
    fn p2_of_six() {
        let xs = enumerate_partitions(6, &PartitionFilter::new(2));
        assert_eq!(
            supports(&xs),
            vec![vec![(6, 1)], vec![(2, 1), (4, 1)], vec![(3, 2)], vec![(2, 3)]]
        );
    }

    #[test]
    fn p2_of_three() {
        let xs = enumerate_partitions(3, &PartitionFilter::new(2));
        assert_eq!(supports(&xs), vec![vec![(3, 1)]]);
    }

    #[test]
    fn odd_parts_of_nine() {
        let f = PartitionFilter::new(3).with_parity(Parity::Odd);
        let xs = enumerate_partitions(9, &f);
        assert_eq!(supports(&xs), vec![vec![(9, 1)], vec![(3, 3)]]);
        assert_eq!(count_partitions(7, &f), 1);
    }

    #[test]
    fn norms() {
        assert_eq!(norm(&PartitionElement::from_support(&[(6, 1)]).unwrap()), 1);
        assert_eq!(norm(&PartitionElement::from_support(&[(2, 1), (4, 1)]).unwrap()), 2);
        assert_eq!(norm(&PartitionElement::from_support(&[(2, 3)]).unwrap()), 3);
    }

    #[test]
    fn counts() {
        assert_eq!(count_partitions(10, &PartitionFilter::new(1)), 42);
        assert_eq!(count_partitions(6, &PartitionFilter::new(2)), 4);
        assert_eq!(count_partitions(1, &PartitionFilter::new(2)), 0);
    }

    #[test]
    fn exact_part_counts() {
        let f = PartitionFilter::new(1).with_parts(3);
        let xs = enumerate_partitions(7, &f);
        assert_eq!(xs.len() as u128, count_partitions(7, &f));
        assert!(xs.iter().all(|x| x.norm() == 3));
        assert_eq!(xs.len(), 4); // 5+1+1, 4+2+1, 3+3+1, 3+2+2
    }

    #[test]
    fn parity_forced_emptiness() {
        for n in (3..30).step_by(2) {
            for t in 1..=n {
                let even = PartitionFilter::new(1).with_parts(t).with_parity(Parity::Even);
                assert_eq!(count_partitions(n, &even), 0);
                if t % 2 == 0 {
                    let odd = PartitionFilter::new(1).with_parts(t).with_parity(Parity::Odd);
                    assert_eq!(count_partitions(n, &odd), 0);
                    assert!(enumerate_partitions(n, &odd).is_empty());
                }
            }
        }
        for n in (4..30).step_by(2) {
            for t in (1..=n).step_by(2) {
                let odd = PartitionFilter::new(1).with_parts(t).with_parity(Parity::Odd);
                assert_eq!(count_partitions(n, &odd), 0);
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let x = PartitionElement::from_support(&[(2, 1), (4, 1)]).unwrap();
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"weight":6,"parts":[[2,1],[4,1]]}"#);
        assert_eq!(serde_json::from_str::<PartitionElement>(&s).unwrap(), x);
    }
}
