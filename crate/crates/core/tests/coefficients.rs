mod common;

use lz_core::coefficients::{big_c, count_compositions, enumerate_compositions};
use lz_core::partitions::{enumerate_partitions, PartitionElement, PartitionFilter};
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

fn p2(max_weight: u32) -> Vec<PartitionElement> {
    (2..=max_weight).flat_map(|n| enumerate_partitions(n, &PartitionFilter::new(2))).collect()
}

#[test]
fn big_c_matches_polynomial_expansion() {
    for x in p2(10) {
        let poly = common::big_c_oracle(&x);
        for b in 0..=x.weight() + 1 {
            let expect = poly.get(&b).cloned().unwrap_or_else(BigInt::zero);
            assert_eq!(big_c(&x, b), expect, "X={x} b={b}");
        }
    }
}

#[test]
fn row_sums() {
    for x in p2(12) {
        let total: BigInt = (0..=x.weight()).map(|b| big_c(&x, b)).sum();
        let expect: BigInt = x.support().map(|(n, k)| BigInt::from((1u64 << n) - 2).pow(k)).product();
        assert_eq!(total, expect, "X={x}");
    }
}

#[test]
fn symmetry_and_vanishing() {
    for x in p2(14) {
        let n = x.weight();
        for b in 0..=n {
            assert_eq!(big_c(&x, b), big_c(&x, n - b), "X={x} b={b}");
            if b < x.norm() || b > n - x.norm() {
                assert!(big_c(&x, b).is_zero());
            }
        }
    }
}

#[test]
fn enumeration_matches_sum() {
    for x in p2(10) {
        for b in 0..=x.weight() {
            let comps = enumerate_compositions(&x, b);
            assert_eq!(BigInt::from(comps.len()), count_compositions(&x, b));
            let s: BigInt = comps.iter().map(|c| c.binomial_product()).sum();
            assert_eq!(s, big_c(&x, b));
            for c in &comps {
                assert_eq!(c.total, b);
                assert!(c.entries.iter().all(|e| e.value >= 1 && e.value < e.part));
            }
        }
    }
}

proptest! {
    #[test]
    fn random_partitions_match_oracle(parts in prop::collection::vec(2u32..7, 1..4), b in 0u32..20) {
        let x = PartitionElement::from_parts(&parts).unwrap();
        let expect = common::big_c_oracle(&x).get(&b).cloned().unwrap_or_else(BigInt::zero);
        prop_assert_eq!(big_c(&x, b), expect);
    }
}
