mod common;

use std::collections::HashSet;

use lz_core::partitions::{count_partitions, enumerate_partitions, Parity, PartitionFilter};
use proptest::prelude::*;

#[test]
fn p2_counts_are_differences_of_partition_numbers() {
    let p = common::partition_numbers(40);
    assert_eq!(p[10], 42);
    for n in 2..=40u32 {
        let expect = p[n as usize] - p[n as usize - 1];
        assert_eq!(count_partitions(n, &PartitionFilter::new(2)), expect, "N={n}");
    }
}

#[test]
fn unrestricted_counts_match_pentagonal_oracle() {
    let p = common::partition_numbers(40);
    for n in 1..=40u32 {
        assert_eq!(count_partitions(n, &PartitionFilter::new(1)), p[n as usize]);
    }
}

fn filters() -> Vec<PartitionFilter> {
    let mut out = Vec::new();
    for s in 1..=4 {
        for parity in [Parity::Any, Parity::Odd, Parity::Even] {
            let f = PartitionFilter::new(s).with_parity(parity);
            out.push(f);
            for t in 1..=6 {
                out.push(f.with_parts(t));
            }
        }
    }
    out
}

#[test]
fn enumeration_agrees_with_counting() {
    for n in 1..=30u32 {
        for f in filters() {
            let xs = enumerate_partitions(n, &f);
            assert_eq!(xs.len() as u128, count_partitions(n, &f), "N={n} {f:?}");
            let distinct: HashSet<_> = xs.iter().collect();
            assert_eq!(distinct.len(), xs.len(), "duplicates at N={n} {f:?}");
            for x in &xs {
                assert_eq!(x.weight(), n);
                assert_eq!(x.support().map(|(p, k)| p * k).sum::<u32>(), n);
                assert!(x.satisfies(&f), "{x} violates {f:?}");
            }
        }
    }
}

#[test]
fn canonical_order_is_descending_lexicographic() {
    for n in 2..=20u32 {
        let lists: Vec<Vec<u32>> =
            enumerate_partitions(n, &PartitionFilter::new(1)).iter().map(|x| x.parts_descending()).collect();
        assert!(lists.windows(2).all(|w| w[0] > w[1]), "N={n}");
    }
}

#[test]
fn odd_weight_parity_emptiness() {
    for n in (1..=29u32).step_by(2) {
        for t in 1..=n {
            let even = PartitionFilter::new(1).with_parts(t).with_parity(Parity::Even);
            assert!(enumerate_partitions(n, &even).is_empty());
            if t % 2 == 0 {
                let odd = PartitionFilter::new(3).with_parts(t).with_parity(Parity::Odd);
                assert!(enumerate_partitions(n, &odd).is_empty());
            }
        }
    }
}

proptest! {
    #[test]
    fn json_round_trip(n in 1u32..25, s in 1u32..4, pick in 0usize..1000) {
        let xs = enumerate_partitions(n, &PartitionFilter::new(s));
        prop_assume!(!xs.is_empty());
        let x = &xs[pick % xs.len()];
        let text = serde_json::to_string(x).unwrap();
        prop_assert_eq!(&serde_json::from_str::<lz_core::PartitionElement>(&text).unwrap(), x);
    }
}
