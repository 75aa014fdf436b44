use lz_core::exact::factorial;
use lz_core::expansion::{expand_lz, reduce_even};
use lz_core::numerics::*;

fn close(x: &BigFloat, y: &BigFloat, digits: i64) -> bool {
    (x - y).below_pow10(digits)
}

#[test]
fn series_symmetry_at_matched_policy() {
    let p = Precision::new(30);
    let cfg = SeriesConfig::default();
    for (a, b) in [(1, 2), (2, 3), (2, 4)] {
        let forward = series_sum(a, b, &p, &cfg).unwrap();
        let backward = series_sum(b, a, &p, &cfg).unwrap();
        assert!(close(&forward, &backward, 25), "({a},{b})");
    }
}

#[test]
fn euler_identity() {
    let p = Precision::new(30);
    let z3 = zeta_value(3, &p).unwrap();
    assert!(close(&lz_series(1, 2, &p).unwrap(), &z3, 30));
    // Σ_{n>m≥1} 1/(n² m): the n ≤ 4000 truncation sits within ~log(n)/n of ζ(3)
    let partial = series_partial_sum(2, 1, 4000, &p);
    let gap = (&z3 - &partial).to_f64();
    assert!(gap > 0.0 && gap < 3e-3, "{gap}");
}

/// `Lz(a,b) = (lz(a,b) + a·lz(a−1,b) + b·lz(a,b−1)) / (a! b!)` with the raw
/// integrals from quadrature.
#[test]
fn raw_and_normalized_integrals_agree() {
    let p = Precision::new(25);
    let mut raw = std::collections::HashMap::new();
    for a in 0..=4u32 {
        for b in 0..=4u32 {
            raw.insert((a, b), lz_raw_quadrature(a, b, &p).unwrap());
        }
    }
    for a in 1..=4u32 {
        for b in 1..=4u32 {
            let num = raw[&(a, b)].clone()
                + BigFloat::from_i64(a as i64, &p) * &raw[&(a - 1, b)]
                + BigFloat::from_i64(b as i64, &p) * &raw[&(a, b - 1)];
            let via_raw = num / BigFloat::from_bigint(&(factorial(a) * factorial(b)), &p);
            let normalized = lz_quadrature(a, b, &p).unwrap();
            assert!(close(&via_raw, &normalized, 20), "({a},{b})");
        }
    }
}

#[test]
fn methods_agree_on_small_weights() {
    let p = Precision::new(30);
    for n in 2..=7u32 {
        for a in 1..n {
            let b = n - a;
            let s = lz_series(a, b, &p).unwrap();
            let q = lz_quadrature(a, b, &p).unwrap();
            assert!(close(&s, &q, 25), "Lz({a},{b})");
        }
    }
}

#[test]
fn erratum_values() {
    let p = Precision::new(30);
    let z4 = zeta_value(4, &p).unwrap();
    let quarter = &z4 / &BigFloat::from_i64(-4, &p);
    for v in [lz_series(2, 2, &p).unwrap(), lz_quadrature(2, 2, &p).unwrap()] {
        assert!(close(&v, &quarter, 25));
        assert!(!close(&v, &-z4.clone(), 5));
    }
}

#[test]
fn evaluate_reduced_matches_numerics() {
    let p = Precision::new(40);
    let reduced = reduce_even(&expand_lz(6, 3));
    let sym = evaluate_reduced(&reduced, &p).unwrap();
    assert!(close(&sym, &lz_series(6, 3, &p).unwrap(), 38));
}

#[test]
fn verification_report_flags_failures() {
    let ok = verify_expansion(4, 2, 25, Method::Both).unwrap();
    assert!(ok.passed);
    assert!(ok.series.is_some() && ok.quadrature.is_some());
    let series_only = verify_expansion(4, 2, 25, Method::Series).unwrap();
    assert!(series_only.quadrature.is_none());
}

#[test]
fn s_table_row_two() {
    let p = Precision::new(30);
    let t = build_s_table(2, 50, &p);
    let mut h = BigFloat::zero(&p);
    for n in 1..=50i64 {
        let expect = &h * &BigFloat::from_i64(2, &p) / BigFloat::from_i64(n, &p);
        assert!(close(t.get(2, n as usize), &expect, 35));
        h = h + BigFloat::from_i64(n, &p).recip();
    }
}
