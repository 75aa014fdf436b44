use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::bigfloat::{BigFloat, Precision};
use super::quadrature::lz_quadrature;
use super::series::lz_series;
use super::zeta::zeta_value;
use crate::error::Result;
use crate::expansion::{expand_lz, reduce_even, PiReducedCombination};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Series,
    Quadrature,
    Both,
}

impl Method {
    fn series(self) -> bool {
        matches!(self, Method::Series | Method::Both)
    }

    fn quadrature(self) -> bool {
        matches!(self, Method::Quadrature | Method::Both)
    }
}

/// Numeric value of a π-reduced combination.
pub fn evaluate_reduced(c: &PiReducedCombination, p: &Precision) -> Result<BigFloat> {
    let pi = BigFloat::pi(p);
    let mut zetas: BTreeMap<u32, BigFloat> = BTreeMap::new();
    let mut total = BigFloat::zero(p);
    for (m, s) in c.terms() {
        let mut term = BigFloat::from_rational(s.coeff(), p);
        if s.pi_exponent() > 0 {
            term = term * pi.powi(s.pi_exponent());
        }
        for (n, k) in m.factors() {
            if let std::collections::btree_map::Entry::Vacant(e) = zetas.entry(n) {
                e.insert(zeta_value(n, p)?);
            }
            term = term * zetas[&n].powi(k);
        }
        total = total + term;
    }
    Ok(total)
}

/// Symbolic and numeric values of `Lz(a,b)` side by side. Values are
/// decimal strings rounded to the requested digits.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub a: u32,
    pub b: u32,
    pub digits: u32,
    pub method: Method,
    pub expansion: PiReducedCombination,
    pub symbolic: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub series: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quadrature: Option<String>,
    /// Largest `|symbolic − numeric|` over the methods run.
    pub max_deviation: String,
    /// Pass iff `max_deviation < 10^-(digits − 5)`.
    pub threshold: String,
    pub passed: bool,
}

pub fn verify_expansion(a: u32, b: u32, digits: u32, method: Method) -> Result<VerificationReport> {
    let p = Precision::new(digits);
    let expansion = reduce_even(&expand_lz(a, b));
    let symbolic = evaluate_reduced(&expansion, &p)?;
    let tol_exp = digits as i64 - 5;

    let mut values = Vec::new();
    let series = if method.series() { Some(lz_series(a, b, &p)?) } else { None };
    let quadrature = if method.quadrature() { Some(lz_quadrature(a, b, &p)?) } else { None };
    values.extend(series.iter().cloned());
    values.extend(quadrature.iter().cloned());

    let mut worst = BigFloat::zero(&p);
    for v in &values {
        let dev = (v - &symbolic).abs();
        if dev.log10_upper() > worst.log10_upper() {
            worst = dev;
        }
    }
    let passed = worst.below_pow10(tol_exp);
    let shown = digits + 1;
    Ok(VerificationReport {
        a,
        b,
        digits,
        method,
        expansion,
        symbolic: symbolic.to_decimal(shown),
        series: series.map(|v| v.to_decimal(shown)),
        quadrature: quadrature.map(|v| v.to_decimal(shown)),
        max_deviation: worst.to_decimal(3),
        threshold: format!("1e-{tol_exp}"),
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lz_three_three() {
        let r = verify_expansion(3, 3, 40, Method::Both).unwrap();
        assert!(r.passed, "{r:?}");
        assert_eq!(r.expansion.to_string(), "z3^2 - (23/15120)*pi^6");
    }

    #[test]
    fn json_round_trip() {
        let r = verify_expansion(2, 1, 20, Method::Series).unwrap();
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(serde_json::from_str::<VerificationReport>(&s).unwrap(), r);
    }
}
