//! Which odd-zeta monomials are ℚ(π)-linear combinations of `Lz(a,b)`?
//!
//! Every row `reduce_even(expand_lz(a,b))` is homogeneous of weight
//! `N = a+b`, so in it an odd monomial `m` always carries the same factor
//! `π^{N−wt(m)}`. Absorbing that factor into the column turns
//! ℚ(π)-expressibility into ℚ-row-space membership, decided by exact
//! elimination. A success is returned as a [`Certificate`] that has already
//! passed its substitution check.

mod certificate;
mod survey;
mod system;

use serde::{Deserialize, Serialize};

pub use certificate::Certificate;
pub use survey::{survey, CountingCheck, SurveyReport, WeightRecord};
pub use system::{build_system, odd_monomials, reduced_lz, LinearSystem, LzRow, Mode};

use crate::error::{Error, Result};
use crate::exact::{solve_membership, PiPowerScalar};
use crate::expansion::{PiReducedCombination, ZetaMonomial};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Expressibility {
    Expressed { certificate: Certificate },
    NotExpressible,
    /// Strict mode only: the optimistic system succeeds, but only by
    /// treating these lower-weight monomials as known.
    UnresolvedDependency { missing: Vec<ZetaMonomial> },
}

impl Expressibility {
    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            Expressibility::Expressed { certificate } => Some(certificate),
            _ => None,
        }
    }
}

/// [`express_at_weight`] at the target's own weight.
pub fn express(target: &ZetaMonomial, mode: Mode) -> Result<Expressibility> {
    express_at_weight(target, target.weight(), mode)
}

/// Tries to write `π^{weight − wt(target)} · target` as a combination of
/// weight-`weight` rows (plus, in strict mode, lifted lower-weight rows).
pub fn express_at_weight(target: &ZetaMonomial, weight: u32, mode: Mode) -> Result<Expressibility> {
    if target.is_unit() || !target.is_odd_only() {
        return Err(Error::invalid(format!("target {target} must be a product of odd zeta values")));
    }
    let w = target.weight();
    if weight < w || (weight - w) % 2 == 1 {
        return Err(Error::invalid(format!(
            "{target} has weight {w}; the system weight must be ≥ {w} with the same parity, got {weight}"
        )));
    }
    match (solve(target, weight, mode)?, mode) {
        (Some(c), _) => Ok(Expressibility::Expressed { certificate: c }),
        (None, Mode::Optimistic) => Ok(Expressibility::NotExpressible),
        (None, Mode::Strict) => match solve(target, weight, Mode::Optimistic)? {
            Some(c) => Ok(Expressibility::UnresolvedDependency {
                missing: c.known_remainder.terms().map(|(m, _)| m.clone()).filter(|m| !m.is_unit()).collect(),
            }),
            None => Ok(Expressibility::NotExpressible),
        },
    }
}

fn solve(target: &ZetaMonomial, weight: u32, mode: Mode) -> Result<Option<Certificate>> {
    let all_odd = build_system(weight, Mode::Strict)?.columns;
    if mode == Mode::Optimistic {
        // prefer a certificate whose remainder is a pure power of π; this
        // only succeeds when the optimistic system succeeds as well
        if let Some(c) = solve_with(target, weight, mode, all_odd)? {
            return Ok(Some(c));
        }
        return solve_with(target, weight, mode, odd_monomials(weight));
    }
    solve_with(target, weight, mode, all_odd)
}

fn solve_with(
    target: &ZetaMonomial,
    weight: u32,
    mode: Mode,
    mut columns: Vec<ZetaMonomial>,
) -> Result<Option<Certificate>> {
    if !columns.contains(target) {
        columns.push(target.clone());
    }
    let system = system::build_with_columns(weight, mode, columns);
    let e = system.unit_vector(target).expect("target column present");
    let Some(lambda) = solve_membership(&system.matrix(), &e) else {
        return Ok(None);
    };
    let mut lz_terms = std::collections::BTreeMap::new();
    let mut known_remainder = PiReducedCombination::new(weight);
    for (row, l) in system.rows.iter().zip(&lambda) {
        if num_traits::Zero::is_zero(l) {
            continue;
        }
        lz_terms.insert((row.a, row.b), PiPowerScalar::new(l.clone(), row.lift));
        known_remainder.add_scaled(&row.known, &-l);
    }
    let cert = Certificate { target: target.clone(), weight, lz_terms, known_remainder };
    cert.verify()?;
    Ok(Some(cert))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(s: &str) -> ZetaMonomial {
        s.parse().unwrap()
    }

    fn cert(t: &str, w: u32, mode: Mode) -> Certificate {
        express_at_weight(&mono(t), w, mode).unwrap().certificate().cloned().expect("expressible")
    }

    #[test]
    fn apery() {
        assert_eq!(cert("z3", 3, Mode::Optimistic).to_string(), "z3 = Lz(2,1)");
        assert_eq!(cert("z3", 5, Mode::Optimistic).to_string(), "pi^2*z3 = 12*Lz(4,1) - 6*Lz(3,2)");
    }

    #[test]
    fn weight_eight_product() {
        let c = cert("z3*z5", 8, Mode::Optimistic);
        assert_eq!(c.to_string(), "z3*z5 = Lz(6,2) + (1/7560)*pi^8");
        assert_eq!(c.lcd_form(), "7560*z3*z5 = 7560*Lz(6,2) + pi^8");
    }

    #[test]
    fn weight_seven() {
        assert_eq!(
            cert("z5", 7, Mode::Optimistic).to_string(),
            "pi^2*z5 = 10*Lz(6,1) + 10*Lz(5,2) - 8*Lz(4,3)"
        );
        let c = cert("z3", 7, Mode::Optimistic);
        assert_eq!(c.to_string(), "pi^4*z3 = 120*Lz(6,1) - 240*Lz(5,2) + 120*Lz(4,3)");
    }

    #[test]
    fn strict_certificates_verify() {
        for (t, w) in [("z3", 3), ("z3", 5), ("z3^2", 6), ("z3*z5", 8), ("z3^3", 9)] {
            let c = cert(t, w, Mode::Strict);
            assert!(c.known_remainder.terms().all(|(m, _)| m.is_unit()), "{c}");
        }
    }

    #[test]
    fn rejects_bad_targets() {
        assert!(express(&mono("z2*z3"), Mode::Optimistic).is_err());
        assert!(express_at_weight(&mono("z3"), 4, Mode::Optimistic).is_err());
    }

    #[test]
    fn json_round_trip() {
        let c = cert("z3^2", 6, Mode::Optimistic);
        let s = serde_json::to_string(&c).unwrap();
        let back: Certificate = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c);
        back.verify().unwrap();
    }

    #[test]
    fn tampered_certificate_is_rejected() {
        let mut c = cert("z3*z5", 8, Mode::Optimistic);
        c.lz_terms.insert((5, 3), PiPowerScalar::new(crate::exact::rat(1, 1), 0));
        assert!(c.verify().is_err());
    }
}
