use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::system::reduced_lz;
use crate::error::{Error, Result};
use crate::exact::{lcm_of_denominators, rational_str, PiPowerScalar, Rational};
use crate::expansion::{join_latex, join_text, PiReducedCombination, ZetaMonomial};

/// An exact identity
///
/// ```text
/// π^{weight − wt(target)} · target = Σ c·π^k · Lz(a,b) + known_remainder
/// ```
///
/// `known_remainder` holds the constant `π^weight` term and, for
/// optimistic-mode certificates, lower-weight odd monomials treated as
/// already settled.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub target: ZetaMonomial,
    pub weight: u32,
    pub lz_terms: BTreeMap<(u32, u32), PiPowerScalar>,
    pub known_remainder: PiReducedCombination,
}

impl Certificate {
    pub fn target_pi_exponent(&self) -> u32 {
        self.weight - self.target.weight()
    }

    /// Substitutes every `Lz(a,b)` by its exact π-reduced expansion and
    /// checks that the right side equals the left side term by term.
    pub fn verify(&self) -> Result<()> {
        let reject = || Error::CertificateRejected(self.target.to_string());
        if self.target.weight() > self.weight || self.known_remainder.weight() != self.weight {
            return Err(reject());
        }
        let mut rhs = self.known_remainder.clone();
        for (&(a, b), s) in &self.lz_terms {
            let w = a + b;
            if a < 1 || b < 1 || w + s.pi_exponent() != self.weight {
                return Err(reject());
            }
            rhs.add_scaled(&reduced_lz(a, b).lift(s.pi_exponent()), s.coeff());
        }
        let mut lhs = PiReducedCombination::new(self.weight);
        lhs.add_term(self.target.clone(), Rational::one()).map_err(|_| reject())?;
        if lhs == rhs {
            Ok(())
        } else {
            Err(reject())
        }
    }

    /// Least common denominator of every coefficient on the right.
    pub fn lcd(&self) -> BigInt {
        let coeffs: Vec<&Rational> = self
            .lz_terms
            .values()
            .map(PiPowerScalar::coeff)
            .chain(self.known_remainder.terms().map(|(_, s)| s.coeff()))
            .collect();
        lcm_of_denominators(coeffs)
    }

    fn sorted_lz(&self) -> Vec<(&(u32, u32), &PiPowerScalar)> {
        let mut v: Vec<_> = self.lz_terms.iter().collect();
        v.sort_by_key(|((a, b), s)| (s.pi_exponent(), std::cmp::Reverse(*a), *b));
        v
    }

    fn rhs_terms(&self, scale: &Rational, latex: bool) -> Vec<(Rational, Vec<String>)> {
        let pi = |k: u32| match (k, latex) {
            (0, _) => None,
            (1, false) => Some("pi".to_string()),
            (k, false) => Some(format!("pi^{k}")),
            (1, true) => Some("\\pi".to_string()),
            (k, true) => Some(format!("\\pi^{{{k}}}")),
        };
        let mut out = Vec::new();
        for ((a, b), s) in self.sorted_lz() {
            let mut fs: Vec<String> = pi(s.pi_exponent()).into_iter().collect();
            fs.push(format!("Lz({a},{b})"));
            out.push((s.coeff() * scale, fs));
        }
        let mut known: Vec<_> = self.known_remainder.terms().collect();
        known.sort_by_key(|(m, _)| m.display_key());
        for (m, s) in known {
            let mut fs: Vec<String> = pi(s.pi_exponent()).into_iter().collect();
            if !m.is_unit() {
                fs.push(if latex { m.latex() } else { m.to_string() });
            }
            out.push((s.coeff() * scale, fs));
        }
        out
    }

    fn lhs(&self, scale: &Rational, latex: bool) -> String {
        let mut fs = Vec::new();
        match (self.target_pi_exponent(), latex) {
            (0, _) => {}
            (1, false) => fs.push("pi".to_string()),
            (k, false) => fs.push(format!("pi^{k}")),
            (1, true) => fs.push("\\pi".to_string()),
            (k, true) => fs.push(format!("\\pi^{{{k}}}")),
        }
        fs.push(if latex { self.target.latex() } else { self.target.to_string() });
        let t = std::iter::once((scale.clone(), fs));
        if latex {
            join_latex(t)
        } else {
            join_text(t)
        }
    }

    /// Same identity with every coefficient an integer:
    /// `d·π^k·target = …` for `d` = [`Certificate::lcd`].
    pub fn lcd_form(&self) -> String {
        let d = Rational::from_integer(self.lcd());
        format!("{} = {}", self.lhs(&d, false), join_text(self.rhs_terms(&d, false).into_iter()))
    }

    pub fn latex(&self) -> String {
        let one = Rational::one();
        format!("{}={}", self.lhs(&one, true), join_latex(self.rhs_terms(&one, true).into_iter()))
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one = Rational::one();
        write!(f, "{} = {}", self.lhs(&one, false), join_text(self.rhs_terms(&one, false).into_iter()))
    }
}

#[derive(Serialize, Deserialize)]
struct LzJson {
    a: u32,
    b: u32,
    #[serde(with = "rational_str")]
    coeff: Rational,
    pi: u32,
}

#[derive(Serialize, Deserialize)]
struct KnownJson {
    monomial: ZetaMonomial,
    #[serde(with = "rational_str")]
    coeff: Rational,
    pi: u32,
}

#[derive(Serialize, Deserialize)]
struct CertificateJson {
    target: ZetaMonomial,
    weight: u32,
    lz: Vec<LzJson>,
    known: Vec<KnownJson>,
}

impl Serialize for Certificate {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut known: Vec<_> = self.known_remainder.terms().collect();
        known.sort_by_key(|(m, _)| m.display_key());
        CertificateJson {
            target: self.target.clone(),
            weight: self.weight,
            lz: self
                .sorted_lz()
                .into_iter()
                .map(|(&(a, b), c)| LzJson { a, b, coeff: c.coeff().clone(), pi: c.pi_exponent() })
                .collect(),
            known: known
                .into_iter()
                .map(|(m, c)| KnownJson { monomial: m.clone(), coeff: c.coeff().clone(), pi: c.pi_exponent() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Certificate {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = CertificateJson::deserialize(d)?;
        let mut lz_terms = BTreeMap::new();
        for t in j.lz {
            if t.coeff.is_zero() {
                continue;
            }
            if lz_terms.insert((t.a, t.b), PiPowerScalar::new(t.coeff, t.pi)).is_some() {
                return Err(D::Error::custom(format!("Lz({},{}) listed twice", t.a, t.b)));
            }
        }
        let mut known_remainder = PiReducedCombination::new(j.weight);
        for t in j.known {
            if t.monomial.weight() + t.pi != j.weight {
                return Err(D::Error::custom(format!("π exponent of {} inconsistent", t.monomial)));
            }
            known_remainder.add_term(t.monomial, t.coeff).map_err(D::Error::custom)?;
        }
        Ok(Certificate { target: j.target, weight: j.weight, lz_terms, known_remainder })
    }
}
