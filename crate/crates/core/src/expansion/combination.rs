use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::monomial::ZetaMonomial;
use crate::error::{Error, Result};
use crate::exact::{rational_str, PiPowerScalar, Rational};

/// Finite ℚ-combination of zeta monomials, all of one weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZetaCombination {
    weight: u32,
    terms: BTreeMap<ZetaMonomial, Rational>,
}

impl ZetaCombination {
    pub fn new(weight: u32) -> Self {
        ZetaCombination { weight, terms: BTreeMap::new() }
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    /// Adds `coeff · m`; panics if `m` has the wrong weight.
    pub fn add_term(&mut self, m: ZetaMonomial, coeff: Rational) {
        assert_eq!(m.weight(), self.weight, "inhomogeneous term {m} in weight {}", self.weight);
        add_into(&mut self.terms, m, coeff);
    }

    pub fn coefficient(&self, m: &ZetaMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ZetaMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn sorted(&self) -> Vec<(&ZetaMonomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by_key(|(m, _)| m.display_key());
        v
    }

    pub fn latex(&self) -> String {
        join_latex(self.sorted().into_iter().map(|(m, c)| (c.clone(), vec![m.latex()])))
    }
}

impl fmt::Display for ZetaCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.sorted().into_iter().map(|(m, c)| (c.clone(), monomial_factors(m)));
        write!(f, "{}", join_text(terms))
    }
}

/// Odd-only zeta monomials with π-power coefficients, homogeneous of
/// `weight`: every term satisfies `pi_exponent + monomial weight = weight`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiReducedCombination {
    weight: u32,
    terms: BTreeMap<ZetaMonomial, PiPowerScalar>,
}

impl PiReducedCombination {
    pub fn new(weight: u32) -> Self {
        PiReducedCombination { weight, terms: BTreeMap::new() }
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    /// Adds `coeff · π^{weight − wt(m)} · m`.
    pub fn add_term(&mut self, m: ZetaMonomial, coeff: Rational) -> Result<()> {
        if !m.is_odd_only() {
            return Err(Error::invalid(format!("{m} has an even zeta factor")));
        }
        let w = m.weight();
        if w > self.weight || (self.weight - w) % 2 == 1 {
            return Err(Error::invalid(format!(
                "{m} cannot appear at weight {} with an even π power",
                self.weight
            )));
        }
        let k = self.weight - w;
        let next = self.coefficient(&m) + coeff;
        if next.is_zero() {
            self.terms.remove(&m);
        } else {
            self.terms.insert(m, PiPowerScalar::new(next, k));
        }
        Ok(())
    }

    /// Rational part of the coefficient of `m`.
    pub fn coefficient(&self, m: &ZetaMonomial) -> Rational {
        self.terms.get(m).map(|s| s.coeff().clone()).unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ZetaMonomial, &PiPowerScalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `self + r·other`; both must have the same weight.
    pub fn add_scaled(&mut self, other: &PiReducedCombination, r: &Rational) {
        assert_eq!(self.weight, other.weight, "weight mismatch");
        if r.is_zero() {
            return;
        }
        for (m, s) in &other.terms {
            self.add_term(m.clone(), s.coeff() * r).expect("same weight");
        }
    }

    pub fn scaled(&self, r: &Rational) -> PiReducedCombination {
        let mut out = PiReducedCombination::new(self.weight);
        out.add_scaled(self, r);
        out
    }

    /// Multiply through by `π^k` (`k` even).
    pub fn lift(&self, k: u32) -> PiReducedCombination {
        assert!(k.is_multiple_of(2), "odd π lift breaks the even-exponent invariant");
        PiReducedCombination {
            weight: self.weight + k,
            terms: self.terms.iter().map(|(m, s)| (m.clone(), s.lift(k))).collect(),
        }
    }

    fn sorted(&self) -> Vec<(&ZetaMonomial, &PiPowerScalar)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by_key(|(m, _)| m.display_key());
        v
    }

    pub fn latex(&self) -> String {
        join_latex(self.sorted().into_iter().map(|(m, s)| {
            let mut fs = Vec::new();
            match s.pi_exponent() {
                0 => {}
                1 => fs.push("\\pi".to_string()),
                k => fs.push(format!("\\pi^{{{k}}}")),
            }
            fs.push(m.latex());
            (s.coeff().clone(), fs)
        }))
    }
}

impl fmt::Display for PiReducedCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.sorted().into_iter().map(|(m, s)| {
            let mut fs = Vec::new();
            if s.pi_exponent() > 0 {
                fs.push(crate::exact::PiPowerScalar::new(Rational::one(), s.pi_exponent()).to_string());
            }
            fs.extend(monomial_factors(m));
            (s.coeff().clone(), fs)
        });
        write!(f, "{}", join_text(terms))
    }
}

fn add_into(terms: &mut BTreeMap<ZetaMonomial, Rational>, m: ZetaMonomial, coeff: Rational) {
    if coeff.is_zero() {
        return;
    }
    let e = terms.entry(m.clone()).or_insert_with(Rational::zero);
    *e += coeff;
    if e.is_zero() {
        terms.remove(&m);
    }
}

fn monomial_factors(m: &ZetaMonomial) -> Vec<String> {
    if m.is_unit() {
        Vec::new()
    } else {
        vec![m.to_string()]
    }
}

/// `2*z5 - z2*z3`, `(1/2)*z3^2 - (1/1260)*pi^6`; empty is `0`.
pub(crate) fn join_text(terms: impl Iterator<Item = (Rational, Vec<String>)>) -> String {
    let mut out = String::new();
    for (i, (c, factors)) in terms.enumerate() {
        let neg = c.is_negative();
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mag = c.abs();
        let body = factors.join("*");
        if body.is_empty() {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&body);
        } else if mag.is_integer() {
            out.push_str(&format!("{mag}*{body}"));
        } else {
            out.push_str(&format!("({mag})*{body}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub(crate) fn join_latex(terms: impl Iterator<Item = (Rational, Vec<String>)>) -> String {
    let mut out = String::new();
    for (i, (c, factors)) in terms.enumerate() {
        if c.is_negative() {
            out.push('-');
        } else if i > 0 {
            out.push('+');
        }
        let mag = c.abs();
        let body: String = factors.concat();
        let coeff = if mag.is_integer() {
            mag.to_string()
        } else {
            format!("\\frac{{{}}}{{{}}}", mag.numer(), mag.denom())
        };
        if body.is_empty() {
            out.push_str(&coeff);
        } else if mag.is_one() {
            out.push_str(&body);
        } else {
            out.push_str(&coeff);
            out.push_str(&body);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    monomial: ZetaMonomial,
    #[serde(with = "rational_str")]
    coeff: Rational,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pi: Option<u32>,
}

#[derive(Serialize, Deserialize)]
struct CombinationJson {
    weight: u32,
    terms: Vec<TermJson>,
}

impl Serialize for ZetaCombination {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CombinationJson {
            weight: self.weight,
            terms: self
                .sorted()
                .into_iter()
                .map(|(m, c)| TermJson { monomial: m.clone(), coeff: c.clone(), pi: None })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ZetaCombination {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = CombinationJson::deserialize(d)?;
        let mut out = ZetaCombination::new(j.weight);
        for t in j.terms {
            if t.monomial.weight() != j.weight {
                return Err(D::Error::custom(format!("term {} has the wrong weight", t.monomial)));
            }
            out.add_term(t.monomial, t.coeff);
        }
        Ok(out)
    }
}

impl Serialize for PiReducedCombination {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CombinationJson {
            weight: self.weight,
            terms: self
                .sorted()
                .into_iter()
                .map(|(m, c)| TermJson {
                    monomial: m.clone(),
                    coeff: c.coeff().clone(),
                    pi: Some(c.pi_exponent()),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PiReducedCombination {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = CombinationJson::deserialize(d)?;
        let mut out = PiReducedCombination::new(j.weight);
        for t in j.terms {
            let expect = j.weight.checked_sub(t.monomial.weight());
            if t.pi.is_some() && t.pi != expect {
                return Err(D::Error::custom(format!("π exponent of {} inconsistent", t.monomial)));
            }
            out.add_term(t.monomial, t.coeff).map_err(D::Error::custom)?;
        }
        Ok(out)
    }
}
