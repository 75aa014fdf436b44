use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partitions::PartitionElement;

/// `∏ ζ(n)^k` over arguments `n ≥ 2`. The empty product is the unit monomial.
///
/// Text form is `z3^2*z5` (unit: `1`); arguments are kept ascending.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZetaMonomial {
    factors: BTreeMap<u32, u32>,
}

impl ZetaMonomial {
    pub fn unit() -> Self {
        Self::default()
    }

    pub fn zeta(n: u32) -> Self {
        Self::from_factors(&[(n, 1)]).expect("valid argument")
    }

    pub fn from_factors(factors: &[(u32, u32)]) -> Result<Self> {
        let mut map = BTreeMap::new();
        for &(n, k) in factors {
            if n < 2 {
                return Err(Error::invalid(format!("zeta argument {n} must be ≥ 2")));
            }
            if k == 0 {
                continue;
            }
            *map.entry(n).or_insert(0) += k;
        }
        Ok(ZetaMonomial { factors: map })
    }

    /// `Π(X) = ∏_{(n,k) ∈ Supp(X)} ζ(n)^k`.
    pub fn from_partition(x: &PartitionElement) -> Self {
        let factors: Vec<_> = x.support().collect();
        Self::from_factors(&factors).expect("partition of a zeta monomial must have parts ≥ 2")
    }

    /// The partition whose image under `Π` is this monomial.
    pub fn to_partition(&self) -> Option<PartitionElement> {
        let s: Vec<_> = self.factors().collect();
        PartitionElement::from_support(&s).ok()
    }

    pub fn factors(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.factors.iter().map(|(&n, &k)| (n, k))
    }

    pub fn weight(&self) -> u32 {
        self.factors.iter().map(|(n, k)| n * k).sum()
    }

    pub fn degree(&self) -> u32 {
        self.factors.values().sum()
    }

    pub fn is_unit(&self) -> bool {
        self.factors.is_empty()
    }

    /// All arguments odd (hence ≥ 3). The unit monomial qualifies.
    pub fn is_odd_only(&self) -> bool {
        self.factors.keys().all(|n| n % 2 == 1)
    }

    /// Splits into `(even-argument factors, odd-argument monomial)`.
    pub fn split_even(&self) -> (Vec<(u32, u32)>, ZetaMonomial) {
        let even = self.factors().filter(|(n, _)| n % 2 == 0).collect();
        let odd = self.factors.iter().filter(|(n, _)| *n % 2 == 1).map(|(&n, &k)| (n, k)).collect();
        (even, ZetaMonomial { factors: odd })
    }

    /// Weight of the odd-argument part.
    pub fn odd_weight(&self) -> u32 {
        self.factors().filter(|(n, _)| n % 2 == 1).map(|(n, k)| n * k).sum()
    }

    pub fn mul(&self, other: &ZetaMonomial) -> ZetaMonomial {
        let mut factors = self.factors.clone();
        for (&n, &k) in &other.factors {
            *factors.entry(n).or_insert(0) += k;
        }
        ZetaMonomial { factors }
    }

    pub fn latex(&self) -> String {
        self.factors()
            .map(|(n, k)| match k {
                1 => format!("\\zeta({n})"),
                k => format!("\\zeta({n})^{{{k}}}"),
            })
            .collect()
    }

    /// Rendering order for combinations: larger odd weight first, then factors.
    pub(crate) fn display_key(&self) -> (std::cmp::Reverse<u32>, Self) {
        (std::cmp::Reverse(self.odd_weight()), self.clone())
    }
}

impl fmt::Display for ZetaMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .factors()
            .map(|(n, k)| if k == 1 { format!("z{n}") } else { format!("z{n}^{k}") })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Grammar: `z<n>[^<k>](*z<n>[^<k>])*` with `n ≥ 2`, `k ≥ 1`; `1` is the unit.
impl FromStr for ZetaMonomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: String| Error::Parse { what: "zeta monomial", input: s.into(), reason };
        let t = s.trim();
        if t == "1" {
            return Ok(Self::unit());
        }
        if t.is_empty() {
            return Err(err("empty input".into()));
        }
        let mut factors = Vec::new();
        for tok in t.split('*') {
            let tok = tok.trim();
            let body = tok.strip_prefix('z').ok_or_else(|| err(format!("factor {tok:?} must start with 'z'")))?;
            let (n, k) = match body.split_once('^') {
                Some((n, k)) => (n, k),
                None => (body, "1"),
            };
            let n: u32 = n.parse().map_err(|_| err(format!("bad argument in {tok:?}")))?;
            let k: u32 = k.parse().map_err(|_| err(format!("bad exponent in {tok:?}")))?;
            if n < 2 {
                return Err(err(format!("argument {n} must be ≥ 2")));
            }
            if k == 0 {
                return Err(err("exponent must be ≥ 1".into()));
            }
            factors.push((n, k));
        }
        Self::from_factors(&factors)
    }
}

impl Serialize for ZetaMonomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for ZetaMonomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}
