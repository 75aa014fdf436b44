use std::fmt;
use std::ops::{Mul, Neg};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::rational::{rational_str, Rational};

/// `coeff · π^pi_exponent`. Zero is always stored as `0·π⁰`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PiPowerScalar {
    #[serde(with = "rational_str")]
    coeff: Rational,
    pi_exponent: u32,
}

impl PiPowerScalar {
    pub fn new(coeff: Rational, pi_exponent: u32) -> Self {
        let pi_exponent = if coeff.is_zero() { 0 } else { pi_exponent };
        PiPowerScalar { coeff, pi_exponent }
    }

    pub fn rational(coeff: Rational) -> Self {
        Self::new(coeff, 0)
    }

    pub fn zero() -> Self {
        Self::new(Rational::zero(), 0)
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn pi_exponent(&self) -> u32 {
        self.pi_exponent
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    /// Multiply by `π^k`.
    pub fn lift(&self, k: u32) -> Self {
        Self::new(self.coeff.clone(), self.pi_exponent + k)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::new(&self.coeff * r, self.pi_exponent)
    }
}

impl Mul for &PiPowerScalar {
    type Output = PiPowerScalar;
    fn mul(self, rhs: &PiPowerScalar) -> PiPowerScalar {
        PiPowerScalar::new(&self.coeff * &rhs.coeff, self.pi_exponent + rhs.pi_exponent)
    }
}

impl Neg for PiPowerScalar {
    type Output = PiPowerScalar;
    fn neg(self) -> PiPowerScalar {
        PiPowerScalar::new(-self.coeff, self.pi_exponent)
    }
}

/// Renders `c`, `(p/q)`, `c*pi^k`, `(p/q)*pi^k`, with the sign leading.
impl fmt::Display for PiPowerScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeff.is_negative() {
            write!(f, "-")?;
        }
        let mag = self.coeff.abs();
        match (self.pi_exponent, mag.is_integer()) {
            (0, _) => write!(f, "{mag}"),
            (k, true) if mag.is_one() => write!(f, "{}", pi_power(k)),
            (k, true) => write!(f, "{mag}*{}", pi_power(k)),
            (k, false) => write!(f, "({mag})*{}", pi_power(k)),
        }
    }
}

pub(crate) fn pi_power(k: u32) -> String {
    match k {
        0 => "1".into(),
        1 => "pi".into(),
        k => format!("pi^{k}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn canonical_zero() {
        let z = PiPowerScalar::new(rat(0, 1), 6);
        assert_eq!(z.pi_exponent(), 0);
        assert_eq!(z, PiPowerScalar::zero());
    }

    #[test]
    fn display() {
        assert_eq!(PiPowerScalar::new(rat(-1, 360), 4).to_string(), "-(1/360)*pi^4");
        assert_eq!(PiPowerScalar::new(rat(1, 1), 2).to_string(), "pi^2");
        assert_eq!(PiPowerScalar::new(rat(24, 1), 0).to_string(), "24");
        assert_eq!(PiPowerScalar::new(rat(-3, 1), 1).to_string(), "-3*pi");
    }

    #[test]
    fn product() {
        let a = PiPowerScalar::new(rat(1, 6), 2);
        let b = PiPowerScalar::new(rat(1, 90), 4);
        assert_eq!(&a * &b, PiPowerScalar::new(rat(1, 540), 6));
    }
}
