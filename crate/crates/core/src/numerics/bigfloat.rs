use std::cell::RefCell;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use astro_float::{BigFloat as Af, Consts, Radix, RoundingMode};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::exact::Rational;

const RM: RoundingMode = RoundingMode::ToEven;
const LOG2_10: f64 = std::f64::consts::LOG2_10;
const LOG10_2: f64 = std::f64::consts::LOG10_2;

thread_local! {
    // astro-float caches π, ln 2, ... in a mutable `Consts`; one per thread
    // keeps every evaluation lock-free and independent of thread count.
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("allocate constant cache"));
}

fn with_consts<R>(f: impl FnOnce(&mut Consts) -> R) -> R {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

/// Requested decimal digits `P` plus guard digits `G`; all arithmetic runs
/// at `P + G` digits and results are judged against `10^-P`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Precision {
    pub digits: u32,
    pub guard: u32,
}

impl Precision {
    /// Default guard: `10 + ceil(log10(4P))`, enough to absorb the
    /// cancellation in a few hundred accumulated terms.
    pub fn new(digits: u32) -> Self {
        let guard = 10 + (4.0 * digits.max(1) as f64).log10().ceil() as u32;
        Precision { digits, guard }
    }

    pub fn with_guard(digits: u32, guard: u32) -> Self {
        Precision { digits, guard }
    }

    pub fn working_digits(&self) -> u32 {
        self.digits + self.guard
    }

    /// Binary working precision, rounded up to whole 64-bit words.
    pub fn bits(&self) -> usize {
        let raw = (self.working_digits() as f64 * LOG2_10).ceil() as usize + 8;
        raw.div_ceil(64) * 64
    }
}

/// Floating value at a fixed binary precision.
#[derive(Clone, Debug)]
pub struct BigFloat {
    v: Af,
    bits: usize,
}

impl BigFloat {
    fn wrap(v: Af, bits: usize) -> Self {
        debug_assert!(!v.is_nan(), "NaN escaped: {:?}", v.err());
        BigFloat { v, bits }
    }

    pub fn zero(p: &Precision) -> Self {
        Self::from_i64(0, p)
    }

    pub fn one(p: &Precision) -> Self {
        Self::from_i64(1, p)
    }

    pub fn from_i64(i: i64, p: &Precision) -> Self {
        let bits = p.bits();
        Self::wrap(Af::from_i64(i, bits), bits)
    }

    pub fn from_bigint(i: &BigInt, p: &Precision) -> Self {
        let bits = p.bits();
        let v = with_consts(|cc| Af::parse(&i.to_string(), Radix::Dec, bits, RM, cc));
        Self::wrap(v, bits)
    }

    pub fn from_rational(r: &Rational, p: &Precision) -> Self {
        Self::from_bigint(r.numer(), p) / Self::from_bigint(r.denom(), p)
    }

    /// Parses decimal notation such as `1.2020569e+0` or `-0.25`.
    pub fn parse(s: &str, p: &Precision) -> Option<Self> {
        let bits = p.bits();
        let v = with_consts(|cc| Af::parse(s.trim(), Radix::Dec, bits, RM, cc));
        (!v.is_nan()).then(|| Self::wrap(v, bits))
    }

    pub fn pi(p: &Precision) -> Self {
        let bits = p.bits();
        Self::wrap(with_consts(|cc| cc.pi(bits, RM)), bits)
    }

    pub fn bits(&self) -> usize {
        self.bits
    }

    pub fn is_zero(&self) -> bool {
        self.v.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.v.is_negative() && !self.v.is_zero()
    }

    pub fn abs(&self) -> Self {
        Self::wrap(self.v.abs(), self.bits)
    }

    pub fn exp(&self) -> Self {
        Self::wrap(with_consts(|cc| self.v.exp(self.bits, RM, cc)), self.bits)
    }

    pub fn ln(&self) -> Self {
        Self::wrap(with_consts(|cc| self.v.ln(self.bits, RM, cc)), self.bits)
    }

    /// `ln(1 + self)`, accurate for tiny arguments.
    pub fn ln_1p(&self) -> Self {
        // widen by the bits lost when forming 1 + x
        let lost = self.v.exponent().map_or(0, |e| (-(e as i64)).max(0) as usize);
        let wide = (self.bits + lost.min(4 * self.bits)).div_ceil(64) * 64;
        let one = Af::from_i64(1, wide);
        let mut x = self.v.clone();
        x.set_precision(wide, RM).expect("widen");
        let s = one.add(&x, wide, RM);
        let mut r = with_consts(|cc| s.ln(wide, RM, cc));
        r.set_precision(self.bits, RM).expect("narrow");
        Self::wrap(r, self.bits)
    }

    pub fn sinh(&self) -> Self {
        Self::wrap(with_consts(|cc| self.v.sinh(self.bits, RM, cc)), self.bits)
    }

    pub fn cosh(&self) -> Self {
        Self::wrap(with_consts(|cc| self.v.cosh(self.bits, RM, cc)), self.bits)
    }

    pub fn powi(&self, n: u32) -> Self {
        Self::wrap(self.v.powi(n as usize, self.bits, RM), self.bits)
    }

    pub fn recip(&self) -> Self {
        Self::wrap(self.v.reciprocal(self.bits, RM), self.bits)
    }

    /// Upper bound on `log10 |self|` (within one bit); `-inf` for zero.
    pub fn log10_upper(&self) -> f64 {
        match self.v.exponent() {
            _ if self.v.is_zero() => f64::NEG_INFINITY,
            Some(e) => e as f64 * LOG10_2,
            None => f64::INFINITY,
        }
    }

    /// `|self| < 10^-k`, decided conservatively from the binary exponent.
    pub fn below_pow10(&self, k: i64) -> bool {
        self.log10_upper() <= -(k as f64)
    }

    /// Scientific notation rounded to `digits` significant digits.
    pub fn to_decimal(&self, digits: u32) -> String {
        if self.v.is_zero() {
            return "0".to_string();
        }
        let full = with_consts(|cc| self.v.format(Radix::Dec, RM, cc)).expect("format finite value");
        round_scientific(&full, digits.max(1) as usize)
    }

    pub fn to_f64(&self) -> f64 {
        self.to_decimal(17).parse().expect("decimal literal")
    }
}

/// Rounds `d.ddd…e±x` to `digits` significant digits (half up).
fn round_scientific(s: &str, digits: usize) -> String {
    let (mant, exp) = s.split_once('e').unwrap_or((s, "0"));
    let (neg, mant) = match mant.strip_prefix('-') {
        Some(m) => (true, m),
        None => (false, mant),
    };
    let mut exp: i64 = exp.trim_start_matches('+').parse().expect("exponent");
    let raw: Vec<u8> = mant.bytes().filter(u8::is_ascii_digit).map(|b| b - b'0').collect();
    let lead = raw.iter().position(|&d| d != 0).unwrap_or(0);
    exp -= lead as i64; // mantissa was d.ddd with possible leading zeros
    let sig = &raw[lead..];
    let mut kept: Vec<u8> = sig.iter().take(digits).copied().collect();
    kept.resize(digits, 0);
    if sig.get(digits).is_some_and(|&d| d >= 5) {
        let mut i = digits;
        loop {
            if i == 0 {
                kept.insert(0, 1);
                kept.pop();
                exp += 1;
                break;
            }
            i -= 1;
            if kept[i] == 9 {
                kept[i] = 0;
            } else {
                kept[i] += 1;
                break;
            }
        }
    }
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    out.push((b'0' + kept[0]) as char);
    if digits > 1 {
        out.push('.');
        out.extend(kept[1..].iter().map(|&d| (b'0' + d) as char));
    }
    out.push_str(&format!("e{exp}"));
    out
}

impl fmt::Display for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = (self.bits as f64 * LOG10_2).floor() as u32;
        write!(f, "{}", self.to_decimal(f.precision().map_or(digits, |p| p as u32 + 1)))
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident) => {
        impl $tr<&BigFloat> for &BigFloat {
            type Output = BigFloat;
            fn $m(self, rhs: &BigFloat) -> BigFloat {
                let bits = self.bits.max(rhs.bits);
                BigFloat::wrap(self.v.$m(&rhs.v, bits, RM), bits)
            }
        }
        impl $tr<BigFloat> for BigFloat {
            type Output = BigFloat;
            fn $m(self, rhs: BigFloat) -> BigFloat {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&BigFloat> for BigFloat {
            type Output = BigFloat;
            fn $m(self, rhs: &BigFloat) -> BigFloat {
                (&self).$m(rhs)
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl Neg for BigFloat {
    type Output = BigFloat;
    fn neg(self) -> BigFloat {
        BigFloat::wrap(astro_float::BigFloat::neg(&self.v), self.bits)
    }
}

impl Neg for &BigFloat {
    type Output = BigFloat;
    fn neg(self) -> BigFloat {
        BigFloat::wrap(astro_float::BigFloat::neg(&self.v), self.bits)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn rounding() {
        assert_eq!(round_scientific("1.2345e+3", 3), "1.23e3");
        assert_eq!(round_scientific("-9.996e-7", 3), "-1.00e-6");
        assert_eq!(round_scientific("9.5e+0", 1), "1e1");
    }

    #[test]
    fn rationals_and_pi() {
        let p = Precision::new(40);
        let third = BigFloat::from_rational(&rat(-1, 3), &p);
        assert_eq!(third.to_decimal(5), "-3.3333e-1");
        assert_eq!(BigFloat::pi(&p).to_decimal(30), "3.14159265358979323846264338328e0");
    }

    #[test]
    fn ln_1p_tiny() {
        let p = Precision::new(30);
        let tiny = BigFloat::parse("1e-60", &p).unwrap();
        let r = tiny.ln_1p();
        let rel = (&(&r - &tiny) / &tiny).abs();
        assert!(rel.below_pow10(50), "{}", rel);
    }

    #[test]
    fn pow10_test() {
        let p = Precision::new(20);
        let x = BigFloat::parse("3e-25", &p).unwrap();
        assert!(x.below_pow10(24));
        assert!(!x.below_pow10(26));
        assert!(BigFloat::zero(&p).below_pow10(1000));
    }
}
