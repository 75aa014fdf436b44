//! Exact arithmetic shared by every other module.
//!
//! Bernoulli numbers follow the convention **B₁ = −1/2**, i.e. they are the
//! coefficients of `t/(e^t − 1)`. With that convention
//! `ζ(2n) = (−1)^{n+1} B_{2n} (2π)^{2n} / (2 (2n)!)`.

mod bernoulli;
mod matrix;
mod rational;
mod scalar;

pub use bernoulli::{bernoulli_number, bernoulli_polynomial, zeta_even_pi_coeff};
pub use matrix::{solve_membership, RationalMatrix, RowSpace};
pub use rational::{
    binomial, factorial, lcm_of_denominators, parse_rational, rat, rational_str, Rational,
};
pub use scalar::PiPowerScalar;
