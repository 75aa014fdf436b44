//! Exact expansion of the normalized log-integrals
//!
//! ```text
//! Lz(a,b) = 1/((a-1)! b!) ∫₀¹ log^{a-1}(t) log^b(1-t) / t dt
//! ```
//!
//! into rational combinations of Riemann zeta monomials, decision of which
//! odd-zeta products are ℚ(π)-linear combinations of such integrals (with
//! machine-checkable certificates), and independent high-precision numerics
//! that cross-check every symbolic identity.
//!
//! Module map:
//!
//! - [`exact`]: rationals, Bernoulli numbers, ζ(2n)/π^{2n}, exact linear algebra
//! - [`partitions`]: restricted partition sets and their counts
//! - [`coefficients`]: the binomial composition sums behind each expansion coefficient
//! - [`expansion`]: `Lz(a,b)` as a zeta combination, and even-zeta reduction to π powers
//! - [`solver`]: linear systems, certificates, and weight surveys
//! - [`numerics`]: configurable-precision zeta values, series and quadrature for `Lz`

pub mod coefficients;
pub mod error;
pub mod exact;
pub mod expansion;
pub mod numerics;
pub mod partitions;
pub mod solver;

pub use error::{Error, Result};
pub use exact::{PiPowerScalar, Rational, RationalMatrix};
pub use expansion::{PiReducedCombination, ZetaCombination, ZetaMonomial};
pub use partitions::{PartitionElement, PartitionFilter, Parity};
