//! Independent high-precision numerics: zeta values, the `S_n^{(k)}`
//! table, the tail-corrected series for `Lz(a,b)`, tanh-sinh quadrature of
//! the defining integral, and cross-checks of symbolic expansions.
//!
//! Every value is computed at `P + G` decimal digits (see [`Precision`]).

mod bigfloat;
mod quadrature;
mod series;
mod stable;
mod verify;
mod zeta;

pub use bigfloat::{BigFloat, Precision};
pub use quadrature::{lz_quadrature, lz_raw_quadrature, MAX_LEVEL};
pub use series::{lz_series, lz_series_with, series_partial_sum, series_sum, SeriesConfig};
pub use stable::{build_exact_s_table, build_s_table, STable};
pub use verify::{evaluate_reduced, verify_expansion, Method, VerificationReport};
pub use zeta::zeta_value;
