//! Self-contained special functions and quadrature.
//!
//! Nothing in here knows about channels or beampatterns; the rest of the
//! crate builds on these primitives.

mod bessel;
mod binom;
mod gamma;
mod quad;

pub use bessel::bessel_j1;
pub use binom::{binomial, ln_binomial, MAX_EXACT_BINOMIAL_N};
pub use gamma::{erlang_cdf, erlang_pdf, erlang_quantile, gamma_p, ln_gamma};
pub use quad::{integrate_1d, QuadResult, QuadratureSpec};
