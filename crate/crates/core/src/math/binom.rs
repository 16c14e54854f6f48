//! Exact and log-space binomial coefficients.

use crate::error::{Error, Result};
use crate::math::gamma::ln_gamma;

/// Largest n for which C(n, k) is guaranteed exact here.
pub const MAX_EXACT_BINOMIAL_N: u32 = 64;

/// Exact binomial coefficient for 0 <= k <= n <= 64.
///
/// The multiplicative form is evaluated in u128, keeping every
/// intermediate exact; C(64, 32) is the largest value reachable and fits
/// comfortably.
pub fn binomial(n: u32, k: u32) -> Result<u64> {
    if n > MAX_EXACT_BINOMIAL_N || k > n {
        return Err(Error::BinomialRange { n, k });
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    Ok(acc as u64)
}

/// ln C(n, k) through log-gamma, for ranges past the exact path.
pub fn ln_binomial(n: u32, k: u32) -> f64 {
    debug_assert!(k <= n);
    ln_gamma(f64::from(n) + 1.0) - ln_gamma(f64::from(k) + 1.0) - ln_gamma(f64::from(n - k) + 1.0)
}
