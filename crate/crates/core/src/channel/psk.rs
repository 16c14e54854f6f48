//! PSK constellation mapping and minimum-angle detection.
//!
//! Constellation points sit at angles 2 pi k / M with no offset, so BPSK
//! is the real pair {+1, -1}. The error-probability expressions are
//! rotation invariant, which makes the phase reference a free choice;
//! fixing it keeps tests deterministic.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Unit-power PSK symbol for `index` in an M-ary constellation.
pub fn psk_symbol(index: u32, m_order: u32) -> Result<Complex64> {
    if m_order < 2 {
        return Err(Error::Domain("psk_symbol requires m_order >= 2"));
    }
    if index >= m_order {
        return Err(Error::Domain("psk_symbol index must be < m_order"));
    }
    if m_order == 2 {
        // Exact reals for the binary constellation.
        return Ok(Complex64::new(if index == 0 { 1.0 } else { -1.0 }, 0.0));
    }
    let angle = 2.0 * std::f64::consts::PI * f64::from(index) / f64::from(m_order);
    Ok(Complex64::new(angle.cos(), angle.sin()))
}

/// Index of the constellation point with the smallest angular distance to
/// `y`; ties break toward the lower index. `y == 0` is ambiguous and is
/// surfaced as an error for the caller to count as a symbol error.
pub fn psk_detect(y: Complex64, m_order: u32) -> Result<u32> {
    if m_order < 2 {
        return Err(Error::Domain("psk_detect requires m_order >= 2"));
    }
    if y.re == 0.0 && y.im == 0.0 {
        return Err(Error::DetectionAmbiguous);
    }
    let theta = y.arg();
    let sector = 2.0 * std::f64::consts::PI / f64::from(m_order);
    let mut best = 0u32;
    let mut best_distance = f64::INFINITY;
    for index in 0..m_order {
        let mut diff = (theta - sector * f64::from(index)).abs()
            % (2.0 * std::f64::consts::PI);
        if diff > std::f64::consts::PI {
            diff = 2.0 * std::f64::consts::PI - diff;
        }
        if diff < best_distance {
            best_distance = diff;
            best = index;
        }
    }
    Ok(best)
}
