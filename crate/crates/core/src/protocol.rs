//! Monte Carlo simulation of the two-phase collision/beamform scheme at
//! the destination direction.
//!
//! Phase one: K sources transmit simultaneously and every relay hears the
//! mixture. Phase two: each relay forwards its mixture weighted by the
//! conjugate of its channel to the reinforced source, and the destination
//! sees the coherent sum. At the steered direction the geometric phase
//! factors cancel, so the simulator works with the post-cancellation
//! algebraic form directly; the geometric path lives in the beampattern
//! module.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::channel::{
    draw_channel, normalize, psk_detect, psk_symbol, ChannelDraw, NormalizedScales, SystemConfig,
};
use crate::rng::RngStream;
use crate::sep;

/// One simulated symbol slot.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrialOutcome {
    pub transmitted_index: u32,
    /// `None` when detection was ambiguous (zero received sample); always
    /// counted as a symbol error.
    pub detected_index: Option<u32>,
    pub instantaneous_sinr: f64,
}

impl TrialOutcome {
    pub fn is_symbol_error(&self) -> bool {
        self.detected_index != Some(self.transmitted_index)
    }
}

/// Monte Carlo bit/symbol error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BerEstimate {
    pub error_count: u64,
    pub trials: u64,
    pub ber: f64,
    pub stderr: f64,
}

impl BerEstimate {
    pub fn from_counts(error_count: u64, trials: u64) -> Self {
        assert!(trials >= 1);
        let ber = error_count as f64 / trials as f64;
        let stderr = (ber * (1.0 - ber) / trials as f64).sqrt();
        Self {
            error_count,
            trials,
            ber,
            stderr,
        }
    }
}

/// Received sample at the destination of source `m`:
/// mu_b sum_i |a_mi|^2 s_m + mu_b sum_i a_mi^* (sum_{j != m} a_ji s_j + w_i) + v.
pub fn received_sample(
    draw: &ChannelDraw,
    symbols: &[Complex64],
    m: usize,
    scales: &NormalizedScales,
) -> Complex64 {
    debug_assert_eq!(symbols.len(), draw.k_sources());
    let mut desired_gain = 0.0;
    let mut disturbance = Complex64::new(0.0, 0.0);
    for i in 0..draw.n_collab() {
        let a_mi = draw.gain(m, i);
        desired_gain += a_mi.norm_sqr();
        let mut eta = draw.relay_noise(i);
        for (j, s) in symbols.iter().enumerate() {
            if j != m {
                eta += draw.gain(j, i) * s;
            }
        }
        disturbance += a_mi.conj() * eta;
    }
    scales.mu_b * desired_gain * symbols[m] + scales.mu_b * disturbance + draw.dest_noise()
}

/// Simulate one slot: draw channels and symbols, form the received sample,
/// detect, and evaluate the instantaneous SINR from the same draw.
///
/// The reinforced source is index 0; symmetry makes the choice immaterial.
pub fn simulate_symbol(
    config: &SystemConfig,
    scales: &NormalizedScales,
    stream: &mut RngStream,
) -> TrialOutcome {
    let draw = draw_channel(scales, config.k_sources, config.n_collab, stream);
    let indices: Vec<u32> = (0..config.k_sources)
        .map(|_| stream.next_index(config.psk_order))
        .collect();
    let symbols: Vec<Complex64> = indices
        .iter()
        .map(|&i| psk_symbol(i, config.psk_order).expect("index drawn below order"))
        .collect();

    let y = received_sample(&draw, &symbols, 0, scales);
    let detected_index = psk_detect(y, config.psk_order).ok();
    let xi = draw.desired_channel_power(0);
    TrialOutcome {
        transmitted_index: indices[0],
        detected_index,
        instantaneous_sinr: sep::instantaneous_sinr(xi, config.k_sources, scales),
    }
}

/// Estimate the symbol error rate over `trials` independent slots.
///
/// Trial `t` runs on substream `t` of the config seed, so the estimate is
/// bit-identical however the trials are scheduled.
pub fn estimate_ber(config: &SystemConfig, trials: u64) -> BerEstimate {
    let scales = normalize(config);
    estimate_ber_with_scales(config, &scales, trials)
}

/// [`estimate_ber`] against explicit scales, for limit studies.
pub fn estimate_ber_with_scales(
    config: &SystemConfig,
    scales: &NormalizedScales,
    trials: u64,
) -> BerEstimate {
    assert!(trials >= 1);
    config.validate().expect("valid config");
    let root = RngStream::from_seed(config.rng_seed);
    let error_count: u64 = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut stream = root.substream(t);
            u64::from(simulate_symbol(config, scales, &mut stream).is_symbol_error())
        })
        .sum();
    BerEstimate::from_counts(error_count, trials)
}

/// Monte Carlo mean of the instantaneous SINR over `trials` slots.
pub fn empirical_sinr_mean(config: &SystemConfig, trials: u64) -> f64 {
    assert!(trials >= 1);
    config.validate().expect("valid config");
    let scales = normalize(config);
    let root = RngStream::from_seed(config.rng_seed);
    let sinrs: Vec<f64> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut stream = root.substream(t);
            simulate_symbol(config, &scales, &mut stream).instantaneous_sinr
        })
        .collect();
    // Ordered reduction for scheduling-independent results.
    sinrs.iter().sum::<f64>() / trials as f64
}

/// Throughput bracket for K simultaneous sources: K/(K+1) packets per slot
/// from the two-phase overhead below, K/2 above.
pub fn throughput_bounds(k_sources: u32) -> (f64, f64) {
    assert!(k_sources >= 1);
    let k = f64::from(k_sources);
    (k / (k + 1.0), k / 2.0)
}

/// Asymptotic SINR penalty of mixing K sources relative to a dedicated
/// single-source beamforming round: K + 1 + 1/gamma1.
pub fn sinr_penalty_beta(k_sources: u32, gamma1_linear: f64) -> f64 {
    assert!(k_sources >= 1 && gamma1_linear > 0.0);
    f64::from(k_sources) + 1.0 + 1.0 / gamma1_linear
}
