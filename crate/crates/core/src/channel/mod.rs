//! Scenario normalization, random channel generation and PSK utilities.

mod config;
mod draw;
mod psk;

pub use config::{db_to_linear, linear_to_db, parse_key_values, SystemConfig, CONFIG_KEYS};
pub use draw::{draw_channel, draw_erlang_xi, ChannelDraw};
pub use psk::{psk_detect, psk_symbol};

/// Physical scales pinned by the (gamma1, gamma2) normalization.
///
/// Symbol power, gain variance and destination-noise variance are fixed at
/// one; the relay-noise variance and the combined amplitude scale
/// `mu_b` (power-control factor times path loss) carry the two SNR knobs.
/// With these choices the simulated instantaneous SINR coincides exactly
/// with its (gamma1, gamma2, K, N) form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalizedScales {
    /// Symbol power, pinned to 1.
    pub sigma_s2: f64,
    /// Source-to-relay gain variance, pinned to 1.
    pub sigma_a2: f64,
    /// Relay noise variance, 1 / gamma1.
    pub sigma_w2: f64,
    /// Power-control times path-loss amplitude, sqrt(gamma2) / N.
    pub mu_b: f64,
    /// Destination noise variance, pinned to 1.
    pub sigma_v2: f64,
}

impl NormalizedScales {
    /// Recover gamma2 (linear) from the stored scales; inverse of
    /// [`normalize`] given N.
    pub fn gamma2_linear(&self, n_collab: u32) -> f64 {
        let n = f64::from(n_collab);
        n * n * self.mu_b * self.mu_b * self.sigma_s2 * self.sigma_a2 * self.sigma_a2
            / self.sigma_v2
    }

    /// Recover gamma1 (linear) from the stored scales.
    pub fn gamma1_linear(&self) -> f64 {
        self.sigma_s2 * self.sigma_a2 / self.sigma_w2
    }

    /// Same scales with the combined amplitude multiplied by `factor`;
    /// used for transmit-power limit studies.
    pub fn with_mu_b_scaled(self, factor: f64) -> Self {
        Self {
            mu_b: self.mu_b * factor,
            ..self
        }
    }
}

/// Pin the free scales and express the config's SNRs as physical ones.
pub fn normalize(config: &SystemConfig) -> NormalizedScales {
    let n = f64::from(config.n_collab);
    NormalizedScales {
        sigma_s2: 1.0,
        sigma_a2: 1.0,
        sigma_w2: 1.0 / config.gamma1_linear(),
        mu_b: config.gamma2_linear().sqrt() / n,
        sigma_v2: 1.0,
    }
}
