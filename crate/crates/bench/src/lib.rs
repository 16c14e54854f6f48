//! Shared scenarios for the criterion benchmarks.

use cobeam_core::SystemConfig;

/// The reference scenario of the BER-vs-SNR sweep: four sources, 20 dB
/// sharing SNR, BPSK.
pub fn reference_scenario(n_collab: u32) -> SystemConfig {
    SystemConfig {
        n_collab,
        k_sources: 4,
        gamma1_db: 20.0,
        gamma2_db: 20.0,
        psk_order: 2,
        epsilon: 0.01,
        rng_seed: 1,
    }
}
