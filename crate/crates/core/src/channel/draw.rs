//! Random channel, noise and aggregate-power draws for one slot.

use num_complex::Complex64;

use crate::channel::NormalizedScales;
use crate::rng::RngStream;

/// One slot's worth of randomness: the K x N source-to-relay gain matrix,
/// per-relay noise, and the destination noise sample.
#[derive(Debug, Clone, PartialEq)]
pub struct ChannelDraw {
    gains: Vec<Complex64>,
    k_sources: usize,
    n_collab: usize,
    relay_noise: Vec<Complex64>,
    dest_noise: Complex64,
}

impl ChannelDraw {
    /// Gain between source `j` and relay `i`.
    #[inline]
    pub fn gain(&self, source: usize, relay: usize) -> Complex64 {
        debug_assert!(source < self.k_sources && relay < self.n_collab);
        self.gains[source * self.n_collab + relay]
    }

    #[inline]
    pub fn relay_noise(&self, relay: usize) -> Complex64 {
        self.relay_noise[relay]
    }

    #[inline]
    pub fn dest_noise(&self) -> Complex64 {
        self.dest_noise
    }

    pub fn k_sources(&self) -> usize {
        self.k_sources
    }

    pub fn n_collab(&self) -> usize {
        self.n_collab
    }

    /// Aggregate desired-channel power xi = sum_i |a_{mi}|^2 for source `m`.
    pub fn desired_channel_power(&self, source: usize) -> f64 {
        (0..self.n_collab)
            .map(|i| self.gain(source, i).norm_sqr())
            .sum()
    }
}

/// Draw one slot: gains are i.i.d. circular complex Gaussian with variance
/// `sigma_a2`, relay noise with variance `sigma_w2`, destination noise with
/// variance `sigma_v2`. Draw order is fixed (gains row-major by source,
/// then relay noise, then destination noise) so a given stream position
/// always yields the same draw.
pub fn draw_channel(
    scales: &NormalizedScales,
    k_sources: u32,
    n_collab: u32,
    stream: &mut RngStream,
) -> ChannelDraw {
    assert!(k_sources >= 1 && n_collab >= 1);
    let (k, n) = (k_sources as usize, n_collab as usize);

    let mut gains = Vec::with_capacity(k * n);
    for _ in 0..k * n {
        gains.push(stream.next_complex_gaussian(scales.sigma_a2));
    }
    let mut relay_noise = Vec::with_capacity(n);
    for _ in 0..n {
        relay_noise.push(stream.next_complex_gaussian(scales.sigma_w2));
    }
    let dest_noise = stream.next_complex_gaussian(scales.sigma_v2);

    ChannelDraw {
        gains,
        k_sources: k,
        n_collab: n,
        relay_noise,
        dest_noise,
    }
}

/// Sum of `n` squared moduli of i.i.d. CN(0, scale) draws - an
/// Erlang(n, scale) variate realized through the physical channel gains.
pub fn draw_erlang_xi(n: u32, scale: f64, stream: &mut RngStream) -> f64 {
    assert!(n >= 1 && scale > 0.0);
    (0..n)
        .map(|_| stream.next_complex_gaussian(scale).norm_sqr())
        .sum()
}
