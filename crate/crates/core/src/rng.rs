//! Counter-based splittable random streams.
//!
//! Every draw is a pure hash of (key, counter), and child streams
//! re-derive their key from (parent key, index). Trials, nodes and symbols
//! can therefore map onto disjoint substreams and be evaluated in any
//! order - including in parallel - with bit-identical results.

use num_complex::Complex64;

const GOLDEN_GAMMA: u64 = 0x9e37_79b9_7f4a_7c15;

/// SplitMix64 finalizer: a 64-bit bijective mixer with full avalanche.
#[inline]
fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// A value-semantic random stream.
///
/// Copying a stream forks its exact state; use [`RngStream::substream`] to
/// derive statistically independent children instead.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RngStream {
    key: u64,
    counter: u64,
}

impl RngStream {
    /// Root stream for a scenario seed.
    pub fn from_seed(seed: u64) -> Self {
        Self {
            key: mix64(seed ^ 0x6a09_e667_f3bc_c909),
            counter: 0,
        }
    }

    /// Child stream for `index`, independent of the parent's position and
    /// of every sibling. Splitting is free to nest.
    pub fn substream(&self, index: u64) -> Self {
        Self {
            key: mix64(self.key ^ mix64(index.wrapping_add(GOLDEN_GAMMA))),
            counter: 0,
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.counter = self.counter.wrapping_add(1);
        mix64(self.key.wrapping_add(self.counter.wrapping_mul(GOLDEN_GAMMA)))
    }

    /// Uniform on [0, 1) with 53 random bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / 9_007_199_254_740_992.0)
    }

    /// Uniform on (0, 1]; safe to pass through `ln`.
    fn next_open_f64(&mut self) -> f64 {
        ((self.next_u64() >> 11) + 1) as f64 * (1.0 / 9_007_199_254_740_992.0)
    }

    /// Uniform index in `0..bound` via the multiply-shift reduction.
    pub fn next_index(&mut self, bound: u32) -> u32 {
        debug_assert!(bound >= 1);
        ((u128::from(self.next_u64()) * u128::from(bound)) >> 64) as u32
    }

    /// A pair of independent standard normals (Box-Muller).
    pub fn next_gaussian_pair(&mut self) -> (f64, f64) {
        let radius = (-2.0 * self.next_open_f64().ln()).sqrt();
        let angle = 2.0 * std::f64::consts::PI * self.next_f64();
        let (s, c) = angle.sin_cos();
        (radius * c, radius * s)
    }

    /// Circularly-symmetric complex Gaussian with E|z|^2 = `variance`.
    pub fn next_complex_gaussian(&mut self, variance: f64) -> Complex64 {
        let scale = (0.5 * variance).sqrt();
        let (re, im) = self.next_gaussian_pair();
        Complex64::new(scale * re, scale * im)
    }
}
