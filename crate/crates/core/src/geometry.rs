//! Random node geometry on the unit disk and the far-field beampattern.
//!
//! Everything is unit-free: node radii are stored as fractions of the disk
//! radius and all lengths enter only through the ratio of disk radius to
//! carrier wavelength.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::math::bessel_j1;
use crate::rng::RngStream;

/// One collaborating node in polar coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarNode {
    /// Radial coordinate as a fraction of the disk radius, in [0, 1].
    pub radius: f64,
    /// Azimuth in radians, in [0, 2 pi).
    pub azimuth: f64,
}

/// Positions of the collaborating nodes plus the disk-radius-to-wavelength
/// ratio that scales all phase geometry.
#[derive(Debug, Clone, PartialEq)]
pub struct NodePlacement {
    nodes: Vec<PolarNode>,
    disk_radius_over_lambda: f64,
}

impl NodePlacement {
    pub fn new(nodes: Vec<PolarNode>, disk_radius_over_lambda: f64) -> Result<Self> {
        if nodes.is_empty() {
            return Err(Error::InvalidConfig("placement must be non-empty".into()));
        }
        if !(disk_radius_over_lambda > 0.0) {
            return Err(Error::InvalidConfig(
                "disk_radius_over_lambda must be > 0".into(),
            ));
        }
        for (i, node) in nodes.iter().enumerate() {
            if !(0.0..=1.0).contains(&node.radius) {
                return Err(Error::InvalidConfig(format!(
                    "node {i} radius {} outside [0, 1]",
                    node.radius
                )));
            }
            if !(0.0..2.0 * std::f64::consts::PI).contains(&node.azimuth) {
                return Err(Error::InvalidConfig(format!(
                    "node {i} azimuth {} outside [0, 2 pi)",
                    node.azimuth
                )));
            }
        }
        Ok(Self {
            nodes,
            disk_radius_over_lambda,
        })
    }

    pub fn nodes(&self) -> &[PolarNode] {
        &self.nodes
    }

    pub fn disk_radius_over_lambda(&self) -> f64 {
        self.disk_radius_over_lambda
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

/// Draw `n` node positions i.i.d. uniform over the disk: radius sqrt(u)
/// and azimuth 2 pi v, with u, v uniform.
pub fn sample_placement_with(
    n: u32,
    disk_radius_over_lambda: f64,
    stream: &mut RngStream,
) -> NodePlacement {
    assert!(n >= 1, "placement needs at least one node");
    assert!(disk_radius_over_lambda > 0.0);
    let nodes = (0..n)
        .map(|_| {
            let radius = stream.next_f64().sqrt();
            let azimuth = 2.0 * std::f64::consts::PI * stream.next_f64();
            PolarNode { radius, azimuth }
        })
        .collect();
    NodePlacement {
        nodes,
        disk_radius_over_lambda,
    }
}

/// Seeded wrapper around [`sample_placement_with`].
pub fn sample_placement(n: u32, disk_radius_over_lambda: f64, rng_seed: u64) -> NodePlacement {
    let mut stream = RngStream::from_seed(rng_seed);
    sample_placement_with(n, disk_radius_over_lambda, &mut stream)
}

/// Closed-loop initial phase: -2 pi d / lambda for a node at distance d
/// from the destination. Not reduced modulo 2 pi.
pub fn initial_phase_closed_loop(distance_over_lambda: f64) -> f64 {
    -2.0 * std::f64::consts::PI * distance_over_lambda
}

/// Open-loop initial phase from the node position relative to the disk
/// origin: 2 pi (R / lambda) (r / R) cos(phi_m - psi).
pub fn initial_phase_open_loop(
    r_over_disk_radius: f64,
    psi: f64,
    phi_m: f64,
    disk_radius_over_lambda: f64,
) -> f64 {
    2.0 * std::f64::consts::PI
        * disk_radius_over_lambda
        * r_over_disk_radius
        * (phi_m - psi).cos()
}

/// Far-field phase spread between the look direction and the target:
/// 4 pi (R / lambda) sin((phi_m - phi) / 2).
#[inline]
fn phase_spread(disk_radius_over_lambda: f64, phi: f64, phi_m: f64) -> f64 {
    4.0 * std::f64::consts::PI * disk_radius_over_lambda * (0.5 * (phi_m - phi)).sin()
}

/// Far-field array factor of the placement when the beam is steered to
/// `phi_m` and observed from direction `phi`.
///
/// Equals (1/N) sum_i exp(j alpha z_i) with z_i the projection
/// (r_i / R) sin(psi_i - (phi_m + phi)/2); exactly 1 at `phi == phi_m`.
pub fn array_factor(placement: &NodePlacement, phi: f64, phi_m: f64) -> Complex64 {
    let alpha = phase_spread(placement.disk_radius_over_lambda, phi, phi_m);
    let mid = 0.5 * (phi_m + phi);
    let n = placement.nodes.len() as f64;
    let sum = placement
        .nodes
        .iter()
        .map(|node| {
            let z = node.radius * (node.azimuth - mid).sin();
            Complex64::from_polar(1.0, alpha * z)
        })
        .sum::<Complex64>();
    sum / n
}

/// Placement-averaged beampattern in closed form:
/// 1/N + (1 - 1/N) |2 J1(alpha) / alpha|^2.
///
/// The removable singularity at alpha = 0 is evaluated through the series
/// 1 - alpha^2 / 8 for |alpha| < 1e-4, so the target direction returns
/// exactly 1.
pub fn average_beampattern_analytic(
    n: u32,
    phi: f64,
    phi_m: f64,
    disk_radius_over_lambda: f64,
) -> f64 {
    assert!(n >= 1);
    let alpha = phase_spread(disk_radius_over_lambda, phi, phi_m);
    let factor = if alpha.abs() < 1e-4 {
        1.0 - alpha * alpha / 8.0
    } else {
        2.0 * bessel_j1(alpha) / alpha
    };
    let inv_n = 1.0 / f64::from(n);
    inv_n + (1.0 - inv_n) * factor * factor
}

/// Monte Carlo mean with its standard error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EmpiricalPower {
    pub mean: f64,
    pub std_error: f64,
}

/// Monte Carlo estimate of the average beampattern: |F(phi)|^2 averaged
/// over independent placements.
///
/// Trial `t` draws its placement from substream `t` of `rng_seed`, so the
/// same seed sees the same placements at every look direction and the
/// result does not depend on evaluation order or parallelism.
pub fn average_beampattern_empirical(
    n: u32,
    phi: f64,
    phi_m: f64,
    disk_radius_over_lambda: f64,
    trials: u32,
    rng_seed: u64,
) -> EmpiricalPower {
    assert!(trials >= 1, "empirical beampattern needs at least one trial");
    let root = RngStream::from_seed(rng_seed);
    let powers: Vec<f64> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut stream = root.substream(u64::from(t));
            let placement = sample_placement_with(n, disk_radius_over_lambda, &mut stream);
            array_factor(&placement, phi, phi_m).norm_sqr()
        })
        .collect();
    // Ordered reduction keeps the estimate bit-identical across thread counts.
    let mean = powers.iter().sum::<f64>() / f64::from(trials);
    let std_error = if trials > 1 {
        let ss: f64 = powers.iter().map(|p| (p - mean) * (p - mean)).sum();
        (ss / f64::from(trials - 1)).sqrt() / f64::from(trials).sqrt()
    } else {
        0.0
    };
    EmpiricalPower { mean, std_error }
}

/// One look direction of a beampattern sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BeampatternSample {
    pub phi: f64,
    pub analytic_power: f64,
    pub empirical_power: Option<f64>,
    pub std_error: Option<f64>,
    pub target_phi: f64,
}

/// Evaluate analytic (and, when `trials > 0`, empirical) average power on
/// a grid of look directions.
pub fn beampattern_sweep(
    n: u32,
    phi_m: f64,
    disk_radius_over_lambda: f64,
    phis: &[f64],
    trials: u32,
    rng_seed: u64,
) -> Vec<BeampatternSample> {
    phis.par_iter()
        .map(|&phi| {
            let analytic_power = average_beampattern_analytic(n, phi, phi_m, disk_radius_over_lambda);
            let (empirical_power, std_error) = if trials > 0 {
                let e = average_beampattern_empirical(
                    n,
                    phi,
                    phi_m,
                    disk_radius_over_lambda,
                    trials,
                    rng_seed,
                );
                (Some(e.mean), Some(e.std_error))
            } else {
                (None, None)
            };
            BeampatternSample {
                phi,
                analytic_power,
                empirical_power,
                std_error,
                target_phi: phi_m,
            }
        })
        .collect()
}
