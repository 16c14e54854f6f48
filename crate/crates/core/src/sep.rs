//! Analytic symbol-error-probability machinery.
//!
//! Conditioned on the aggregate desired-channel power xi, the relayed
//! M-PSK link sees circular Gaussian interference-plus-noise, so its SEP
//! is the classic single-angle integral of the SINR's moment generating
//! function. xi is Erlang distributed, which gives:
//!
//! * an exact SEP as a double integral (angle times xi), evaluated here by
//!   nested adaptive quadrature;
//! * a closed-form upper bound obtained by replacing the SINR with a
//!   quantile-anchored surrogate that is linear in xi (and therefore
//!   Erlang itself);
//! * a one-line looser bound on top of that;
//! * two limiting regimes: the Gaussian-noise floor as the relay count
//!   grows, and the interference floor as transmit power grows.

use std::f64::consts::PI;

use crate::channel::{normalize, NormalizedScales, SystemConfig};
use crate::error::{Error, Result};
use crate::math::{
    binomial, erlang_quantile, integrate_1d, ln_binomial, ln_gamma, QuadratureSpec,
};

/// Mass discarded when the semi-infinite xi integral is truncated at the
/// matching Erlang quantile. The integrand never exceeds the density, so
/// this also bounds the truncation error.
const XI_TAIL_MASS: f64 = 1e-12;

/// How a [`SepEstimate`] was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SepMethod {
    MonteCarlo,
    ExactQuadrature,
    ClosedBound,
    SimpleBound,
    AwgnFloor,
    PowerFloor,
}

impl SepMethod {
    pub const ALL: [SepMethod; 6] = [
        SepMethod::MonteCarlo,
        SepMethod::ExactQuadrature,
        SepMethod::ClosedBound,
        SepMethod::SimpleBound,
        SepMethod::AwgnFloor,
        SepMethod::PowerFloor,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            SepMethod::MonteCarlo => "monte_carlo",
            SepMethod::ExactQuadrature => "exact_quadrature",
            SepMethod::ClosedBound => "closed_bound",
            SepMethod::SimpleBound => "simple_bound",
            SepMethod::AwgnFloor => "awgn_floor",
            SepMethod::PowerFloor => "power_floor",
        }
    }
}

impl std::fmt::Display for SepMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for SepMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SepMethod::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::ConfigParse(format!("unknown SEP method '{s}'")))
    }
}

/// A symbol-error-probability value with its provenance and, when the
/// method carries one, an uncertainty (standard error for Monte Carlo,
/// quadrature error bound for the exact integral).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SepEstimate {
    pub value: f64,
    pub method: SepMethod,
    pub uncertainty: Option<f64>,
}

/// Quantities of the quantile-anchored surrogate SINR.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurrogateParams {
    /// Lower epsilon-quantile of xi.
    pub xi0: f64,
    /// Slope of the surrogate SINR in xi.
    pub c_gamma: f64,
    /// Per-branch bound parameter sin^2(pi/M) sigma_a^2 c_gamma.
    pub c: f64,
    /// sqrt(c / (1 + c)) cot(pi / M).
    pub zeta: f64,
}

/// Per-relay interference-plus-noise variance (K - 1) sigma_a^2 sigma_s^2
/// + sigma_w^2.
pub fn sigma_eta2(k_sources: u32, scales: &NormalizedScales) -> f64 {
    assert!(k_sources >= 1);
    f64::from(k_sources - 1) * scales.sigma_a2 * scales.sigma_s2 + scales.sigma_w2
}

/// Instantaneous SINR for aggregate desired-channel power `xi`:
/// mu_b^2 xi^2 sigma_s^2 / (mu_b^2 xi sigma_eta^2 + sigma_v^2).
pub fn instantaneous_sinr(xi: f64, k_sources: u32, scales: &NormalizedScales) -> f64 {
    debug_assert!(xi >= 0.0);
    if xi == 0.0 {
        return 0.0;
    }
    let mu2 = scales.mu_b * scales.mu_b;
    mu2 * xi * xi * scales.sigma_s2 / (mu2 * xi * sigma_eta2(k_sources, scales) + scales.sigma_v2)
}

/// The same SINR written in normalized form, as a function of
/// xi_tilde = xi / sigma_a^2 and the (gamma1, gamma2, K, N) parameters:
/// (xi_tilde^2 / N^2) / ((K - 1 + 1/gamma1) xi_tilde / N^2 + 1/gamma2).
pub fn rewritten_sinr(
    xi_tilde: f64,
    n_collab: u32,
    k_sources: u32,
    gamma1_linear: f64,
    gamma2_linear: f64,
) -> f64 {
    if xi_tilde == 0.0 {
        return 0.0;
    }
    let n2 = f64::from(n_collab) * f64::from(n_collab);
    let load = (f64::from(k_sources - 1) + 1.0 / gamma1_linear) / n2;
    (xi_tilde * xi_tilde / n2) / (load * xi_tilde + 1.0 / gamma2_linear)
}

fn sin2_pi_over_m(m_order: u32) -> f64 {
    if m_order == 2 {
        1.0
    } else {
        let s = (PI / f64::from(m_order)).sin();
        s * s
    }
}

fn upper_angle(m_order: u32) -> f64 {
    f64::from(m_order - 1) * PI / f64::from(m_order)
}

/// Exact average SEP: the angle integral of the SINR's MGF, with the
/// inner xi average truncated at the (1 - 1e-12) Erlang quantile.
pub fn exact_sep(config: &SystemConfig, quad: &QuadratureSpec) -> Result<SepEstimate> {
    config.validate()?;
    let scales = normalize(config);
    exact_sep_scaled(
        &scales,
        config.n_collab,
        config.k_sources,
        config.psk_order,
        quad,
    )
}

/// [`exact_sep`] against explicit physical scales, for limit studies that
/// move `mu_b` away from its normalized value.
pub fn exact_sep_scaled(
    scales: &NormalizedScales,
    n_collab: u32,
    k_sources: u32,
    m_order: u32,
    quad: &QuadratureSpec,
) -> Result<SepEstimate> {
    quad.validate()?;
    let theta = scales.sigma_a2;
    let xi_max = erlang_quantile(1.0 - XI_TAIL_MASS, n_collab, theta)?;
    let nf = f64::from(n_collab);
    let ln_norm = -nf * theta.ln() - ln_gamma(nf);
    let density = move |xi: f64| ((nf - 1.0) * xi.ln() - xi / theta + ln_norm).exp();

    let g = sin2_pi_over_m(m_order);
    let s_eta2 = sigma_eta2(k_sources, scales);
    let mu2 = scales.mu_b * scales.mu_b;
    let sinr = move |xi: f64| {
        mu2 * xi * xi * scales.sigma_s2 / (mu2 * xi * s_eta2 + scales.sigma_v2)
    };

    // Inner tolerances two decades tighter than the requested combined
    // tolerance, so the outer integral dominates the error budget.
    let inner_spec = QuadratureSpec {
        abs_tol: quad.abs_tol * 1e-2,
        rel_tol: quad.rel_tol * 1e-2,
        max_subdivisions: quad.max_subdivisions,
    };

    let inner_failure = std::cell::RefCell::new(None);
    let outer_integrand = |phi: f64| -> f64 {
        let sin_phi = phi.sin();
        let s_factor = g / (sin_phi * sin_phi);
        if !s_factor.is_finite() {
            return 0.0;
        }
        // For large s_factor the integrand collapses into a boundary layer
        // at xi = 0 that a single panel over [0, xi_max] would sample as
        // identically zero. Split at ten times the xi where the exponent
        // reaches unity so the layer always holds quadrature nodes.
        let cut = if mu2 > 0.0 {
            let a = mu2 * scales.sigma_s2 * s_factor;
            let b = mu2 * s_eta2;
            let delta = (b + (b * b + 4.0 * a * scales.sigma_v2).sqrt()) / (2.0 * a);
            (10.0 * delta).min(0.5 * xi_max)
        } else {
            0.5 * xi_max
        };

        let f = |xi: f64| (-s_factor * sinr(xi)).exp() * density(xi);
        let mut total = 0.0;
        for (a, b) in [(0.0, cut), (cut, xi_max)] {
            if !(a < b) {
                continue;
            }
            match integrate_1d(f, a, b, &inner_spec) {
                Ok(r) => total += r.value,
                Err(e) => {
                    let mut slot = inner_failure.borrow_mut();
                    if slot.is_none() {
                        *slot = Some(e);
                    }
                    return 0.0;
                }
            }
        }
        total
    };

    let outer = integrate_1d(outer_integrand, 0.0, upper_angle(m_order), quad);
    if let Some(e) = inner_failure.into_inner() {
        return Err(e);
    }
    let outer = outer?;
    Ok(SepEstimate {
        value: (outer.value / PI).max(0.0),
        method: SepMethod::ExactQuadrature,
        uncertainty: Some(outer.abs_error / PI),
    })
}

/// Parameters of the quantile-anchored surrogate SINR for `config`.
pub fn surrogate_params(config: &SystemConfig) -> Result<SurrogateParams> {
    config.validate()?;
    let scales = normalize(config);
    surrogate_params_scaled(
        &scales,
        config.n_collab,
        config.k_sources,
        config.psk_order,
        config.epsilon,
    )
}

/// [`surrogate_params`] against explicit scales.
pub fn surrogate_params_scaled(
    scales: &NormalizedScales,
    n_collab: u32,
    k_sources: u32,
    m_order: u32,
    epsilon: f64,
) -> Result<SurrogateParams> {
    let xi0 = erlang_quantile(epsilon, n_collab, scales.sigma_a2)?;
    let mu2 = scales.mu_b * scales.mu_b;
    let c_gamma =
        mu2 * scales.sigma_s2 / (mu2 * sigma_eta2(k_sources, scales) + scales.sigma_v2 / xi0);
    let c = sin2_pi_over_m(m_order) * scales.sigma_a2 * c_gamma;
    let zeta = (c / (1.0 + c)).sqrt() * cot_pi_over_m(m_order);
    Ok(SurrogateParams {
        xi0,
        c_gamma,
        c,
        zeta,
    })
}

fn cot_pi_over_m(m_order: u32) -> f64 {
    if m_order == 2 {
        0.0
    } else {
        1.0 / (PI / f64::from(m_order)).tan()
    }
}

/// Closed-form upper bound on the exact SEP: the M-PSK SEP of the
/// Erlang-distributed surrogate SINR.
pub fn closed_form_bound(config: &SystemConfig) -> Result<SepEstimate> {
    config.validate()?;
    let params = surrogate_params(config)?;
    Ok(SepEstimate {
        value: psk_erlang_sep(params.c, config.n_collab, config.psk_order)?,
        method: SepMethod::ClosedBound,
        uncertainty: None,
    })
}

/// SEP of M-PSK when the SINR is Erlang(n) with per-branch parameter `c`:
/// (1/pi) int_0^{(M-1)pi/M} (1 + c/sin^2 phi)^{-n} d phi, evaluated in
/// closed form through the finite binomial sums.
///
/// Exact integer binomials are used while they fit; terms past that range
/// switch to log-space coefficients. For n beyond the binomial range the
/// defining integral is evaluated numerically instead.
fn psk_erlang_sep(c: f64, n_collab: u32, m_order: u32) -> Result<f64> {
    debug_assert!(c >= 0.0);
    let n = n_collab;
    if n > crate::math::MAX_EXACT_BINOMIAL_N {
        return psk_erlang_sep_quadrature(c, n, m_order);
    }

    let m_ratio = f64::from(m_order - 1) / f64::from(m_order);
    if c == 0.0 {
        return Ok(m_ratio);
    }

    let v = (c / (1.0 + c)).sqrt();
    let zeta = v * cot_pi_over_m(m_order);
    let theta_z = zeta.atan();
    let (sin_t, cos_t) = theta_z.sin_cos();
    let one_plus_c = 1.0 + c;

    // sum over n of C(2n, n) / [4 (1 + c)]^n.
    let mut sum1 = 0.0;
    for i in 0..n {
        sum1 += central_term(i, one_plus_c);
    }

    // Double sum of T_{j,i} (1 + c)^{-i} cos^{2(i - j) + 1}.
    let mut sum2 = 0.0;
    for i in 1..n {
        let decay = one_plus_c.powi(i as i32);
        for j in 1..=i {
            let t = t_coefficient(i, j);
            let cos_pow = cos_t.powi(2 * (i - j) as i32 + 1);
            sum2 += t / decay * cos_pow;
        }
    }

    let value = m_ratio - (v / PI) * ((PI / 2.0 + theta_z) * sum1 + sin_t * sum2);
    Ok(value.max(0.0))
}

/// C(2i, i) / [4 (1 + c)]^i.
fn central_term(i: u32, one_plus_c: f64) -> f64 {
    if 2 * i <= crate::math::MAX_EXACT_BINOMIAL_N {
        let central = binomial(2 * i, i).expect("within exact range") as f64;
        central / (4.0 * one_plus_c).powi(i as i32)
    } else {
        (ln_binomial(2 * i, i) - f64::from(i) * (4.0 * one_plus_c).ln()).exp()
    }
}

/// T_{j,i} = C(2i, i) / ( C(2(i-j), i-j) 4^j [2(i-j) + 1] ).
fn t_coefficient(i: u32, j: u32) -> f64 {
    debug_assert!(1 <= j && j <= i);
    let rem = i - j;
    let odd = f64::from(2 * rem + 1);
    if 2 * i <= crate::math::MAX_EXACT_BINOMIAL_N {
        let top = binomial(2 * i, i).expect("within exact range") as f64;
        let bottom = binomial(2 * rem, rem).expect("within exact range") as f64;
        top / (bottom * 4f64.powi(j as i32) * odd)
    } else {
        (ln_binomial(2 * i, i) - ln_binomial(2 * rem, rem) - f64::from(j) * 4f64.ln()).exp() / odd
    }
}

/// Numerical fallback for shapes past the exact-binomial range.
fn psk_erlang_sep_quadrature(c: f64, n_collab: u32, m_order: u32) -> Result<f64> {
    let spec = QuadratureSpec::new(1e-11, 1e-11, 1024)?;
    let n = i32::try_from(n_collab).expect("n_collab fits i32");
    let r = integrate_1d(
        |phi| {
            let s2 = phi.sin().powi(2);
            (1.0 + c / s2).powi(-n)
        },
        0.0,
        upper_angle(m_order),
        &spec,
    )?;
    Ok((r.value / PI).max(0.0))
}

/// One-line bound: ((M-1)/M) (1 + c / sin^2((M-1)pi/M))^{-N}.
///
/// For BPSK this is exactly (1/2) (1 + sigma_a^2 c_gamma)^{-N}.
pub fn simple_bound(config: &SystemConfig) -> Result<SepEstimate> {
    config.validate()?;
    let params = surrogate_params(config)?;
    let m = config.psk_order;
    let sin2_edge = if m == 2 {
        1.0
    } else {
        let s = (f64::from(m - 1) * PI / f64::from(m)).sin();
        s * s
    };
    let m_ratio = f64::from(m - 1) / f64::from(m);
    let value = m_ratio * (1.0 + params.c / sin2_edge).powi(-(config.n_collab as i32));
    Ok(SepEstimate {
        value,
        method: SepMethod::SimpleBound,
        uncertainty: None,
    })
}

/// SEP at the deterministic large-N SINR gamma2: the Gaussian-noise-only
/// floor that no relay count can beat.
pub fn awgn_floor(config: &SystemConfig) -> Result<SepEstimate> {
    config.validate()?;
    Ok(SepEstimate {
        value: awgn_psk_sep(config.gamma2_linear(), config.psk_order)?,
        method: SepMethod::AwgnFloor,
        uncertainty: None,
    })
}

/// M-PSK SEP at a fixed SNR `gamma` over a Gaussian channel:
/// (1/pi) int_0^{(M-1)pi/M} exp(-gamma sin^2(pi/M) / sin^2 phi) d phi.
pub fn awgn_psk_sep(gamma_linear: f64, m_order: u32) -> Result<f64> {
    let g = sin2_pi_over_m(m_order);
    let spec = QuadratureSpec::new(1e-12, 1e-12, 1024)?;
    let r = integrate_1d(
        |phi| {
            let s2 = phi.sin().powi(2);
            (-gamma_linear * g / s2).exp()
        },
        0.0,
        upper_angle(m_order),
        &spec,
    )?;
    Ok(r.value / PI)
}

/// Infinite-transmit-power floor: the closed-form bound evaluated at the
/// power-independent surrogate slope sigma_s^2 / sigma_eta^2.
///
/// The degenerate interference-free case (K = 1 with zero relay noise) has
/// no finite slope; its floor is zero because unlimited power with no
/// interference is error-free.
pub fn power_floor(config: &SystemConfig) -> Result<SepEstimate> {
    config.validate()?;
    let scales = normalize(config);
    power_floor_scaled(&scales, config.n_collab, config.k_sources, config.psk_order)
}

/// [`power_floor`] against explicit scales. Only this entry point can
/// reach the degenerate zero-interference case, since configs always
/// carry finite relay noise.
pub fn power_floor_scaled(
    scales: &NormalizedScales,
    n_collab: u32,
    k_sources: u32,
    m_order: u32,
) -> Result<SepEstimate> {
    let s_eta2 = sigma_eta2(k_sources, scales);
    let value = if s_eta2 == 0.0 {
        0.0
    } else {
        let c_inf = sin2_pi_over_m(m_order) * scales.sigma_a2 * scales.sigma_s2 / s_eta2;
        psk_erlang_sep(c_inf, n_collab, m_order)?
    };
    Ok(SepEstimate {
        value,
        method: SepMethod::PowerFloor,
        uncertainty: None,
    })
}

/// Mix per-K SEPs under a distribution of the number of simultaneously
/// transmitting sources. `p_of_k[i]` weights `per_k[i]`; the weights must
/// sum to one.
pub fn mixture_sep(p_of_k: &[f64], per_k: &[SepEstimate]) -> Result<SepEstimate> {
    if p_of_k.len() != per_k.len() {
        return Err(Error::LengthMismatch {
            left: p_of_k.len(),
            right: per_k.len(),
        });
    }
    if p_of_k.is_empty() {
        return Err(Error::Domain("mixture_sep needs at least one component"));
    }
    let total: f64 = p_of_k.iter().sum();
    if (total - 1.0).abs() > 1e-9 {
        return Err(Error::InvalidConfig(format!(
            "mixture weights sum to {total}, expected 1"
        )));
    }
    let value = p_of_k
        .iter()
        .zip(per_k)
        .map(|(p, e)| p * e.value)
        .sum::<f64>();
    let uncertainty = per_k
        .iter()
        .map(|e| e.uncertainty)
        .collect::<Option<Vec<_>>>()
        .map(|us| {
            us.iter()
                .zip(p_of_k)
                .map(|(u, p)| (p * u) * (p * u))
                .sum::<f64>()
                .sqrt()
        });
    Ok(SepEstimate {
        value,
        method: per_k[0].method,
        uncertainty,
    })
}
