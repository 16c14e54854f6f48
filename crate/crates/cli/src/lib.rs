//! Experiment runner: sweeps the simulator and the analytic SEP methods
//! over scenario grids and writes CSV, one row per
//! (sweep value x N-curve x method).
//!
//! Five built-in experiments cover the standard study set: BER against
//! destination SNR, relay count, source count and sharing SNR, plus the
//! average-beampattern sweep. Custom runs load the same spec format from
//! a file.

use std::fmt;
use std::path::{Path, PathBuf};

use cobeam_core::channel::parse_key_values;
use cobeam_core::geometry::beampattern_sweep;
use cobeam_core::math::QuadratureSpec;
use cobeam_core::protocol::estimate_ber;
use cobeam_core::sep::{
    awgn_floor, closed_form_bound, exact_sep, power_floor, simple_bound, SepMethod,
};
use cobeam_core::{Error as CoreError, SystemConfig};

/// Slack applied to analytic bound-ordering checks during a run.
const ORDERING_SLACK: f64 = 1e-7;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, CliError>;

/// The built-in experiment families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExperimentKind {
    Fig1BerVsGamma2,
    Fig2BerVsN,
    Fig3BerVsK,
    Fig4BerVsGamma1,
    Beampattern,
}

impl ExperimentKind {
    pub const ALL: [ExperimentKind; 5] = [
        ExperimentKind::Fig1BerVsGamma2,
        ExperimentKind::Fig2BerVsN,
        ExperimentKind::Fig3BerVsK,
        ExperimentKind::Fig4BerVsGamma1,
        ExperimentKind::Beampattern,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            ExperimentKind::Fig1BerVsGamma2 => "fig1_ber_vs_gamma2",
            ExperimentKind::Fig2BerVsN => "fig2_ber_vs_n",
            ExperimentKind::Fig3BerVsK => "fig3_ber_vs_k",
            ExperimentKind::Fig4BerVsGamma1 => "fig4_ber_vs_gamma1",
            ExperimentKind::Beampattern => "beampattern",
        }
    }

    /// Accepts the full kind name or the short `--figure` spellings
    /// (`1`..`4`, `fig1`..`fig4`, `beampattern`).
    pub fn parse_flag(s: &str) -> Result<Self> {
        let normalized = s.trim().to_ascii_lowercase();
        let found = match normalized.as_str() {
            "1" | "fig1" => Some(ExperimentKind::Fig1BerVsGamma2),
            "2" | "fig2" => Some(ExperimentKind::Fig2BerVsN),
            "3" | "fig3" => Some(ExperimentKind::Fig3BerVsK),
            "4" | "fig4" => Some(ExperimentKind::Fig4BerVsGamma1),
            _ => ExperimentKind::ALL.into_iter().find(|k| k.name() == normalized),
        };
        found.ok_or_else(|| {
            CoreError::ConfigParse(format!(
                "unknown figure '{s}' (expected 1, 2, 3, 4 or beampattern)"
            ))
            .into()
        })
    }
}

impl fmt::Display for ExperimentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Variables a sweep may range over: any scenario field, or the look
/// direction for beampattern sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepVar {
    NCollab,
    KSources,
    Gamma1Db,
    Gamma2Db,
    PskOrder,
    Epsilon,
    Phi,
}

impl SweepVar {
    pub const ALL: [SweepVar; 7] = [
        SweepVar::NCollab,
        SweepVar::KSources,
        SweepVar::Gamma1Db,
        SweepVar::Gamma2Db,
        SweepVar::PskOrder,
        SweepVar::Epsilon,
        SweepVar::Phi,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            SweepVar::NCollab => "n_collab",
            SweepVar::KSources => "k_sources",
            SweepVar::Gamma1Db => "gamma1_db",
            SweepVar::Gamma2Db => "gamma2_db",
            SweepVar::PskOrder => "psk_order",
            SweepVar::Epsilon => "epsilon",
            SweepVar::Phi => "phi",
        }
    }
}

impl fmt::Display for SweepVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for SweepVar {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        SweepVar::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| CoreError::ConfigParse(format!("invalid sweep variable '{s}'")).into())
    }
}

/// A full experiment description: base scenario, the swept variable and
/// its values, the per-curve relay counts, trial budget, SEP methods and
/// output location.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentSpec {
    pub kind: ExperimentKind,
    pub base: SystemConfig,
    /// Relay counts drawn as separate curves; empty means "use
    /// `base.n_collab`". Must be empty when the sweep variable is
    /// `n_collab` itself.
    pub n_curves: Vec<u32>,
    pub sweep_var: SweepVar,
    pub sweep_values: Vec<f64>,
    pub trials: u64,
    pub methods: Vec<SepMethod>,
    pub output_path: PathBuf,
    /// Disk radius over wavelength (beampattern only). A free parameter
    /// of the geometry; 2.0 is this project's default and is flagged in
    /// the CSV output.
    pub disk_radius_over_lambda: f64,
    /// Steered direction phi_m (beampattern only).
    pub target_phi: f64,
}

impl ExperimentSpec {
    pub fn validate(&self) -> Result<()> {
        self.base.validate()?;
        if self.sweep_values.is_empty() {
            return Err(CoreError::InvalidConfig("sweep_values must be non-empty".into()).into());
        }
        if self.sweep_values.windows(2).any(|w| w[0] > w[1]) {
            return Err(CoreError::InvalidConfig("sweep_values must be sorted".into()).into());
        }
        if self.sweep_var == SweepVar::NCollab && !self.n_curves.is_empty() {
            return Err(CoreError::InvalidConfig(
                "n_curves must be empty when sweeping n_collab".into(),
            )
            .into());
        }
        match (self.kind, self.sweep_var) {
            (ExperimentKind::Beampattern, SweepVar::Phi) => {}
            (ExperimentKind::Beampattern, _) => {
                return Err(CoreError::InvalidConfig(
                    "beampattern experiments sweep phi".into(),
                )
                .into())
            }
            (_, SweepVar::Phi) => {
                return Err(CoreError::InvalidConfig(
                    "phi sweeps require the beampattern kind".into(),
                )
                .into())
            }
            _ => {}
        }
        if self.kind != ExperimentKind::Beampattern {
            if self.methods.is_empty() {
                return Err(
                    CoreError::InvalidConfig("methods must be non-empty".into()).into()
                );
            }
            if self.methods.contains(&SepMethod::MonteCarlo) && self.trials == 0 {
                return Err(CoreError::InvalidConfig(
                    "monte_carlo method needs trials >= 1".into(),
                )
                .into());
            }
        }
        if self.kind == ExperimentKind::Beampattern && !(self.disk_radius_over_lambda > 0.0) {
            return Err(CoreError::InvalidConfig(
                "disk_radius_over_lambda must be > 0".into(),
            )
            .into());
        }
        Ok(())
    }

    /// Serialize in the flat key-value format.
    pub fn to_key_values(&self) -> String {
        fn push(out: &mut String, key: &str, value: String) {
            out.push_str(key);
            out.push_str(" = ");
            out.push_str(&value);
            out.push('\n');
        }
        let mut out = String::new();
        push(&mut out, "kind", self.kind.name().to_string());
        out.push_str(&self.base.to_key_values());
        push(
            &mut out,
            "n_curves",
            self.n_curves
                .iter()
                .map(u32::to_string)
                .collect::<Vec<_>>()
                .join(","),
        );
        push(&mut out, "sweep_var", self.sweep_var.name().to_string());
        push(
            &mut out,
            "sweep_values",
            self.sweep_values
                .iter()
                .map(f64::to_string)
                .collect::<Vec<_>>()
                .join(","),
        );
        push(&mut out, "trials", self.trials.to_string());
        push(
            &mut out,
            "methods",
            self.methods
                .iter()
                .map(|m| m.name().to_string())
                .collect::<Vec<_>>()
                .join(","),
        );
        push(&mut out, "output_path", self.output_path.display().to_string());
        push(
            &mut out,
            "disk_radius_over_lambda",
            self.disk_radius_over_lambda.to_string(),
        );
        push(&mut out, "target_phi", self.target_phi.to_string());
        out
    }

    /// Parse the flat key-value format written by [`Self::to_key_values`].
    pub fn from_key_values(text: &str) -> Result<Self> {
        let mut kind = None;
        let mut base_lines = String::new();
        let mut n_curves = None;
        let mut sweep_var = None;
        let mut sweep_values = None;
        let mut trials = None;
        let mut methods = None;
        let mut output_path = None;
        let mut ratio = None;
        let mut target_phi = None;

        for (key, value) in parse_key_values(text)? {
            match key.as_str() {
                "kind" => kind = Some(ExperimentKind::parse_flag(&value)?),
                k if cobeam_core::channel::CONFIG_KEYS.contains(&k) => {
                    base_lines.push_str(&format!("{key} = {value}\n"));
                }
                "n_curves" => {
                    n_curves = Some(parse_list::<u32>(&value, "n_curves")?);
                }
                "sweep_var" => sweep_var = Some(value.parse::<SweepVar>()?),
                "sweep_values" => {
                    sweep_values = Some(parse_list::<f64>(&value, "sweep_values")?);
                }
                "trials" => {
                    trials = Some(value.parse().map_err(|_| {
                        CoreError::ConfigParse(format!("invalid trials '{value}'"))
                    })?)
                }
                "methods" => methods = Some(parse_methods(&value)?),
                "output_path" => output_path = Some(PathBuf::from(value)),
                "disk_radius_over_lambda" => {
                    ratio = Some(value.parse().map_err(|_| {
                        CoreError::ConfigParse(format!("invalid ratio '{value}'"))
                    })?)
                }
                "target_phi" => {
                    target_phi = Some(value.parse().map_err(|_| {
                        CoreError::ConfigParse(format!("invalid target_phi '{value}'"))
                    })?)
                }
                other => {
                    return Err(
                        CoreError::ConfigParse(format!("unknown key '{other}'")).into()
                    )
                }
            }
        }

        let missing =
            |what: &str| CliError::from(CoreError::ConfigParse(format!("missing key '{what}'")));
        let spec = ExperimentSpec {
            kind: kind.ok_or_else(|| missing("kind"))?,
            base: SystemConfig::from_key_values(&base_lines)?,
            n_curves: n_curves.ok_or_else(|| missing("n_curves"))?,
            sweep_var: sweep_var.ok_or_else(|| missing("sweep_var"))?,
            sweep_values: sweep_values.ok_or_else(|| missing("sweep_values"))?,
            trials: trials.ok_or_else(|| missing("trials"))?,
            methods: methods.ok_or_else(|| missing("methods"))?,
            output_path: output_path.ok_or_else(|| missing("output_path"))?,
            disk_radius_over_lambda: ratio.ok_or_else(|| missing("disk_radius_over_lambda"))?,
            target_phi: target_phi.ok_or_else(|| missing("target_phi"))?,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::from_key_values(&text)
    }
}

fn parse_list<T: std::str::FromStr>(value: &str, key: &str) -> Result<Vec<T>> {
    if value.trim().is_empty() {
        return Ok(Vec::new());
    }
    value
        .split(',')
        .map(|item| {
            item.trim().parse::<T>().map_err(|_| {
                CoreError::ConfigParse(format!("invalid {key} entry '{item}'")).into()
            })
        })
        .collect()
}

pub fn parse_methods(value: &str) -> Result<Vec<SepMethod>> {
    if value.trim().is_empty() {
        return Ok(Vec::new());
    }
    value
        .split(',')
        .map(|item| item.trim().parse::<SepMethod>().map_err(CliError::from))
        .collect()
}

/// Default trial budget: desk scale; raise to 10^6 with `--trials` to
/// match the full-size study.
pub const DEFAULT_TRIALS: u64 = 100_000;

const DEFAULT_METHODS: [SepMethod; 4] = [
    SepMethod::MonteCarlo,
    SepMethod::ExactQuadrature,
    SepMethod::ClosedBound,
    SepMethod::SimpleBound,
];

/// The built-in spec for one experiment family.
pub fn spec_for(kind: ExperimentKind) -> ExperimentSpec {
    let base = SystemConfig {
        n_collab: 8,
        k_sources: 4,
        gamma1_db: 20.0,
        gamma2_db: 20.0,
        psk_order: 2,
        epsilon: 0.01,
        rng_seed: 1,
    };
    let ber_defaults = |sweep_var, sweep_values, n_curves, out: &str| ExperimentSpec {
        kind,
        base: base.clone(),
        n_curves,
        sweep_var,
        sweep_values,
        trials: DEFAULT_TRIALS,
        methods: DEFAULT_METHODS.to_vec(),
        output_path: PathBuf::from(out),
        disk_radius_over_lambda: 2.0,
        target_phi: 0.0,
    };
    match kind {
        ExperimentKind::Fig1BerVsGamma2 => ber_defaults(
            SweepVar::Gamma2Db,
            (0..=24).step_by(4).map(f64::from).collect(),
            vec![8, 16, 32],
            "fig1_ber_vs_gamma2.csv",
        ),
        ExperimentKind::Fig2BerVsN => ber_defaults(
            SweepVar::NCollab,
            vec![4.0, 8.0, 12.0, 16.0, 24.0, 32.0, 48.0, 64.0],
            vec![],
            "fig2_ber_vs_n.csv",
        ),
        ExperimentKind::Fig3BerVsK => ber_defaults(
            SweepVar::KSources,
            (1..=8).map(f64::from).collect(),
            vec![8, 16, 32],
            "fig3_ber_vs_k.csv",
        ),
        ExperimentKind::Fig4BerVsGamma1 => ber_defaults(
            SweepVar::Gamma1Db,
            (0..=30).step_by(5).map(f64::from).collect(),
            vec![8, 16, 32],
            "fig4_ber_vs_gamma1.csv",
        ),
        ExperimentKind::Beampattern => {
            let grid = (0..64)
                .map(|i| -std::f64::consts::PI + 2.0 * std::f64::consts::PI * i as f64 / 63.0)
                .collect();
            ExperimentSpec {
                kind,
                base: base.clone(),
                n_curves: vec![4, 16, 64],
                sweep_var: SweepVar::Phi,
                sweep_values: grid,
                trials: 20_000,
                methods: Vec::new(),
                output_path: PathBuf::from("beampattern.csv"),
                disk_radius_over_lambda: 2.0,
                target_phi: 0.0,
            }
        }
    }
}

/// All five built-in specs (the four BER figures plus the beampattern).
pub fn default_specs() -> Vec<ExperimentSpec> {
    ExperimentKind::ALL.into_iter().map(spec_for).collect()
}

/// Fixed column schema of BER sweep files.
pub const BER_CSV_HEADER: &str =
    "sweep_var,sweep_value,n_collab,k_sources,gamma1_db,gamma2_db,method,value,stderr";
/// Fixed column schema of beampattern files.
pub const BEAMPATTERN_CSV_HEADER: &str = "n_collab,phi_rad,analytic,empirical,stderr";

/// What a run produced, beyond the CSV itself.
#[derive(Debug, Clone, PartialEq)]
pub struct RunSummary {
    pub output_path: PathBuf,
    pub rows_written: usize,
    /// Largest |Monte Carlo - exact| across the sweep, in units of the
    /// binomial standard error; present when both methods ran.
    pub max_mc_vs_exact_sigma: Option<f64>,
    /// Points where an analytic bound ordering was violated beyond the
    /// quadrature slack, excluding documented quantile caveats.
    pub ordering_violations: usize,
    /// Points where the closed-form bound fell below the exact SEP but a
    /// tighter anchoring quantile restores it: the documented behavior of
    /// the epsilon-quantile surrogate in lightly loaded, high-SNR
    /// corners. Reported, not treated as a failure.
    pub quantile_caveats: usize,
}

impl fmt::Display for RunSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "wrote {} rows to {}",
            self.rows_written,
            self.output_path.display()
        )?;
        if let Some(sigma) = self.max_mc_vs_exact_sigma {
            writeln!(f, "max |monte_carlo - exact_quadrature| = {sigma:.2} stderr units")?;
        }
        if self.quantile_caveats > 0 {
            writeln!(
                f,
                "quantile-bound caveats (closed bound below exact; smaller epsilon restores it): {}",
                self.quantile_caveats
            )?;
        }
        write!(f, "bound-ordering violations: {}", self.ordering_violations)
    }
}

fn set_sweep_value(config: &mut SystemConfig, var: SweepVar, value: f64) -> Result<()> {
    let as_count = |value: f64, what: &str| -> Result<u32> {
        if value.fract() != 0.0 || value < 1.0 || value > f64::from(u32::MAX) {
            return Err(CoreError::InvalidConfig(format!(
                "sweep value {value} is not a valid {what}"
            ))
            .into());
        }
        Ok(value as u32)
    };
    match var {
        SweepVar::NCollab => config.n_collab = as_count(value, "n_collab")?,
        SweepVar::KSources => config.k_sources = as_count(value, "k_sources")?,
        SweepVar::Gamma1Db => config.gamma1_db = value,
        SweepVar::Gamma2Db => config.gamma2_db = value,
        SweepVar::PskOrder => config.psk_order = as_count(value, "psk_order")?,
        SweepVar::Epsilon => config.epsilon = value,
        SweepVar::Phi => {
            return Err(
                CoreError::InvalidConfig("phi is not a scenario field".into()).into()
            )
        }
    }
    Ok(())
}

/// Run the experiment and write its CSV. Rows appear in deterministic
/// (curve, sweep value, method) order, so re-running an identical spec
/// reproduces the file byte for byte.
pub fn run_experiment(spec: &ExperimentSpec) -> Result<RunSummary> {
    spec.validate()?;
    let text = match spec.kind {
        ExperimentKind::Beampattern => render_beampattern(spec),
        _ => render_ber_sweep(spec)?,
    };
    let (csv, summary_core) = text;
    std::fs::write(&spec.output_path, csv.as_bytes()).map_err(|source| CliError::Io {
        path: spec.output_path.clone(),
        source,
    })?;
    Ok(RunSummary {
        output_path: spec.output_path.clone(),
        rows_written: summary_core.rows,
        max_mc_vs_exact_sigma: summary_core.max_sigma,
        ordering_violations: summary_core.violations,
        quantile_caveats: summary_core.caveats,
    })
}

struct SummaryCore {
    rows: usize,
    max_sigma: Option<f64>,
    violations: usize,
    caveats: usize,
}

fn format_cell(value: f64) -> String {
    value.to_string()
}

fn render_ber_sweep(spec: &ExperimentSpec) -> Result<(String, SummaryCore)> {
    let curve_ns: Vec<u32> = if spec.n_curves.is_empty() {
        vec![spec.base.n_collab]
    } else {
        spec.n_curves.clone()
    };

    let quad = QuadratureSpec::default();
    let mut csv = String::from(BER_CSV_HEADER);
    csv.push('\n');
    let mut rows = 0usize;
    let mut max_sigma: Option<f64> = None;
    let mut violations = 0usize;
    let mut caveats = 0usize;

    for &n in &curve_ns {
        for &value in &spec.sweep_values {
            let mut config = spec.base.clone();
            config.n_collab = n;
            set_sweep_value(&mut config, spec.sweep_var, value)?;
            config.validate()?;

            let mut mc = None;
            let mut by_method = Vec::new();
            for &method in &spec.methods {
                let (estimate_value, stderr_cell) = match method {
                    SepMethod::MonteCarlo => {
                        let est = estimate_ber(&config, spec.trials);
                        mc = Some(est);
                        (est.ber, format_cell(est.stderr))
                    }
                    SepMethod::ExactQuadrature => {
                        let est = exact_sep(&config, &quad)?;
                        (est.value, est.uncertainty.map(format_cell).unwrap_or_default())
                    }
                    SepMethod::ClosedBound => (closed_form_bound(&config)?.value, String::new()),
                    SepMethod::SimpleBound => (simple_bound(&config)?.value, String::new()),
                    SepMethod::AwgnFloor => (awgn_floor(&config)?.value, String::new()),
                    SepMethod::PowerFloor => (power_floor(&config)?.value, String::new()),
                };
                by_method.push((method, estimate_value));
                csv.push_str(&format!(
                    "{},{},{},{},{},{},{},{},{}\n",
                    spec.sweep_var,
                    format_cell(value),
                    config.n_collab,
                    config.k_sources,
                    format_cell(config.gamma1_db),
                    format_cell(config.gamma2_db),
                    method,
                    format_cell(estimate_value),
                    stderr_cell,
                ));
                rows += 1;
            }

            let lookup = |m: SepMethod| by_method.iter().find(|(mm, _)| *mm == m).map(|(_, v)| *v);
            if let (Some(mc_est), Some(exact)) = (mc, lookup(SepMethod::ExactQuadrature)) {
                // Binomial stderr at the exact value; well defined even
                // when the run saw zero errors.
                let sigma_floor = (exact * (1.0 - exact) / spec.trials as f64).sqrt();
                let sigma = mc_est.stderr.max(sigma_floor);
                if sigma > 0.0 {
                    let deviation = (mc_est.ber - exact).abs() / sigma;
                    max_sigma = Some(max_sigma.map_or(deviation, |m: f64| m.max(deviation)));
                }
            }
            if let (Some(exact), Some(closed)) =
                (lookup(SepMethod::ExactQuadrature), lookup(SepMethod::ClosedBound))
            {
                if exact > closed + ORDERING_SLACK {
                    // The surrogate only dominates the SINR with
                    // probability 1 - epsilon; when a tighter quantile
                    // restores the bound this is its documented failure
                    // mode, not a regression.
                    let restored = [1e-3, 1e-4, 1e-6, 1e-9].iter().any(|&eps| {
                        let tighter = SystemConfig {
                            epsilon: eps,
                            ..config.clone()
                        };
                        closed_form_bound(&tighter)
                            .map(|e| e.value + ORDERING_SLACK >= exact)
                            .unwrap_or(false)
                    });
                    if restored {
                        caveats += 1;
                    } else {
                        violations += 1;
                    }
                }
            }
            if let (Some(closed), Some(simple)) =
                (lookup(SepMethod::ClosedBound), lookup(SepMethod::SimpleBound))
            {
                if closed > simple + ORDERING_SLACK {
                    violations += 1;
                }
            }
        }
    }

    Ok((
        csv,
        SummaryCore {
            rows,
            max_sigma,
            violations,
            caveats,
        },
    ))
}

fn render_beampattern(spec: &ExperimentSpec) -> (String, SummaryCore) {
    let curve_ns: Vec<u32> = if spec.n_curves.is_empty() {
        vec![spec.base.n_collab]
    } else {
        spec.n_curves.clone()
    };

    let mut csv = format!(
        "# disk_radius_over_lambda = {} (project default)\n# target_phi = {}\n{}\n",
        format_cell(spec.disk_radius_over_lambda),
        format_cell(spec.target_phi),
        BEAMPATTERN_CSV_HEADER
    );
    let mut rows = 0usize;
    for &n in &curve_ns {
        let samples = beampattern_sweep(
            n,
            spec.target_phi,
            spec.disk_radius_over_lambda,
            &spec.sweep_values,
            spec.trials.min(u64::from(u32::MAX)) as u32,
            spec.base.rng_seed,
        );
        for s in samples {
            csv.push_str(&format!(
                "{},{},{},{},{}\n",
                n,
                format_cell(s.phi),
                format_cell(s.analytic_power),
                s.empirical_power.map(format_cell).unwrap_or_default(),
                s.std_error.map(format_cell).unwrap_or_default(),
            ));
            rows += 1;
        }
    }
    (
        csv,
        SummaryCore {
            rows,
            max_sigma: None,
            violations: 0,
            caveats: 0,
        },
    )
}
