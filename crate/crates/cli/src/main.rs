use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use cobeam_cli::{parse_methods, run_experiment, ExperimentKind, ExperimentSpec};

/// Collaborative-beamforming experiment runner.
///
/// Sweeps the Monte Carlo link simulator and the analytic
/// symbol-error-probability methods over a scenario grid and writes the
/// results as CSV.
#[derive(Parser, Debug)]
#[command(name = "cobeam", version, about)]
struct Args {
    /// Experiment spec file (flat `key = value` format).
    #[arg(long, conflicts_with = "figure")]
    spec: Option<PathBuf>,

    /// Built-in experiment: 1, 2, 3, 4 or beampattern.
    #[arg(long)]
    figure: Option<String>,

    /// Override the trial budget (default 100000; use 1000000 for the
    /// full-size study).
    #[arg(long)]
    trials: Option<u64>,

    /// Override the root random seed.
    #[arg(long)]
    seed: Option<u64>,

    /// Override the output CSV path.
    #[arg(long)]
    out: Option<PathBuf>,

    /// Override the SEP methods (comma-separated: monte_carlo,
    /// exact_quadrature, closed_bound, simple_bound, awgn_floor,
    /// power_floor).
    #[arg(long)]
    methods: Option<String>,
}

fn build_spec(args: &Args) -> Result<ExperimentSpec, cobeam_cli::CliError> {
    let mut spec = match (&args.spec, &args.figure) {
        (Some(path), None) => ExperimentSpec::load(path)?,
        (None, Some(figure)) => cobeam_cli::spec_for(ExperimentKind::parse_flag(figure)?),
        _ => {
            return Err(cobeam_core::Error::InvalidConfig(
                "pass exactly one of --spec or --figure".into(),
            )
            .into())
        }
    };
    if let Some(trials) = args.trials {
        spec.trials = trials;
    }
    if let Some(seed) = args.seed {
        spec.base.rng_seed = seed;
    }
    if let Some(out) = &args.out {
        spec.output_path = out.clone();
    }
    if let Some(methods) = &args.methods {
        spec.methods = parse_methods(methods)?;
    }
    Ok(spec)
}

fn main() -> ExitCode {
    let args = Args::parse();
    let spec = match build_spec(&args) {
        Ok(spec) => spec,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match run_experiment(&spec) {
        Ok(summary) => {
            println!("{summary}");
            if summary.ordering_violations > 0 {
                eprintln!("error: analytic bound ordering violated during the run");
                ExitCode::FAILURE
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
