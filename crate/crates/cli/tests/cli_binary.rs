//! End-to-end runs of the `cobeam` binary.

use std::process::Command;

use cobeam_cli::{spec_for, ExperimentKind};

fn cobeam() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cobeam"))
}

#[test]
fn figure_run_writes_csv_and_exits_cleanly() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("fig3.csv");
    let status = cobeam()
        .args([
            "--figure",
            "3",
            "--trials",
            "500",
            "--seed",
            "9",
            "--out",
            out.to_str().unwrap(),
            "--methods",
            "monte_carlo,exact_quadrature",
        ])
        .status()
        .unwrap();
    assert!(status.success());
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.starts_with("sweep_var,"));
    // 8 K values x 3 N curves x 2 methods.
    assert_eq!(text.lines().count(), 1 + 8 * 3 * 2);
}

#[test]
fn spec_file_run_round_trips_through_the_binary() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("custom.csv");
    let mut spec = spec_for(ExperimentKind::Fig1BerVsGamma2);
    spec.trials = 300;
    spec.n_curves = vec![4];
    spec.sweep_values = vec![0.0, 12.0];
    spec.output_path = out.clone();
    let spec_path = dir.path().join("custom.spec");
    std::fs::write(&spec_path, spec.to_key_values()).unwrap();

    let status = cobeam()
        .args(["--spec", spec_path.to_str().unwrap()])
        .status()
        .unwrap();
    assert!(status.success());
    assert!(out.exists());
}

#[test]
fn bound_ordering_violation_fails_the_run() {
    // Quadrature-order PSK: the endpoint-value bound is not actually an
    // upper bound there, so a closed+simple sweep must flag it and exit
    // nonzero.
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("m4.csv");
    let mut spec = spec_for(ExperimentKind::Fig1BerVsGamma2);
    spec.base.psk_order = 4;
    spec.trials = 10;
    spec.n_curves = vec![8];
    spec.sweep_values = vec![20.0];
    spec.methods = "closed_bound,simple_bound"
        .split(',')
        .map(|s| s.parse().unwrap())
        .collect();
    spec.output_path = out.clone();
    let spec_path = dir.path().join("m4.spec");
    std::fs::write(&spec_path, spec.to_key_values()).unwrap();

    let status = cobeam()
        .args(["--spec", spec_path.to_str().unwrap()])
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(1));
    // The CSV is still written for inspection.
    assert!(out.exists());
}

#[test]
fn missing_mode_flags_are_a_usage_error() {
    let status = cobeam().status().unwrap();
    assert_eq!(status.code(), Some(2));
}

#[test]
fn loading_a_written_spec_reproduces_it() {
    let dir = tempfile::tempdir().unwrap();
    for kind in ExperimentKind::ALL {
        let spec = spec_for(kind);
        let path = dir.path().join(format!("{}.spec", spec.kind));
        std::fs::write(&path, spec.to_key_values()).unwrap();
        let loaded = cobeam_cli::ExperimentSpec::load(&path).unwrap();
        assert_eq!(loaded, spec);
    }
}
