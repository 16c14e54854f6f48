use criterion::{black_box, criterion_group, criterion_main, Criterion};

use cobeam_bench::reference_scenario;
use cobeam_core::channel::{draw_channel, normalize};
use cobeam_core::geometry::{average_beampattern_empirical, sample_placement};
use cobeam_core::math::{bessel_j1, erlang_quantile, integrate_1d, QuadratureSpec};
use cobeam_core::protocol::estimate_ber;
use cobeam_core::rng::RngStream;
use cobeam_core::sep::{closed_form_bound, exact_sep, simple_bound};

fn special_functions(c: &mut Criterion) {
    let mut group = c.benchmark_group("special_functions");
    group.bench_function("bessel_j1_small", |b| b.iter(|| bessel_j1(black_box(1.7))));
    group.bench_function("bessel_j1_asymptotic", |b| {
        b.iter(|| bessel_j1(black_box(37.2)))
    });
    group.bench_function("erlang_quantile_n8", |b| {
        b.iter(|| erlang_quantile(black_box(0.01), 8, 1.0).unwrap())
    });
    group.finish();
}

fn quadrature(c: &mut Criterion) {
    let spec = QuadratureSpec::default();
    c.bench_function("integrate_sin_half_period", |b| {
        b.iter(|| integrate_1d(f64::sin, 0.0, black_box(std::f64::consts::PI), &spec).unwrap())
    });
}

fn sep_methods(c: &mut Criterion) {
    let quad = QuadratureSpec::default();
    let mut group = c.benchmark_group("sep");
    group.sample_size(20);
    group.bench_function("exact_sep_n8", |b| {
        let config = reference_scenario(8);
        b.iter(|| exact_sep(black_box(&config), &quad).unwrap())
    });
    group.bench_function("closed_form_bound_n32", |b| {
        let config = reference_scenario(32);
        b.iter(|| closed_form_bound(black_box(&config)).unwrap())
    });
    group.bench_function("simple_bound_n32", |b| {
        let config = reference_scenario(32);
        b.iter(|| simple_bound(black_box(&config)).unwrap())
    });
    group.finish();
}

fn simulator(c: &mut Criterion) {
    let mut group = c.benchmark_group("simulator");
    group.sample_size(20);
    group.bench_function("channel_draw_k4_n8", |b| {
        let config = reference_scenario(8);
        let scales = normalize(&config);
        let mut stream = RngStream::from_seed(1);
        b.iter(|| draw_channel(&scales, 4, 8, black_box(&mut stream)))
    });
    group.bench_function("estimate_ber_1k_trials_n8", |b| {
        let config = reference_scenario(8);
        b.iter(|| estimate_ber(black_box(&config), 1_000))
    });
    group.bench_function("placement_n64", |b| {
        b.iter(|| sample_placement(64, 2.0, black_box(3)))
    });
    group.bench_function("beampattern_empirical_n16_200_trials", |b| {
        b.iter(|| average_beampattern_empirical(16, black_box(0.7), 0.0, 2.0, 200, 3))
    });
    group.finish();
}

criterion_group!(benches, special_functions, quadrature, sep_methods, simulator);
criterion_main!(benches);
