//! Parallel vs sequential pair-sum and multistart throughput.
//!
//! Run with `cargo bench -p energy-lab-core`. The parallel path dispatches
//! to rayon above the internal row threshold, so the small sizes here
//! also document where the crossover sits.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use energy_lab_core::energy::{
    energy_gradient, energy_gradient_sequential, log_energy, log_energy_sequential, riesz_energy,
    riesz_energy_sequential, EnergyKind,
};
use energy_lab_core::optimize::{init_random, multistart, OptimizerSettings};
use std::hint::black_box;

fn bench_energies(c: &mut Criterion) {
    let mut group = c.benchmark_group("log_energy");
    for &n in &[64usize, 256, 1024] {
        let cfg = init_random(n, 2, 42).unwrap();
        group.bench_with_input(BenchmarkId::new("parallel", n), &cfg, |b, cfg| {
            b.iter(|| log_energy(black_box(cfg)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("sequential", n), &cfg, |b, cfg| {
            b.iter(|| log_energy_sequential(black_box(cfg)).unwrap())
        });
    }
    group.finish();

    let mut group = c.benchmark_group("riesz_energy_s1");
    for &n in &[256usize, 1024] {
        let cfg = init_random(n, 2, 43).unwrap();
        group.bench_with_input(BenchmarkId::new("parallel", n), &cfg, |b, cfg| {
            b.iter(|| riesz_energy(black_box(cfg), 1.0).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("sequential", n), &cfg, |b, cfg| {
            b.iter(|| riesz_energy_sequential(black_box(cfg), 1.0).unwrap())
        });
    }
    group.finish();

    let mut group = c.benchmark_group("gradient_log");
    for &n in &[256usize, 1024] {
        let cfg = init_random(n, 2, 44).unwrap();
        group.bench_with_input(BenchmarkId::new("parallel", n), &cfg, |b, cfg| {
            b.iter(|| energy_gradient(black_box(cfg), EnergyKind::Log).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("sequential", n), &cfg, |b, cfg| {
            b.iter(|| energy_gradient_sequential(black_box(cfg), EnergyKind::Log).unwrap())
        });
    }
    group.finish();
}

fn bench_multistart(c: &mut Criterion) {
    let mut group = c.benchmark_group("multistart_n24_log");
    group.sample_size(10);
    let settings = OptimizerSettings {
        restarts: 4,
        grad_tol: 1e-5,
        ..Default::default()
    };
    group.bench_function("restarts4", |b| {
        b.iter(|| multistart(24, 2, EnergyKind::Log, black_box(&settings)).unwrap())
    });
    group.finish();
}

criterion_group!(benches, bench_energies, bench_multistart);
criterion_main!(benches);
