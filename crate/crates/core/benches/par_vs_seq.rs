//! Data-parallel batch layers vs. the sequential fallback.
//!
//! Covers the three hot batch surfaces: eligibility sweeps (15 edges x 30
//! forced-edge queries on Petersen), bulk classification (every connected
//! 7-vertex class), and a full minimum-size search at order 8.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use mnt_core::classify::{classify_batch, dkw_eligible_with};
use mnt_core::graph::Graph;
use mnt_core::search::{enumerate_classes, min_mnt_size, SearchConfig};
use mnt_core::{named, ExecMode};
use std::time::Duration;

fn modes() -> [(&'static str, ExecMode); 2] {
    [("seq", ExecMode::Sequential), ("par", ExecMode::Parallel)]
}

fn bench_dkw_eligible(c: &mut Criterion) {
    let petersen = named::petersen();
    let mut group = c.benchmark_group("dkw_eligible_petersen");
    for (label, mode) in modes() {
        group.bench_with_input(BenchmarkId::from_parameter(label), &mode, |b, &mode| {
            b.iter(|| dkw_eligible_with(&petersen, mode));
        });
    }
    group.finish();
}

fn bench_classify_batch(c: &mut Criterion) {
    let graphs: Vec<Graph> = (0..=21)
        .flat_map(|m| enumerate_classes(7, m, true).expect("order in range"))
        .collect();
    let mut group = c.benchmark_group("classify_connected_n7");
    group.sample_size(10);
    for (label, mode) in modes() {
        group.bench_with_input(BenchmarkId::from_parameter(label), &mode, |b, &mode| {
            b.iter(|| classify_batch(&graphs, mode));
        });
    }
    group.finish();
}

fn bench_search_n8(c: &mut Criterion) {
    let mut group = c.benchmark_group("min_mnt_size_n8");
    group.sample_size(10).measurement_time(Duration::from_secs(8));
    for (label, mode) in modes() {
        group.bench_with_input(BenchmarkId::from_parameter(label), &mode, |b, &mode| {
            b.iter(|| {
                min_mnt_size(
                    8,
                    &SearchConfig {
                        mode,
                        ..Default::default()
                    },
                )
                .expect("order in range")
            });
        });
    }
    group.finish();
}

criterion_group!(benches, bench_dkw_eligible, bench_classify_batch, bench_search_n8);
criterion_main!(benches);
