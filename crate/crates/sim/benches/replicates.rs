//! Compare the sequential and parallel replicate drivers on identical
//! workloads. Output is asserted equal in the test suite; here we only
//! time the two paths. Two sizes: a small batch where thread-pool
//! overhead dominates, and a larger one with enough independent work for
//! the parallel driver to pay off on multi-core hardware.

use std::hint::black_box;

use cola_sim::{run_replicates_seq, SimConfig};
use criterion::{criterion_group, criterion_main, Criterion};

fn bench_size(c: &mut Criterion, replicates: usize, seasons: usize) {
    let cfg = SimConfig::default();
    let mut group = c.benchmark_group(format!("replicates_{replicates}x{seasons}"));
    group.sample_size(10);

    group.bench_function("sequential", |b| {
        b.iter(|| run_replicates_seq(black_box(&cfg), seasons, replicates, 11).unwrap());
    });

    #[cfg(feature = "parallel")]
    group.bench_function("parallel", |b| {
        b.iter(|| cola_sim::run_replicates_par(black_box(&cfg), seasons, replicates, 11).unwrap());
    });

    group.finish();
}

fn bench_drivers(c: &mut Criterion) {
    bench_size(c, 8, 5);
    bench_size(c, 16, 50);
}

criterion_group!(benches, bench_drivers);
criterion_main!(benches);
