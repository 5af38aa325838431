//! Parallel-vs-sequential comparison for the grid workloads, plus the raw
//! row recurrence at a few sizes.
//!
//! `landscape/parallel` goes through the library path (rayon fan-out over
//! `d` under the default feature); `landscape/sequential` drives the same
//! public per-`d` primitives on one thread.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use logconcave::cache::RowCache;
use logconcave::series::{compute_row, delta, DeltaClass, ExponentSequence};
use logconcave::verify::landscape;

fn landscape_sequential(d_max: u32, n_max: u64) -> Vec<Vec<DeltaClass>> {
    (1..=d_max)
        .map(|d| {
            let row = compute_row(&ExponentSequence::PowerFamily(d), n_max as usize + 1).unwrap();
            (1..=n_max)
                .map(|n| delta(d, n, &row).unwrap().class)
                .collect()
        })
        .collect()
}

fn bench_landscape(c: &mut Criterion) {
    let mut group = c.benchmark_group("landscape");
    group.sample_size(10);
    for &(d_max, n_max) in &[(12u32, 120u64), (20, 200)] {
        let label = format!("d{d_max}_n{n_max}");
        group.bench_with_input(BenchmarkId::new("parallel", &label), &(), |b, _| {
            b.iter(|| {
                // Fresh cache per iteration so the grid is actually recomputed.
                let cache = RowCache::new();
                black_box(landscape(&cache, d_max, n_max))
            })
        });
        group.bench_with_input(BenchmarkId::new("sequential", &label), &(), |b, _| {
            b.iter(|| black_box(landscape_sequential(d_max, n_max)))
        });
    }
    group.finish();
}

fn bench_row_recurrence(c: &mut Criterion) {
    let mut group = c.benchmark_group("compute_row");
    group.sample_size(10);
    for &n_max in &[500usize, 1000, 2000] {
        group.bench_with_input(BenchmarkId::new("d2", n_max), &n_max, |b, &n_max| {
            b.iter(|| black_box(compute_row(&ExponentSequence::PowerFamily(2), n_max).unwrap()))
        });
    }
    group.bench_function("d8_n500", |b| {
        b.iter(|| black_box(compute_row(&ExponentSequence::PowerFamily(8), 500).unwrap()))
    });
    group.finish();
}

criterion_group!(benches, bench_landscape, bench_row_recurrence);
criterion_main!(benches);
