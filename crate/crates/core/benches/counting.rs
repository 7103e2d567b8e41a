use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ehrhart_core::counting::{
    count_box_scan_chunked, count_box_scan_sequential, count_pn_sliced, counter_for, oracle_for, CountOptions,
};
use ehrhart_core::ehrhart::ehrhart_of;
use ehrhart_core::polytope::{pn_family, qn_family};

fn box_scan(c: &mut Criterion) {
    let mut group = c.benchmark_group("box_scan");
    group.sample_size(10);
    for (name, p, k) in [("P_5", pn_family(5).unwrap(), 3u64), ("Q_6", qn_family(6).unwrap(), 3)] {
        let oracle = oracle_for(&p, k).unwrap();
        group.bench_with_input(BenchmarkId::new("sequential", name), &oracle, |b, o| {
            b.iter(|| count_box_scan_sequential(black_box(o)))
        });
        let chunks = rayon::current_num_threads() * 8;
        group.bench_with_input(BenchmarkId::new("chunked", name), &oracle, |b, o| {
            b.iter(|| count_box_scan_chunked(black_box(o), chunks))
        });
    }
    group.finish();
}

fn sliced_vs_scan(c: &mut Criterion) {
    let mut group = c.benchmark_group("pn_count");
    group.sample_size(10);
    let p = pn_family(6).unwrap();
    let oracle = oracle_for(&p, 3).unwrap();
    group.bench_function("sliced_dp", |b| b.iter(|| count_pn_sliced(6, black_box(3))));
    group.bench_function("box_scan", |b| b.iter(|| count_box_scan_chunked(black_box(&oracle), 64)));
    group.finish();
}

fn p7_polynomial(c: &mut Criterion) {
    let p = pn_family(7).unwrap();
    let counter = counter_for(&p, &CountOptions::default()).unwrap();
    c.bench_function("ehrhart_P7", |b| b.iter(|| ehrhart_of(black_box(&p), &*counter).unwrap()));
}

criterion_group!(benches, box_scan, sliced_vs_scan, p7_polynomial);
criterion_main!(benches);
