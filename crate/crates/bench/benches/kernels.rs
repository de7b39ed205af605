use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use betti_bench::{dense_graph, sparse_graph, stacked};
use betti_core::betti::{b_vector_with, Backend, OracleOptions};
use betti_core::hochster::betti_table;

fn bench_subset_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("b_vector_sweep");
    for n in [16usize, 18, 20] {
        let g = dense_graph(n, 1);
        group.bench_with_input(BenchmarkId::new("dense", n), &g, |b, g| {
            b.iter(|| b_vector_with(g, &OracleOptions::default()).unwrap())
        });
        let g = sparse_graph(n, 2);
        group.bench_with_input(BenchmarkId::new("sparse", n), &g, |b, g| {
            b.iter(|| b_vector_with(g, &OracleOptions::default()).unwrap())
        });
    }
    group.finish();
}

fn bench_backends(c: &mut Criterion) {
    let mut group = c.benchmark_group("backend");
    let g = dense_graph(18, 3);
    for (name, backend) in [("sweep", Backend::Sweep), ("per-k", Backend::PerK)] {
        let opts = OracleOptions {
            backend,
            threads: 1,
            ..OracleOptions::default()
        };
        group.bench_with_input(BenchmarkId::new(name, 18), &g, |b, g| {
            b.iter(|| b_vector_with(g, &opts).unwrap())
        });
    }
    group.finish();
}

fn bench_betti_table(c: &mut Criterion) {
    let mut group = c.benchmark_group("betti_table");
    group.sample_size(10);
    for n in [7usize, 8, 9] {
        let complex = stacked(3, n, 5);
        group.bench_with_input(BenchmarkId::new("stacked_d3", n), &complex, |b, cx| {
            b.iter(|| betti_table(cx).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, bench_subset_sweep, bench_backends, bench_betti_table);
criterion_main!(benches);
