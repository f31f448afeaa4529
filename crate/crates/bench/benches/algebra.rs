use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use qcatalan_core::qcomplex::{
    build_complex, homology_ranks, modified_euler_char, sigma_matrix, ExponentFn,
    DEFAULT_MATRIX_BUDGET,
};

fn bench_sigma_build(c: &mut Criterion) {
    let mut group = c.benchmark_group("sigma_matrix");
    for generators in [8u32, 10, 12] {
        group.bench_with_input(
            BenchmarkId::from_parameter(generators),
            &generators,
            |b, &m| b.iter(|| sigma_matrix(black_box(m), m / 2, 5)),
        );
    }
    group.finish();
}

fn bench_central_rank(c: &mut Criterion) {
    let mut group = c.benchmark_group("central_sigma_rank");
    group.sample_size(10);
    for generators in [8u32, 10] {
        group.bench_with_input(
            BenchmarkId::from_parameter(generators),
            &generators,
            |b, &m| b.iter(|| sigma_matrix(black_box(m), m / 2, 5).rank()),
        );
    }
    group.finish();
}

fn bench_homology(c: &mut Criterion) {
    let mut group = c.benchmark_group("homology_ranks");
    group.sample_size(10);
    for n in [4u32, 5] {
        group.bench_with_input(BenchmarkId::new("N3", n), &n, |b, &n| {
            b.iter(|| {
                let cx = build_complex(2 * n, n, 1, 0).unwrap();
                homology_ranks(&cx, DEFAULT_MATRIX_BUDGET).unwrap()
            })
        });
    }
    group.finish();
}

fn bench_modified_euler_char(c: &mut Criterion) {
    let f = ExponentFn::new("rr14", 5, -3).unwrap();
    c.bench_function("qchi_n10_rr14", |b| {
        b.iter(|| modified_euler_char(black_box(20), 10, 3, 0, &f).unwrap())
    });
}

criterion_group!(
    benches,
    bench_sigma_build,
    bench_central_rank,
    bench_homology,
    bench_modified_euler_char
);
criterion_main!(benches);
