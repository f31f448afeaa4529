use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use qcatalan_core::pathlab::{count_bounded_enum, BoundSpec};
use qcatalan_core::reflection::{altsum_row, bounded_formula, AltSumSpec};
use qcatalan_core::triangles::q_binomial;

fn bench_bounded_counts(c: &mut Criterion) {
    let mut group = c.benchmark_group("bounded_counts");
    for n in [4u32, 6, 8] {
        group.bench_with_input(BenchmarkId::new("formula", n), &n, |b, &n| {
            b.iter(|| bounded_formula(black_box(n), 3, 1))
        });
        group.bench_with_input(BenchmarkId::new("enumeration", n), &n, |b, &n| {
            b.iter(|| {
                count_bounded_enum(&BoundSpec {
                    n: black_box(n),
                    m: Some(3),
                    s: Some(1),
                })
                .unwrap()
            })
        });
    }
    group.finish();
}

fn bench_altsum_rows(c: &mut Criterion) {
    c.bench_function("altsum_row_d3_row25", |b| {
        b.iter(|| {
            altsum_row(&AltSumSpec {
                d: 3,
                row: black_box(25),
                base_col: 0,
                m: 4,
                s: 0,
            })
        })
    });
}

fn bench_q_binomial(c: &mut Criterion) {
    c.bench_function("q_binomial_24_12", |b| {
        b.iter(|| q_binomial(black_box(24), black_box(12)))
    });
}

criterion_group!(
    benches,
    bench_bounded_counts,
    bench_altsum_rows,
    bench_q_binomial
);
criterion_main!(benches);
