//! Benchmarks for the hot paths: closed-form series, the bucketed Weyl
//! oracle in both modes, group enumeration, and the invariant-dimension
//! linear algebra.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use comspace::invariants::invariant_dim;
use comspace::poincare::{
    series_formula, series_oracle_with_mode, Budget, OracleMode,
};
use comspace::weylgroups::{enumerate_group, Family, GroupSpec};

fn spec(family: Family, n: u32) -> GroupSpec {
    GroupSpec::new(family, n).unwrap()
}

fn bench_formula(c: &mut Criterion) {
    c.bench_function("series_formula SU(5) m=2", |b| {
        let s = spec(Family::SU, 5);
        b.iter(|| series_formula(black_box(&s), 2).unwrap())
    });
    c.bench_function("series_formula Sp(4) m=3", |b| {
        let s = spec(Family::Sp, 4);
        b.iter(|| series_formula(black_box(&s), 3).unwrap())
    });
}

fn bench_oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle");
    group.sample_size(10);
    group.bench_function("exact B_4 m=2", |b| {
        let s = spec(Family::Sp, 4);
        b.iter(|| {
            series_oracle_with_mode(black_box(&s), 2, Budget::small(), OracleMode::Exact).unwrap()
        })
    });
    group.bench_function("exact F4 m=2", |b| {
        let s = spec(Family::F4, 0);
        b.iter(|| {
            series_oracle_with_mode(black_box(&s), 2, Budget::small(), OracleMode::Exact).unwrap()
        })
    });
    group.bench_function("truncated F4 m=2", |b| {
        let s = spec(Family::F4, 0);
        b.iter(|| {
            series_oracle_with_mode(black_box(&s), 2, Budget::small(), OracleMode::Truncated)
                .unwrap()
        })
    });
    group.finish();
}

fn bench_enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumeration");
    group.sample_size(10);
    group.bench_function("F4 matrix closure", |b| {
        let s = spec(Family::F4, 0);
        b.iter(|| enumerate_group(black_box(&s), 1 << 20).unwrap().len())
    });
    group.bench_function("B_5 signed permutations", |b| {
        let s = spec(Family::Sp, 5);
        b.iter(|| enumerate_group(black_box(&s), 1 << 20).unwrap().len())
    });
    group.finish();
}

fn bench_invariants(c: &mut Criterion) {
    let mut group = c.benchmark_group("invariants");
    group.sample_size(10);
    group.bench_function("invariant_dim Sp(2) m=2 d=6", |b| {
        b.iter(|| invariant_dim(Family::Sp, 2, 2, black_box(6)).unwrap())
    });
    group.finish();
}

criterion_group!(
    benches,
    bench_formula,
    bench_oracle,
    bench_enumeration,
    bench_invariants
);
criterion_main!(benches);
