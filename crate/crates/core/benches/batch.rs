use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use qscheme_core::catalog::crosscheck_all;
use qscheme_core::engine::PolySystem;
use qscheme_core::limits::{self, VerifyOptions};
use qscheme_core::par::Exec;
use qscheme_core::verify::random_vectors;

fn execs() -> Vec<(&'static str, Exec)> {
    let mut out = vec![("sequential", Exec::Sequential)];
    if Exec::default().is_parallel() {
        out.push(("parallel", Exec::Parallel));
    }
    out
}

fn catalog(c: &mut Criterion) {
    let mut group = c.benchmark_group("catalog_crosscheck");
    group.sample_size(10);
    for (name, exec) in execs() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| crosscheck_all(exec, black_box(6)))
        });
    }
    group.finish();
}

fn recurrence_sweep(c: &mut Criterion) {
    let vectors = random_vectors(7, 32, 9);
    let mut group = c.benchmark_group("recurrence_sweep");
    group.sample_size(10);
    for (name, exec) in execs() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| {
                exec.map(vectors.clone(), |pv| {
                    let sys = PolySystem::new(&pv, 9).unwrap();
                    (0..=8).all(|n| sys.recurrence_check(n).unwrap())
                })
            })
        });
    }
    group.finish();
}

fn limit_cases(c: &mut Criterion) {
    let opts = VerifyOptions::default();
    let mut group = c.benchmark_group("limit_cases");
    group.sample_size(10);
    for (name, exec) in execs() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| limits::run_all(exec, black_box(&opts)))
        });
    }
    group.finish();
}

criterion_group!(benches, catalog, recurrence_sweep, limit_cases);
criterion_main!(benches);
