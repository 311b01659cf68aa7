use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use leonard_bench::instance;
use leonard_core::{verify_all, Evaluator, Field, LeonardSystem};
use std::hint::black_box;

fn construction(c: &mut Criterion) {
    let mut group = c.benchmark_group("construction");
    for d in [3, 5] {
        let pa = leonard_core::catalog::sample(Field::rational(), d).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(d), &pa, |b, pa| b.iter(|| black_box(LeonardSystem::from_split_form(pa).unwrap())));
    }
    group.finish();
}

fn sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_all");
    group.sample_size(10);
    for d in [3, 5] {
        let (sys, g, anchors) = instance(Field::rational(), d);
        group.bench_function(BenchmarkId::new("Q", d), |b| b.iter(|| black_box(verify_all(&sys, &g, &anchors).unwrap())));
        let ev = Evaluator::new(&sys, &g, &anchors).unwrap();
        let f = leonard_core::formula("E.fwd.xis0".parse().unwrap(), "tauAs.rev.xid".parse().unwrap());
        group.bench_function(BenchmarkId::new("single", d), |b| b.iter(|| black_box(ev.evaluate(&f).unwrap())));
    }
    group.finish();
}

criterion_group!(benches, construction, sweep);
criterion_main!(benches);
