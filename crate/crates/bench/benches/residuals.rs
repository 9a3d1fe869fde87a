use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use yibre::bezout::{bezout_operator, BezoutKind};
use yibre::kernel::{frac, rat, Rational};
use yibre::qalg::{poincare_series, OrderedQuadraticPresentation};
use yibre::rime::strict_rime_r;
use yibre::suite::{run_suite, Suite, SuiteConfig};
use yibre::tensor::{nhacybe_residual, skew_inverse, yb_residual};

fn phi(n: usize) -> Vec<Rational> {
    (1..=n as i64).map(|i| frac(i * i + 1, i + 1)).collect()
}

fn ybe(c: &mut Criterion) {
    let mut group = c.benchmark_group("yb_residual");
    for n in [2, 3, 4] {
        let r = strict_rime_r(&phi(n), &frac(3, 7)).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &r, |b, r| b.iter(|| yb_residual(black_box(r))));
    }
    group.finish();
}

fn skew(c: &mut Criterion) {
    let mut group = c.benchmark_group("skew_inverse");
    for n in [2, 3] {
        let r = strict_rime_r(&phi(n), &frac(3, 7)).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &r, |b, r| b.iter(|| skew_inverse(black_box(r))));
    }
    group.finish();
}

fn nhacybe(c: &mut Criterion) {
    let mut group = c.benchmark_group("nhacybe_residual");
    for n in [2, 3, 4] {
        let r = bezout_operator(BezoutKind::B, n).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &r, |b, r| {
            b.iter(|| nhacybe_residual(black_box(r), &rat(1), false))
        });
    }
    group.finish();
}

fn poincare(c: &mut Criterion) {
    let pres = OrderedQuadraticPresentation::uniform(4, &frac(2, 3)).to_general();
    c.bench_function("poincare_series n=4 d=5", |b| b.iter(|| poincare_series(black_box(&pres), 5)));
}

fn suite(c: &mut Criterion) {
    let mut group = c.benchmark_group("suite");
    group.sample_size(10);
    let cfg = SuiteConfig { suite: Suite::All, n: 2, seed: 1, draws: 2, mutation: None };
    group.bench_function("all n=2 draws=2", |b| b.iter(|| run_suite(black_box(&cfg))));
    group.finish();
}

criterion_group!(benches, ybe, skew, nhacybe, poincare, suite);
criterion_main!(benches);
