//! Benchmarks for the hot paths: interval primitives, polynomial evaluation,
//! certificate construction, and one grid-oracle scan.

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};

use sinecert::{
    brute_min, build, dif_certify, eval_S_seq, h_target, tau, CoefficientSequence, Direction,
    Interval, MonotoneFn, TauForm, DEFAULT_PREC,
};

const P: usize = DEFAULT_PREC;

fn interval_primitives(c: &mut Criterion) {
    let a = Interval::from_ratio(355, 113, P).unwrap();
    let b = Interval::beta1(P);
    c.bench_function("interval/mul", |bench| bench.iter(|| a.mul(&b)));
    c.bench_function("interval/pow_beta1", |bench| {
        bench.iter(|| a.pow(&b).unwrap())
    });
    c.bench_function("interval/sin", |bench| bench.iter(|| a.sin()));
}

fn polynomial_evaluation(c: &mut Criterion) {
    let beta1 = Interval::beta1(P);
    let seq = CoefficientSequence::new(100, &beta1, P).unwrap();
    let x = Interval::from_ratio(1, 2, P).unwrap();
    c.bench_function("eval/S_n100", |bench| {
        bench.iter(|| eval_S_seq(&seq, &x, true).value)
    });
    c.bench_function("eval/tau64_closed", |bench| {
        bench.iter(|| tau(64, &x, true, TauForm::Closed).unwrap().value)
    });
    let dec = build(&seq).unwrap();
    c.bench_function("eval/T_n100_closed", |bench| {
        bench.iter(|| dec.eval_t(&x, true, TauForm::Closed).unwrap())
    });
}

fn certificate_construction(c: &mut Criterion) {
    let (e1, e2) = h_target("hm1").unwrap();
    let dom = Interval::zero(P).hull(&Interval::from_ratio(1, 48, P).unwrap());
    c.bench_function("certify/dif_hm1", |bench| {
        bench.iter_batched(
            || {
                (
                    MonotoneFn::new(e1.clone(), Direction::Increasing, dom.clone()),
                    MonotoneFn::new(e2.clone(), Direction::Increasing, dom.clone()),
                )
            },
            |(g1, g2)| dif_certify(&g1, &g2, 64, P).unwrap(),
            BatchSize::SmallInput,
        )
    });
}

fn grid_oracle(c: &mut Criterion) {
    let beta1 = Interval::beta1(P);
    c.bench_function("brute/n20_cells512", |bench| {
        bench.iter(|| brute_min(20, &beta1, 512, P).unwrap())
    });
}

criterion_group!(
    benches,
    interval_primitives,
    polynomial_evaluation,
    certificate_construction,
    grid_oracle
);
criterion_main!(benches);
