use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use lessnoisy::noise::trial_rng;
use lessnoisy::noise::{monte_carlo, NoiseModel};
use lessnoisy::oracle::{check_end_to_end, StateVector};
use lessnoisy::{run_cycle, SyndromeTable};
use lessnoisy_bench::{correctable_errors, fixture};

const CODES: [&str; 2] = ["mds4_2_q", "hamming7_b"];

fn algebraic_cycle(c: &mut Criterion) {
    let mut group = c.benchmark_group("run_cycle");
    for name in CODES {
        let (scheme, table) = fixture(name);
        let errors = correctable_errors(&scheme, 1024, 1);
        group.bench_function(name, |b| {
            b.iter(|| {
                for err in &errors {
                    black_box(run_cycle(&scheme, &table, err).unwrap());
                }
            })
        });
    }
    group.finish();
}

fn table_build(c: &mut Criterion) {
    let mut group = c.benchmark_group("table_build");
    for name in CODES {
        let (scheme, _) = fixture(name);
        let t = scheme.code().radius().unwrap();
        group.bench_function(name, |b| {
            b.iter(|| SyndromeTable::build(black_box(&scheme), t).unwrap())
        });
    }
    group.finish();
}

fn monte_carlo_run(c: &mut Criterion) {
    let (scheme, table) = fixture("hamming7_b");
    let model = NoiseModel::iid(0.01, 0.01, 7).unwrap();
    c.bench_function("monte_carlo/hamming7_b/10k", |b| {
        b.iter(|| monte_carlo(&scheme, &table, &model, 10_000).unwrap())
    });
}

fn statevector_cycle(c: &mut Criterion) {
    let mut group = c.benchmark_group("statevector_cycle");
    group.sample_size(20);
    for name in CODES {
        let (scheme, table) = fixture(name);
        let errors = correctable_errors(&scheme, 16, 2);
        let psi = StateVector::random(scheme.k(), &mut trial_rng(3, 0)).unwrap();
        group.bench_function(name, |b| {
            b.iter(|| {
                for err in &errors {
                    black_box(check_end_to_end(&scheme, &table, err, &psi).unwrap());
                }
            })
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    algebraic_cycle,
    table_build,
    monte_carlo_run,
    statevector_cycle
);
criterion_main!(benches);
