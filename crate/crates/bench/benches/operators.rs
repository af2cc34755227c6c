use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use postlie::catalog::verify_witness;
use postlie::post_lie::{bracket_tower, derived_bracket, inner_pa_from_rb, triple_decomposition};
use postlie::rota_baxter::rb_identity_failure;
use postlie_bench::{operators, r3_two, witness};

fn rota_baxter(c: &mut Criterion) {
    let mut g = c.benchmark_group("rb_identity");
    for (name, r) in operators() {
        g.bench_with_input(BenchmarkId::from_parameter(&name), &r, |b, r| {
            b.iter(|| rb_identity_failure(r.algebra(), black_box(r.matrix()), r.weight()).unwrap())
        });
    }
    g.finish();
}

fn post_lie(c: &mut Criterion) {
    let ops = operators();
    let (_, r) = &ops[0];
    c.bench_function("derived_bracket", |b| b.iter(|| derived_bracket(black_box(r)).unwrap()));
    c.bench_function("pa_axioms", |b| {
        b.iter(|| inner_pa_from_rb(black_box(r)).unwrap().check_axioms())
    });
    c.bench_function("bracket_tower_6", |b| {
        b.iter(|| bracket_tower(black_box(r), 6).unwrap().kernel_ideal_failure())
    });
    c.bench_function("triple_decomposition", |b| {
        b.iter(|| triple_decomposition(black_box(r)).unwrap())
    });
}

fn catalog(c: &mut Criterion) {
    let w = witness("type5-triangular");
    c.bench_function("verify_witness_type5", |b| b.iter(|| verify_witness(black_box(&w))));
    let l = r3_two();
    c.bench_function("fingerprint_r3_lambda", |b| b.iter(|| black_box(&l).fingerprint()));
    c.bench_function("classify3_r3_lambda", |b| b.iter(|| postlie::classify3(black_box(&l)).unwrap()));
}

criterion_group!(benches, rota_baxter, post_lie, catalog);
criterion_main!(benches);
