use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use witt_core::burnside::VirtualCyclicSet;
use witt_core::crysto::{solve_expansive, CrystallographicGroup, IntMatrix, smith_normal_form};
use witt_core::endo::EndoObject;
use witt_core::witt::{MulEngine, WittVector};
use witt_core::Ring;

fn vector(n: usize, seed: i64) -> WittVector {
    let c: Vec<i64> = (0..n as i64).map(|i| (i * 7 + seed) % 11 - 5).collect();
    WittVector::from_ints(Ring::Integers, &c)
}

fn witt_mul(c: &mut Criterion) {
    let mut g = c.benchmark_group("witt_mul");
    for n in [8usize, 12, 16] {
        let (x, y) = (vector(n, 1), vector(n, 4));
        for (name, engine) in [("orbit", MulEngine::Orbit), ("universal", MulEngine::Universal)] {
            // Build the cached table outside the timed loop.
            x.mul_with(&y, engine).unwrap();
            g.bench_with_input(BenchmarkId::new(name, n), &n, |b, _| {
                b.iter(|| black_box(&x).mul_with(black_box(&y), engine).unwrap())
            });
        }
    }
    g.finish();
}

fn ghost_and_operators(c: &mut Criterion) {
    let x = vector(24, 3);
    c.bench_function("ghost_24", |b| b.iter(|| black_box(&x).ghost()));
    c.bench_function("unghost_24", |b| {
        let g = x.ghost();
        b.iter(|| black_box(&g).unghost().unwrap())
    });
    c.bench_function("frobenius_3_24", |b| b.iter(|| black_box(&x).frobenius(3).unwrap()));
    c.bench_function("lambda_2_8", |b| {
        let y = vector(8, 2);
        y.lambda(2).unwrap();
        b.iter(|| black_box(&y).lambda(2).unwrap())
    });
}

fn endo(c: &mut Criterion) {
    let rows: Vec<Vec<i64>> = (0..6)
        .map(|i| (0..6).map(|j| ((i * 5 + j * 3) % 9) - 4).collect())
        .collect();
    let f = EndoObject::from_ints(Ring::Integers, &rows).unwrap();
    c.bench_function("char_poly_rev_6", |b| b.iter(|| black_box(&f).char_poly_rev()));
    c.bench_function("trace_seq_6_12", |b| b.iter(|| black_box(&f).trace_seq(12)));
}

fn burnside(c: &mut Criterion) {
    let x = VirtualCyclicSet::from_pairs([(2u64, 3i64), (3, -1), (6, 2)]);
    let y = VirtualCyclicSet::from_pairs([(4u64, 1i64), (5, 2)]);
    c.bench_function("burnside_mul", |b| b.iter(|| black_box(&x).mul(black_box(&y))));
    c.bench_function("burnside_embed_12", |b| b.iter(|| black_box(&x).embed_to_witt(12)));
}

fn crysto(c: &mut Criterion) {
    let pgg = CrystallographicGroup::pgg();
    c.bench_function("solve_expansive_pgg_5", |b| {
        b.iter(|| solve_expansive(black_box(&pgg), &5.into()).unwrap())
    });
    let rows: Vec<Vec<i64>> = (0..12)
        .map(|i| (0..12).map(|j| ((i * 7 + j * 5 + i * j) % 13) - 6).collect())
        .collect();
    let m = IntMatrix::from_rows(&rows);
    c.bench_function("smith_12x12", |b| b.iter(|| smith_normal_form(black_box(&m))));
}

criterion_group!(benches, witt_mul, ghost_and_operators, endo, burnside, crysto);
criterion_main!(benches);
