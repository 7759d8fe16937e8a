use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use lcn_core::detlab::{cayley_table, random_point, theta_nonzero, PRIME, SYMBOLIC_CAP};
use lcn_core::{build_universe, canonicalize, Structure, Word};

fn words(n: usize, count: usize, len: usize) -> Vec<Word> {
    // Fixed linear congruential stream so runs compare like for like.
    let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
    (0..count)
        .map(|_| {
            let letters = (0..len).map(|_| {
                state = state.wrapping_mul(6_364_136_223_846_793_005).wrapping_add(1_442_695_040_888_963_407);
                (state >> 33) as usize % n + 1
            });
            Word::from_indices(n, letters).unwrap()
        })
        .collect()
}

fn bench_canonicalize(c: &mut Criterion) {
    let mut g = c.benchmark_group("canonicalize");
    for n in [4, 8, 12] {
        let ws = words(n, 256, 16);
        g.bench_with_input(BenchmarkId::from_parameter(n), &ws, |b, ws| {
            b.iter(|| ws.iter().map(|w| canonicalize(black_box(w)).unwrap().rank()).sum::<usize>())
        });
    }
    g.finish();
}

fn bench_universe(c: &mut Criterion) {
    let mut g = c.benchmark_group("build_universe");
    g.sample_size(10);
    for n in [5, 7, 9] {
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| b.iter(|| build_universe(black_box(n)).unwrap().len()));
    }
    g.finish();
}

fn bench_det(c: &mut Criterion) {
    let mut g = c.benchmark_group("det_mod");
    g.sample_size(10);
    for n in [5, 7, 8] {
        let u = build_universe(n).unwrap();
        let table = cayley_table(&u);
        let x = random_point(&u, 1, 0);
        g.bench_with_input(BenchmarkId::from_parameter(n), &x, |b, x| b.iter(|| table.det_mod(black_box(x), PRIME).unwrap()));
    }
    g.finish();
}

fn bench_theta(c: &mut Criterion) {
    let mut g = c.benchmark_group("theta_nonzero");
    g.sample_size(10);
    for n in [7, 8] {
        let u = build_universe(n).unwrap();
        let st = Structure::new(&u).unwrap();
        g.bench_function(BenchmarkId::from_parameter(n), |b| b.iter(|| theta_nonzero(&st, 32, 0, SYMBOLIC_CAP).unwrap().name()));
    }
    g.finish();
}

criterion_group!(benches, bench_canonicalize, bench_universe, bench_det, bench_theta);
criterion_main!(benches);
