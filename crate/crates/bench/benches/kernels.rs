use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use supercong_bench::{cubed_sum_mod_p2, depressed_char_sum, half_legendre_mod_p2};

fn series(c: &mut Criterion) {
    let mut g = c.benchmark_group("cubed_sum_mod_p2");
    for p in [101u64, 1009, 10007] {
        g.bench_with_input(BenchmarkId::from_parameter(p), &p, |b, &p| b.iter(|| cubed_sum_mod_p2(black_box(p), -64)));
    }
    g.finish();
}

fn char_sums(c: &mut Criterion) {
    let mut g = c.benchmark_group("depressed_char_sum");
    for p in [101u64, 1009, 10007] {
        g.bench_with_input(BenchmarkId::from_parameter(p), &p, |b, &p| b.iter(|| depressed_char_sum(black_box(p), -35, 98)));
    }
    g.finish();
}

fn legendre(c: &mut Criterion) {
    let mut g = c.benchmark_group("half_legendre_mod_p2");
    for p in [1009u64, 10007, 100_003] {
        g.bench_with_input(BenchmarkId::from_parameter(p), &p, |b, &p| b.iter(|| half_legendre_mod_p2(black_box(p), 7)));
    }
    g.finish();
}

criterion_group!(benches, series, char_sums, legendre);
criterion_main!(benches);
