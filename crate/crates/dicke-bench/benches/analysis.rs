use criterion::{black_box, criterion_group, criterion_main, Criterion};
use dicke_core::analysis::{entropy, potential_me, s_max, schmidt_spectrum};
use dicke_core::exact::{binomial, log2_big};
use dicke_core::witness::separatrix;
use dicke_core::{Cut, DickeIndex};

fn bench_exact(c: &mut Criterion) {
    c.bench_function("binomial 2000 choose 1000", |b| {
        b.iter(|| binomial(black_box(2000), black_box(1000)))
    });
    let huge = binomial(2000, 1000);
    c.bench_function("log2_big of C(2000,1000)", |b| {
        b.iter(|| log2_big(black_box(&huge)).unwrap())
    });
}

fn bench_analysis(c: &mut Criterion) {
    let mut group = c.benchmark_group("analysis");
    group.sample_size(20);
    group.bench_function("s_max n=2000", |b| {
        b.iter(|| s_max(black_box(2000)).unwrap())
    });
    group.bench_function("schmidt_spectrum n=400 balanced", |b| {
        b.iter(|| schmidt_spectrum(DickeIndex::new(400, 200).unwrap(), Cut(200)).unwrap())
    });
    group.bench_function("entropy n=400 balanced", |b| {
        b.iter(|| entropy(DickeIndex::new(400, 200).unwrap(), Cut(200)).unwrap())
    });
    group.bench_function("potential_me n=1000 k=500", |b| {
        b.iter(|| potential_me(DickeIndex::new(1000, 500).unwrap()).unwrap())
    });
    group.finish();
}

fn bench_witness(c: &mut Criterion) {
    let grid: Vec<f64> = (0..1001).map(|i| i as f64 / 1000.0).collect();
    c.bench_function("separatrix 1001-point grid (10,1)", |b| {
        b.iter(|| separatrix(DickeIndex::new(10, 1).unwrap(), black_box(&grid)).unwrap())
    });
}

criterion_group!(benches, bench_exact, bench_analysis, bench_witness);
criterion_main!(benches);
