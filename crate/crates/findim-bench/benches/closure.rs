use criterion::{black_box, criterion_group, criterion_main, Criterion};

use findim_bench::{family_pair, infinite_pair, sl2_pair};
use findim_core::closure::{close, model_filiform, series_analysis};

fn bench_close_family(c: &mut Criterion) {
    let mut group = c.benchmark_group("close_family");
    for l in [4, 16, 64] {
        let gens = family_pair(2, l);
        group.bench_function(format!("l{l}"), |b| {
            b.iter(|| close(black_box(&gens), 400, 10_000).unwrap())
        });
    }
    group.finish();
}

fn bench_close_sl2(c: &mut Criterion) {
    let gens = sl2_pair();
    c.bench_function("close_sl2", |b| {
        b.iter(|| close(black_box(&gens), 100, 10_000).unwrap())
    });
}

fn bench_cap_trip(c: &mut Criterion) {
    let gens = infinite_pair();
    c.bench_function("close_infinite_cap20", |b| {
        b.iter(|| close(black_box(&gens), 20, 10_000).unwrap())
    });
}

fn bench_post_processing(c: &mut Criterion) {
    let gens = family_pair(2, 32);
    let result = close(&gens, 400, 10_000).unwrap();
    c.bench_function("series_analysis_dim34", |b| {
        b.iter(|| series_analysis(black_box(&result)).unwrap())
    });
    c.bench_function("model_filiform_dim34", |b| {
        b.iter(|| model_filiform(black_box(&result)).unwrap())
    });
}

criterion_group!(
    benches,
    bench_close_family,
    bench_close_sl2,
    bench_cap_trip,
    bench_post_processing
);
criterion_main!(benches);
