use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};

use ttc_bench::{prepared_fan, prepared_random};
use ttc_core::synthetic::SplitMix64;
use ttc_core::{
    count_all, count_vw1_seqs, count_vw2_seqs, count_vw3_seqs, degeneracy_order, CountScratch,
    DeltaTriple,
};

fn bench_count_all(c: &mut Criterion) {
    let mut group = c.benchmark_group("count_all_fan");
    for path_len in [50u32, 200, 800] {
        let prepared = prepared_fan(path_len, 200);
        let m = prepared.index.total_edges() as u64;
        let delta = DeltaTriple::new(50_000, 30_000, 30_000);
        group.throughput(Throughput::Elements(m));
        group.bench_with_input(BenchmarkId::from_parameter(m), &prepared, |b, p| {
            b.iter(|| count_all(&p.index, &p.static_graph, &p.dag, black_box(delta)).unwrap())
        });
    }
    group.finish();

    let mut group = c.benchmark_group("count_all_random");
    let prepared = prepared_random(200, 40_000);
    let delta = DeltaTriple::new(100_000, 60_000, 60_000);
    group.bench_function("n200_m40000", |b| {
        b.iter(|| {
            count_all(
                &prepared.index,
                &prepared.static_graph,
                &prepared.dag,
                black_box(delta),
            )
            .unwrap()
        })
    });
    group.finish();
}

fn bench_kernels(c: &mut Criterion) {
    let mut rng = SplitMix64::new(3);
    let mut seq = |len: usize| {
        let mut s: Vec<i64> = (0..len).map(|_| rng.below(1_000_000) as i64).collect();
        s.sort_unstable();
        s
    };
    let s1 = seq(1024);
    let s2 = seq(1024);
    let s3 = seq(1024);
    let delta = DeltaTriple::new(60_000, 40_000, 40_000);
    let mut scratch = CountScratch::new();

    let mut group = c.benchmark_group("kernels_sigma_1024");
    group.bench_function("vw3", |b| {
        b.iter(|| count_vw3_seqs(&s1, &s2, &s3, black_box(delta), &mut scratch))
    });
    group.bench_function("vw2", |b| {
        b.iter(|| count_vw2_seqs(&s1, &s2, &s3, black_box(delta), &mut scratch))
    });
    group.bench_function("vw1", |b| {
        b.iter(|| count_vw1_seqs(&s1, &s2, &s3, black_box(delta), &mut scratch))
    });
    group.finish();
}

fn bench_degeneracy(c: &mut Criterion) {
    let prepared = prepared_random(5_000, 200_000);
    c.bench_function("degeneracy_order_n5000", |b| {
        b.iter(|| degeneracy_order(black_box(&prepared.static_graph)))
    });
}

criterion_group!(benches, bench_count_all, bench_kernels, bench_degeneracy);
criterion_main!(benches);
