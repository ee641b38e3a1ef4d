use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use gridnet_core::search::{search_ds, search_mh, search_na, MhMode};
use gridnet_core::SearchOptions;

fn bench_search(c: &mut Criterion) {
    let mut group = c.benchmark_group("search");
    group.sample_size(10);
    let opts = SearchOptions::default();
    group.bench_function("ds 61", |b| b.iter(|| search_ds(black_box(61), &opts).unwrap()));
    for n in [30, 60] {
        group.bench_function(format!("na {n}"), |b| b.iter(|| search_na(black_box(n), &opts).unwrap()));
    }
    let direct = SearchOptions { mh_mode: MhMode::Direct, ..SearchOptions::default() };
    group.bench_function("mh 28 direct", |b| b.iter(|| search_mh(black_box(28), &direct).unwrap()));
    group.finish();
}

criterion_group!(benches, bench_search);
criterion_main!(benches);
