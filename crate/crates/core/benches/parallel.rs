use criterion::{criterion_group, criterion_main, Criterion};

use hls_core::hls::{hls_series_with, DEFAULT_BOUND};
use hls_core::oracle::census_with;
use hls_core::par::Strategy;

fn strategies(c: &mut Criterion) {
    let mut g = c.benchmark_group("hls_series_4");
    g.sample_size(10);
    for (name, s) in [("sequential", Strategy::Sequential), ("parallel", Strategy::Parallel)] {
        g.bench_function(name, |b| b.iter(|| hls_series_with(4, DEFAULT_BOUND, s).unwrap()));
    }
    g.finish();

    let mut g = c.benchmark_group("census_3_3_4");
    g.sample_size(10);
    for (name, s) in [("sequential", Strategy::Sequential), ("parallel", Strategy::Parallel)] {
        g.bench_function(name, |b| b.iter(|| census_with(3, 3, 4, s).unwrap()));
    }
    g.finish();
}

criterion_group!(benches, strategies);
criterion_main!(benches);
