use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use regdeg::atlas::{compute_census, enumerate_connected};

fn bench_enumerate(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_connected");
    group.sample_size(10);
    for n in [6, 7, 8] {
        group.bench_function(format!("n{n}"), |b| {
            b.iter(|| enumerate_connected(n).unwrap())
        });
    }
    group.finish();
}

fn bench_census(c: &mut Criterion) {
    let mut group = c.benchmark_group("census");
    group.sample_size(10);
    for n in [6, 7, 8] {
        group.bench_function(format!("n{n}"), |b| {
            b.iter_batched(
                || enumerate_connected(n).unwrap(),
                |graphs| compute_census(n, &graphs).unwrap(),
                BatchSize::LargeInput,
            )
        });
    }
    group.finish();
}

criterion_group!(benches, bench_enumerate, bench_census);
criterion_main!(benches);
