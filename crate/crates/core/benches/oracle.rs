use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use polycount_core::oracle::{brute_force_counts, wheel_statistics};
use polycount_core::Exec;

fn oracle(c: &mut Criterion) {
    let mut g = c.benchmark_group("oracle");
    g.sample_size(10);
    for (name, exec) in [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)] {
        g.bench_with_input(BenchmarkId::new(format!("wheel_statistics/{name}"), 11), &11u32, |b, &n| {
            b.iter(|| wheel_statistics(black_box(n), exec))
        });
        g.bench_with_input(BenchmarkId::new(format!("brute_force_counts/{name}"), 10), &10u32, |b, &n| {
            b.iter(|| brute_force_counts(black_box(n), exec))
        });
    }
    g.finish();
}

criterion_group!(benches, oracle);
criterion_main!(benches);
