use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use polycount_core::polytopes::coefficient_table;
use polycount_core::Exec;

fn table(c: &mut Criterion) {
    let mut g = c.benchmark_group("coefficient_table");
    g.sample_size(10);
    for n in [1000usize, 2000, 4000] {
        for (name, exec) in [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)] {
            g.bench_with_input(BenchmarkId::new(name, n), &n, |b, &n| {
                b.iter(|| coefficient_table(black_box(n), exec).unwrap())
            });
        }
    }
    g.finish();
}

criterion_group!(benches, table);
criterion_main!(benches);
