use criterion::{criterion_group, criterion_main, BatchSize, BenchmarkId, Criterion};
use costzdd::{build_path_zdd, grid_graph, Bounder, Forest, PathKind};
use costzdd_bench::{grid_fixture, Fixture};

fn construction(c: &mut Criterion) {
    let mut group = c.benchmark_group("construct");
    group.sample_size(10);
    for (n, kind) in [(6, PathKind::Simple), (8, PathKind::Hamiltonian)] {
        let g = grid_graph(n, 1000, 1999, 1).unwrap();
        group.bench_function(BenchmarkId::new(format!("{kind:?}"), n), |b| {
            b.iter(|| {
                let mut z = Forest::new(g.n_edges() as u32);
                build_path_zdd(&mut z, &g, 1, (n + 1) * (n + 1), kind).unwrap()
            })
        });
    }
    group.finish();
}

/// One cold query per iteration; the diagram is rebuilt outside the timing.
fn cold_query(c: &mut Criterion, group: &str, n: u32, kind: PathKind, ratios: &[f64], run: fn(&mut Fixture, f64) -> u64) {
    let mut group = c.benchmark_group(group);
    group.sample_size(10);
    for &r in ratios {
        group.bench_function(BenchmarkId::new(format!("{kind:?}{n}"), r), |b| {
            b.iter_batched(|| grid_fixture(n, kind, 1), |mut fx| run(&mut fx, r), BatchSize::PerIteration)
        });
    }
    group.finish();
}

fn interval(fx: &mut Fixture, r: f64) -> u64 {
    let b = fx.bound(r);
    let mut bd = Bounder::new(&mut fx.forest, fx.costs.clone()).unwrap();
    bd.backtrack_interval_memo(fx.f, b).unwrap();
    bd.total_calls()
}

fn flat(fx: &mut Fixture, r: f64) -> u64 {
    let b = fx.bound(r);
    let mut bd = Bounder::new(&mut fx.forest, fx.costs.clone()).unwrap();
    bd.backtrack_memo(fx.f, b).unwrap();
    bd.total_calls()
}

fn intersection(fx: &mut Fixture, r: f64) -> u64 {
    let b = fx.bound(r);
    let mut bd = Bounder::new(&mut fx.forest, fx.costs.clone()).unwrap();
    bd.bound_via_intersection(fx.f, b).unwrap();
    bd.total_calls()
}

fn bounding(c: &mut Criterion) {
    cold_query(c, "interval", 6, PathKind::Simple, &[1.1, 1.5, 2.0], interval);
    cold_query(c, "interval", 8, PathKind::Hamiltonian, &[1.01, 1.05, 1.12], interval);
    cold_query(c, "memo", 4, PathKind::Simple, &[1.1, 2.0], flat);
    cold_query(c, "intersection", 4, PathKind::Simple, &[1.1, 2.0], intersection);
}

fn sweep(c: &mut Criterion) {
    let ratios = [1.00, 1.01, 1.02, 1.03, 1.05, 1.08, 1.10, 1.12];
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    group.bench_function("Hamiltonian8", |b| {
        b.iter_batched(
            || grid_fixture(8, PathKind::Hamiltonian, 1),
            |mut fx| {
                let bounds: Vec<_> = ratios.iter().map(|&r| fx.bound(r)).collect();
                let mut bd = Bounder::new(&mut fx.forest, fx.costs.clone()).unwrap();
                for b in bounds {
                    bd.backtrack_interval_memo(fx.f, b).unwrap();
                }
                bd.total_calls()
            },
            BatchSize::PerIteration,
        )
    });
    group.finish();
}

criterion_group!(benches, construction, bounding, sweep);
criterion_main!(benches);
