use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use domiperf::enumeration::enumerate_trees;
use domiperf::invariants::{common_independence_number, domination_number, independence_number};
use domiperf::{canonical_form, perfect_by_definition, perfect_by_theorem};
use domiperf_bench::random_graphs;

fn solvers(c: &mut Criterion) {
    let mut group = c.benchmark_group("solvers");
    for n in [16, 24, 32] {
        let graphs = random_graphs(n as u64, 8, n, 0.2);
        group.bench_with_input(BenchmarkId::new("gamma", n), &graphs, |b, gs| {
            b.iter(|| gs.iter().map(|g| domination_number(g).unwrap().0).sum::<usize>())
        });
        group.bench_with_input(BenchmarkId::new("alpha", n), &graphs, |b, gs| {
            b.iter(|| gs.iter().map(|g| independence_number(g).0).sum::<usize>())
        });
        group.bench_with_input(BenchmarkId::new("alpha_c", n), &graphs, |b, gs| {
            b.iter(|| gs.iter().map(|g| common_independence_number(g).unwrap()).sum::<usize>())
        });
    }
    group.finish();
}

fn perfection(c: &mut Criterion) {
    let mut group = c.benchmark_group("perfection");
    let graphs = random_graphs(1, 16, 12, 0.3);
    group.bench_function("theorem/12", |b| b.iter(|| graphs.iter().filter(|g| perfect_by_theorem(g).perfect).count()));
    group.bench_function("definition/12", |b| {
        b.iter(|| graphs.iter().filter(|g| perfect_by_definition(g).unwrap().perfect).count())
    });
    group.finish();
}

fn canonical(c: &mut Criterion) {
    let graphs = random_graphs(2, 32, 10, 0.5);
    c.bench_function("canonical_form/10", |b| {
        b.iter(|| graphs.iter().map(|g| canonical_form(black_box(g)).unwrap().token.len()).sum::<usize>())
    });
}

fn enumeration(c: &mut Criterion) {
    c.bench_function("enumerate_trees/11", |b| b.iter(|| enumerate_trees(black_box(11)).unwrap().len()));
}

criterion_group!(benches, solvers, perfection, canonical, enumeration);
criterion_main!(benches);
