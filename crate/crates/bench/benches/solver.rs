use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use throttle_bench::{graph, INSTANCES};
use throttle_core::{
    all_pairs_distances, compile_constraints, min_hitting_set, throttling_number, SolveBudget, TargetFamily,
};

fn distances(c: &mut Criterion) {
    let mut group = c.benchmark_group("all_pairs_distances");
    for name in ["grid:P20xP20", "hypercube:8", "cycle:400"] {
        let g = graph(name);
        group.bench_with_input(BenchmarkId::from_parameter(name), &g, |b, g| {
            b.iter(|| all_pairs_distances(black_box(g)))
        });
    }
    group.finish();
}

fn compile(c: &mut Criterion) {
    let mut group = c.benchmark_group("compile_constraints");
    for inst in INSTANCES {
        let g = graph(inst.name);
        let dm = all_pairs_distances(&g);
        let tf = TargetFamily::standard(&g, inst.variant).unwrap();
        let id = BenchmarkId::new(inst.variant.to_string(), inst.name);
        group.bench_function(id, |b| b.iter(|| compile_constraints(black_box(&dm), &tf, inst.radius)));
    }
    group.finish();
}

fn hitting_set(c: &mut Criterion) {
    let mut group = c.benchmark_group("min_hitting_set");
    for inst in INSTANCES {
        let g = graph(inst.name);
        let tf = TargetFamily::standard(&g, inst.variant).unwrap();
        let cs = compile_constraints(&all_pairs_distances(&g), &tf, inst.radius);
        let id = BenchmarkId::new(inst.variant.to_string(), inst.name);
        group.bench_function(id, |b| b.iter(|| min_hitting_set(black_box(&cs), &SolveBudget::unlimited())));
    }
    group.finish();
}

fn sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("throttling_number");
    group.sample_size(10);
    for inst in INSTANCES {
        let g = graph(inst.name);
        let id = BenchmarkId::new(inst.variant.to_string(), inst.name);
        group.bench_function(id, |b| {
            b.iter(|| throttling_number(black_box(&g), inst.variant, &SolveBudget::unlimited(), 0).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, distances, compile, hitting_set, sweep);
criterion_main!(benches);
