use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use wlplanar::catalog::{generate, prism, Solid};
use wlplanar::oracle::canonical_form_ir;
use wlplanar::wl::{individualization_is_discrete, stable_coloring};
use wlplanar::ColoredGraph;

fn inputs() -> Vec<(&'static str, ColoredGraph)> {
    vec![
        ("cube", generate(Solid::Cube).unwrap()),
        ("prism(6)", prism(6).unwrap()),
        ("icosahedron", generate(Solid::Icosahedron).unwrap()),
    ]
}

fn wl(c: &mut Criterion) {
    for k in 1..=3 {
        let mut group = c.benchmark_group(format!("{k}-wl"));
        if k == 3 {
            group.sample_size(10);
        }
        for (name, g) in inputs() {
            group.bench_with_input(BenchmarkId::from_parameter(name), &g, |b, g| {
                b.iter(|| stable_coloring(black_box(g), k).unwrap())
            });
        }
        group.finish();
    }
}

fn individualization(c: &mut Criterion) {
    let mut group = c.benchmark_group("individualize-refine");
    for (name, g) in inputs() {
        group.bench_with_input(BenchmarkId::new("pair", name), &g, |b, g| {
            b.iter(|| individualization_is_discrete(black_box(g), &[0, 1]).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("canonical", name), &g, |b, g| {
            b.iter(|| canonical_form_ir(black_box(g)))
        });
    }
    group.finish();
}

criterion_group!(benches, wl, individualization);
criterion_main!(benches);
