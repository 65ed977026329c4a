use criterion::{black_box, criterion_group, criterion_main, Criterion};

use chromastab::harness::{enumerate_small_graphs, scan_graph6_lines, ScanChecks};
use chromastab::{
    bipartite_edge_frustration, canonical_form, chromatic_number, count_odd_cycles,
    edge_stability, parse_graph6, recognize_32_critical_fast, write_graph6, Graph,
};
use chromastab_bench::{chain12, k333, k4_subdivision, petersen};

fn bench_coloring(c: &mut Criterion) {
    let petersen = petersen();
    c.bench_function("chromatic_number/petersen", |b| {
        b.iter(|| chromatic_number(black_box(&petersen)))
    });
    let k7 = Graph::complete(7);
    c.bench_function("chromatic_number/k7", |b| {
        b.iter(|| chromatic_number(black_box(&k7)))
    });
}

fn bench_frustration(c: &mut Criterion) {
    let dense = k333();
    c.bench_function("frustration/k333", |b| {
        b.iter(|| bipartite_edge_frustration(black_box(&dense)))
    });
    let sub = k4_subdivision();
    c.bench_function("edge_stability/k4_subdivision", |b| {
        b.iter(|| edge_stability(black_box(&sub)).unwrap())
    });
}

fn bench_recognizer(c: &mut Criterion) {
    let chain = chain12();
    c.bench_function("recognize_32_critical/chain12", |b| {
        b.iter(|| recognize_32_critical_fast(black_box(&chain)))
    });
}

fn bench_cycles_and_canon(c: &mut Criterion) {
    let petersen = petersen();
    c.bench_function("odd_cycles_cutoff5/petersen", |b| {
        b.iter(|| count_odd_cycles(black_box(&petersen), Some(5)))
    });
    c.bench_function("canonical_form/petersen", |b| {
        b.iter(|| canonical_form(black_box(&petersen)).unwrap())
    });
    let g6 = write_graph6(&petersen).unwrap();
    c.bench_function("graph6_round_trip/petersen", |b| {
        b.iter(|| {
            let g = parse_graph6(black_box(&g6)).unwrap();
            write_graph6(&g).unwrap()
        })
    });
}

fn bench_scan(c: &mut Criterion) {
    let lines: Vec<String> = enumerate_small_graphs(6, false)
        .unwrap()
        .iter()
        .filter(|g| (0..g.n()).all(|v| g.degree(v) > 0))
        .map(|g| write_graph6(g).unwrap())
        .collect();
    let checks = ScanChecks::default();
    c.bench_function("scan/order6_census", |b| {
        b.iter(|| scan_graph6_lines(black_box(&lines), &checks))
    });
}

criterion_group!(
    benches,
    bench_coloring,
    bench_frustration,
    bench_recognizer,
    bench_cycles_and_canon,
    bench_scan
);
criterion_main!(benches);
