use criterion::{black_box, criterion_group, criterion_main, Criterion};

use latframe_core::reconstruct::{down_bricks, phi_l_all, psi_l_all};
use latframe_core::{
    build_lattice, caracol, ccl, enumerate_routes, maximal_cliques, oruga, DEFAULT_ROUTE_LIMIT,
};

fn bench_route_enumeration(c: &mut Criterion) {
    let g = oruga(6);
    c.bench_function("routes/oruga6", |b| {
        b.iter(|| enumerate_routes(black_box(&g)))
    });
}

fn bench_clique_search(c: &mut Criterion) {
    let g = oruga(4);
    c.bench_function("cliques/oruga4", |b| {
        b.iter(|| maximal_cliques(black_box(&g), DEFAULT_ROUTE_LIMIT).unwrap())
    });
}

fn bench_lattice_build(c: &mut Criterion) {
    let g = caracol(4);
    c.bench_function("lattice/caracol4", |b| {
        b.iter(|| build_lattice(black_box(&g), DEFAULT_ROUTE_LIMIT).unwrap())
    });
}

fn bench_reconstruction(c: &mut Criterion) {
    let g = oruga(4);
    let l = build_lattice(&g, DEFAULT_ROUTE_LIMIT).unwrap();
    c.bench_function("reconstruct/oruga4-roundtrip", |b| {
        b.iter(|| {
            for i in 0..l.len() {
                let t = down_bricks(&g, &l, i);
                black_box(psi_l_all(&g, &phi_l_all(&g, &t)));
            }
        })
    });
}

fn bench_coordinates(c: &mut Criterion) {
    let g = caracol(4);
    let l = build_lattice(&g, DEFAULT_ROUTE_LIMIT).unwrap();
    c.bench_function("ccl/caracol4-all", |b| {
        b.iter(|| {
            for element in l.elements() {
                black_box(ccl(&g, element));
            }
        })
    });
}

criterion_group!(
    kernels,
    bench_route_enumeration,
    bench_clique_search,
    bench_lattice_build,
    bench_reconstruction,
    bench_coordinates
);
criterion_main!(kernels);
