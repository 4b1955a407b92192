use std::sync::Arc;

use criterion::{black_box, criterion_group, criterion_main, Criterion};
use onerel_core::embeddings::{named_path, phi_p4_map, verify_monoid_injective};
use onerel_core::{HnnTrefoil, RaagElement, SimpGraph, StallingsGraph, Trace};

fn p4() -> Arc<SimpGraph> {
    named_path(4).unwrap()
}

fn trace_nf(c: &mut Criterion) {
    let g = p4();
    let w = g.alphabet().parse_positive("d c b a d c b a d c b a d c b a").unwrap();
    c.bench_function("trace_nf_len16", |b| b.iter(|| Trace::normalize(&g, black_box(&w)).unwrap()));
}

fn raag_nf(c: &mut Criterion) {
    let g = p4();
    let w = g.alphabet().parse_word("d c^-1 b a d^-1 c b^-1 a^-1 d c b a d^-1 c^-1 b a").unwrap();
    c.bench_function("raag_nf_len16", |b| b.iter(|| RaagElement::normalize(&g, black_box(&w)).unwrap()));
}

fn stallings_fold(c: &mut Criterion) {
    let alphabet = SimpGraph::edgeless(&["a", "b"]).unwrap().alphabet().clone();
    let gens: Vec<_> = ["a^3 b a^-1 b^2", "b a^2 b^-1 a b", "a b a b a^-2 b^-1"]
        .iter()
        .map(|s| alphabet.parse_word(s).unwrap())
        .collect();
    c.bench_function("stallings_fold", |b| b.iter(|| StallingsGraph::from_generators(2, black_box(&gens)).unwrap()));
}

fn hnn_multiply(c: &mut Criterion) {
    let (a, d) = (HnnTrefoil::a(), HnnTrefoil::d());
    let g = a.multiply(&d).multiply(&HnnTrefoil::c().invert());
    c.bench_function("hnn_trefoil_pow8", |b| b.iter(|| black_box(&g).pow(8)));
}

fn phi_injectivity(c: &mut Criterion) {
    let g = p4();
    let map = phi_p4_map(&g).unwrap();
    c.bench_function("phi_p4_injective_len4", |b| b.iter(|| verify_monoid_injective(&map, 4)));
}

criterion_group!(benches, trace_nf, raag_nf, stallings_fold, hnn_multiply, phi_injectivity);
criterion_main!(benches);
