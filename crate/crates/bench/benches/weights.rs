//! Weight-set computations for a generic GL_3 parameter.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use serrewt_core::oracle::{brute_jh, brute_wset};
use serrewt_core::{FiniteWeylElt, RootDatum, SerreWeight, TameParam, WeightVec};

fn setup() -> (RootDatum, TameParam) {
    let d = RootDatum::new(3, 1, 37).unwrap();
    let t = TameParam::from_parts(
        FiniteWeylElt::from_rows(&[[2, 3, 1]]).unwrap(),
        WeightVec::from_rows(&[[20, 10, 0]]).unwrap(),
    )
    .unwrap();
    (d, t)
}

fn jh(c: &mut Criterion) {
    let (d, t) = setup();
    let r = t.as_dl();
    let _ = d.jh_set(&r).unwrap();
    let mut g = c.benchmark_group("jh");
    g.bench_function("adm_inclusion", |b| {
        b.iter(|| d.jh_set(black_box(&r)).unwrap())
    });
    g.bench_function("up_arrow", |b| {
        b.iter(|| d.jh_set_via_up(black_box(&r)).unwrap())
    });
    g.bench_function("oracle", |b| {
        b.iter(|| brute_jh(&d, black_box(&r)).unwrap())
    });
    g.finish();
}

fn wset(c: &mut Criterion) {
    let (d, t) = setup();
    let mut g = c.benchmark_group("wset");
    g.bench_function("characterization", |b| {
        b.iter(|| d.wset(black_box(&t)).unwrap())
    });
    g.bench_function("definition", |b| {
        b.iter(|| d.wset_by_definition(black_box(&t)).unwrap())
    });
    g.bench_function("oracle", |b| {
        b.iter(|| brute_wset(&d, black_box(&t)).unwrap())
    });
    g.bench_function("obvious", |b| b.iter(|| d.wobv(black_box(&t)).unwrap()));
    g.finish();
}

fn graph_and_elimination(c: &mut Criterion) {
    let (d, t) = setup();
    c.bench_function("connectivity_graph", |b| {
        b.iter(|| d.connectivity_graph(black_box(&t)).unwrap())
    });
    let sigma = SerreWeight::new(&d, &WeightVec::from_rows(&[[30, 12, 0]]).unwrap()).unwrap();
    assert!(!d.wset(&t).unwrap().contains(&sigma));
    c.bench_function("eliminate", |b| {
        b.iter(|| {
            let cert = d.eliminate(black_box(&sigma), &t).unwrap();
            cert.validate(&d).unwrap();
            cert
        })
    });
}

criterion_group!(benches, jh, wset, graph_and_elimination);
criterion_main!(benches);
