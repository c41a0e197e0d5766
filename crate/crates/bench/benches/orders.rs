//! Length, Bruhat and up-arrow comparisons, against the brute-force oracle
//! where it is affordable.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use serrewt_core::oracle::{brute_bruhat, brute_up};
use serrewt_core::{ExtAffineElt, FiniteWeylElt, RootDatum, TranslationBox, WeightVec};

fn elt(trans: &[i64], perm: &[usize]) -> ExtAffineElt {
    ExtAffineElt::new(
        WeightVec::from_rows(&[trans]).unwrap(),
        FiniteWeylElt::from_rows(&[perm]).unwrap(),
    )
    .unwrap()
}

/// Every element `t_lambda w` with `|lambda_i| <= r`.
fn box_elements(n: usize, r: i64) -> Vec<ExtAffineElt> {
    let weyl = FiniteWeylElt::all(n, 1);
    let mut trans = vec![vec![]];
    for _ in 0..n {
        trans = trans
            .into_iter()
            .flat_map(|t: Vec<i64>| {
                (-r..=r).map(move |x| {
                    let mut t = t.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
    }
    trans
        .iter()
        .flat_map(|t| {
            weyl.iter().map(move |w| {
                ExtAffineElt::new(WeightVec::from_rows(&[t]).unwrap(), w.clone()).unwrap()
            })
        })
        .collect()
}

fn length(c: &mut Criterion) {
    let mut g = c.benchmark_group("length");
    for n in [3, 5] {
        let xs = box_elements(n, 2);
        g.bench_with_input(BenchmarkId::new("hyperplanes", n), &xs, |b, xs| {
            b.iter(|| xs.iter().map(|x| black_box(x).length()).sum::<usize>())
        });
        g.bench_with_input(BenchmarkId::new("closed_form", n), &xs, |b, xs| {
            b.iter(|| {
                xs.iter()
                    .map(|x| black_box(x).length_closed_form())
                    .sum::<usize>()
            })
        });
    }
    g.finish();
}

fn bruhat(c: &mut Criterion) {
    let u = elt(&[1, 0, 0], &[2, 1, 3]);
    let w = elt(&[2, 1, -1], &[3, 1, 2]);
    let mut g = c.benchmark_group("bruhat");
    g.bench_function("optimized", |b| {
        b.iter(|| black_box(&u).bruhat_leq(black_box(&w)))
    });
    g.bench_function("oracle", |b| {
        b.iter(|| brute_bruhat(black_box(&u), black_box(&w), 10).unwrap())
    });
    g.finish();

    let xs = box_elements(3, 1);
    c.bench_function("bruhat/all_pairs_gl3_box1", |b| {
        b.iter(|| {
            let mut k = 0usize;
            for x in &xs {
                for y in &xs {
                    k += x.bruhat_leq(y) as usize;
                }
            }
            k
        })
    });
}

fn up(c: &mut Criterion) {
    let d = RootDatum::new(3, 1, 37).unwrap();
    let dom: Vec<ExtAffineElt> = d
        .restricted_reps()
        .into_iter()
        .map(|x| d.w_h().inverse().mul(&x))
        .collect();
    let (u, w) = (&dom[0], &dom[dom.len() - 1]);
    let mut g = c.benchmark_group("up");
    g.bench_function("optimized", |b| {
        b.iter(|| {
            u.up_leq(black_box(w), TranslationBox::covering(u, w))
                .unwrap()
        })
    });
    g.bench_function("oracle", |b| {
        b.iter(|| brute_up(u, black_box(w), 8).unwrap())
    });
    g.finish();
}

fn admissible(c: &mut Criterion) {
    let d = RootDatum::new(3, 1, 37).unwrap();
    let xs = box_elements(3, 1);
    c.bench_function("adm_eta_contains/gl3_box1", |b| {
        b.iter(|| xs.iter().filter(|x| d.adm_eta_contains(x)).count())
    });
}

criterion_group!(benches, length, bruhat, up, admissible);
criterion_main!(benches);
