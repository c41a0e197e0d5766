use std::collections::{BTreeMap, BTreeSet, HashSet};

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use super::brute::{
    brute_adm, brute_adm_eta, brute_bruhat, brute_covers, brute_jh, brute_jh_unchecked,
    brute_lower_interval, brute_up, brute_wobv, brute_wset, brute_wset_unchecked, offsets,
    ORACLE_MAX_LENGTH,
};
use super::{Mutation, SweepConfig, SweepReport, SweepResult};
use crate::affine_weyl::{omega_element, ExtAffineElt, Generator, TranslationBox};
use crate::error::Result;
use crate::herzig::TameParam;
use crate::root_data::{FiniteWeylElt, Root, RootDatum, WeightVec};
use crate::weights_dl::{DLPresentation, SerreWeight};

/// Every sweep, in report order.
pub const SWEEP_NAMES: &[&str] = &[
    "bruhat-vs-oracle",
    "up-vs-oracle",
    "adm-vs-oracle",
    "factorization-reduced",
    "omega-pairing",
    "omega-orthogonal",
    "omega-nonpositive",
    "omega-bounded",
    "diamond-factorization-reduced",
    "subregular-bound",
    "length-additivity",
    "zero-generic-uniqueness",
    "jh-paths-agree",
    "wset-paths-agree",
    "wset-cardinality",
    "decent-weight-genericity",
    "covers-vs-oracle",
    "isolating",
    "covering-characterization",
    "obvious-weights-connected",
    "connecting-types-cover",
    "connectivity",
    "weight-intersection",
    "elimination-totality",
];

enum Check {
    Skip,
    Pass,
    Fail(Value),
}

fn val<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn empty(name: &str) -> SweepResult {
    SweepResult {
        name: name.to_string(),
        checked: 0,
        passed: 0,
        failed: 0,
        errors: 0,
        counterexamples: Vec::new(),
        observed: Value::Null,
    }
}

/// Runs `f` over `items` in parallel; each call reports checks tagged with
/// the index of the sweep in `names` they belong to. Errors are charged to
/// every sweep in `names`. Results keep the order of `items`.
fn tally<T, F>(cfg: &SweepConfig, names: &[&str], items: &[T], f: F) -> Vec<SweepResult>
where
    T: Sync,
    F: Fn(&T) -> Result<Vec<(usize, Check)>> + Sync,
{
    let outcomes: Vec<Result<Vec<(usize, Check)>>> = items.par_iter().map(&f).collect();
    let mut out: Vec<SweepResult> = names.iter().map(|n| empty(n)).collect();
    let cap = cfg.max_counterexamples;
    for o in outcomes {
        match o {
            Ok(checks) => {
                for (k, c) in checks {
                    let r = &mut out[k];
                    match c {
                        Check::Skip => {}
                        Check::Pass => {
                            r.checked += 1;
                            r.passed += 1;
                        }
                        Check::Fail(v) => {
                            r.checked += 1;
                            r.failed += 1;
                            if r.counterexamples.len() < cap {
                                r.counterexamples.push(v);
                            }
                        }
                    }
                }
            }
            Err(e) => {
                for r in &mut out {
                    r.errors += 1;
                    if r.counterexamples.len() < cap {
                        r.counterexamples.push(json!({ "error": e.to_string() }));
                    }
                }
            }
        }
    }
    out
}

fn check(ok: bool, witness: impl FnOnce() -> Value) -> Check {
    if ok {
        Check::Pass
    } else {
        Check::Fail(witness())
    }
}

// ---------------------------------------------------------------------------
// Domains

/// Every element of length at most `max_len`, in sorted order.
fn elements_up_to(n: usize, f: usize, max_len: usize) -> Vec<ExtAffineElt> {
    let gens: Vec<ExtAffineElt> = Generator::all(n, f).map(|g| g.element(n, f)).collect();
    let mut seen = HashSet::new();
    let mut layer = Vec::new();
    let mut exps = vec![0i64; f];
    loop {
        let d = omega_element(n, f, &exps);
        seen.insert(d.clone());
        layer.push(d);
        let mut j = 0;
        while j < f {
            exps[j] += 1;
            if exps[j] < n as i64 {
                break;
            }
            exps[j] = 0;
            j += 1;
        }
        if j == f {
            break;
        }
    }
    for len in 1..=max_len {
        let mut next = Vec::new();
        for x in &layer {
            for g in &gens {
                let y = g.mul(x);
                if y.length() == len && seen.insert(y.clone()) {
                    next.push(y);
                }
            }
        }
        layer = next;
    }
    let mut out: Vec<ExtAffineElt> = seen.into_iter().collect();
    out.sort();
    out
}

fn dominant_box(datum: &RootDatum, r: i64) -> Vec<ExtAffineElt> {
    let mut out = Vec::new();
    for t in offsets(datum.n(), datum.f(), r) {
        for w in datum.weyl_group() {
            let x = ExtAffineElt::new(t.clone(), w).expect("shape");
            if x.is_dominant_elt() {
                out.push(x);
            }
        }
    }
    out
}

fn x0(n: usize, c: &[i64]) -> WeightVec {
    let rows: Vec<Vec<i64>> = c.iter().map(|&v| vec![v; n]).collect();
    WeightVec::from_rows(&rows).expect("shape")
}

/// Canonical `W~_1` representatives translated by `X^0` within the box.
fn restricted_domain(datum: &RootDatum, r: i64) -> Vec<ExtAffineElt> {
    let (n, f) = (datum.n(), datum.f());
    let mut out = Vec::new();
    for c in offsets(1, f, r) {
        let shift = x0(n, &c.to_rows().concat());
        for w in datum.restricted_reps() {
            out.push(w.translate(&shift));
        }
    }
    out
}

fn weight_rows(n: usize, p: i64) -> Vec<Vec<i64>> {
    let mut rows: Vec<Vec<i64>> = vec![vec![0]];
    for _ in 1..n {
        rows = rows
            .into_iter()
            .flat_map(|r| {
                (0..p).map(move |a| {
                    let mut v = vec![r[0] + a];
                    v.extend_from_slice(&r);
                    v
                })
            })
            .collect();
    }
    rows
}

fn products<T: Clone>(per: &[Vec<T>], f: usize) -> Vec<Vec<T>> {
    let mut out: Vec<Vec<T>> = vec![Vec::new()];
    for pj in per.iter().take(f) {
        let mut next = Vec::with_capacity(out.len() * pj.len());
        for prefix in &out {
            for x in pj {
                let mut v = prefix.clone();
                v.push(x.clone());
                next.push(v);
            }
        }
        out = next;
    }
    out
}

/// Weights `mu` with last entry `0` in each embedding and `mu - eta` in `C_0`.
fn c0_weights(datum: &RootDatum) -> Vec<WeightVec> {
    let (n, f, p) = (datum.n(), datum.f(), datum.p());
    let eta_row: Vec<i64> = datum.eta().row(0).to_vec();
    let single = RootDatum::new(n, 1, p).expect("datum");
    let rows: Vec<Vec<i64>> = weight_rows(n, p + n as i64)
        .into_iter()
        .filter(|r| {
            let w = WeightVec::from_rows(std::slice::from_ref(r)).expect("shape");
            let e = WeightVec::from_rows(std::slice::from_ref(&eta_row)).expect("shape");
            single.in_c0(&(&w - &e))
        })
        .collect();
    let per = vec![rows; f];
    products(&per, f)
        .into_iter()
        .map(|rs| WeightVec::from_rows(&rs).expect("shape"))
        .collect()
}

/// Evenly spaced picks of at most `limit` items, keeping the order.
fn spread<T: Clone>(all: Vec<T>, limit: usize) -> Vec<T> {
    if all.len() <= limit || limit == 0 {
        return all;
    }
    let len = all.len();
    (0..limit).map(|i| all[i * len / limit].clone()).collect()
}

/// Tame parameters `tau(s, mu + c)` with `mu - eta` at least `lo`-deep (and
/// at most `hi`-deep when given), twisted by `c = (k, ..., k)` in the first
/// embedding for `0 <= k < p^f - 1`.
fn params(datum: &RootDatum, lo: i64, hi: Option<i64>, limit: usize) -> Vec<TameParam> {
    let (n, f, p) = (datum.n(), datum.f(), datum.p());
    let eta = datum.eta();
    let mus: Vec<WeightVec> = c0_weights(datum)
        .into_iter()
        .filter(|mu| {
            let d = datum.depth(&(mu - &eta));
            d >= lo && hi.map_or(true, |h| d <= h)
        })
        .collect();
    let twists = p.pow(f as u32) - 1;
    let mut all = Vec::new();
    for mu in &mus {
        for k in 0..twists {
            for s in datum.weyl_group() {
                all.push((mu.clone(), k, s));
            }
        }
    }
    spread(all, limit)
        .into_iter()
        .map(|(mu, k, s)| {
            let mut c = vec![0; f];
            c[0] = k;
            TameParam::from_parts(s, &mu + &x0(n, &c)).expect("shape")
        })
        .collect()
}

fn sorted_dedup(mut v: Vec<SerreWeight>) -> Vec<SerreWeight> {
    v.sort();
    v.dedup();
    v
}

fn table_weights(
    datum: &RootDatum,
    tau: &DLPresentation,
    table: &[Vec<(usize, WeightVec)>],
) -> Result<Vec<SerreWeight>> {
    let pres = datum.presentations_from_table(tau.s(), tau.mu(), table)?;
    let ws = pres
        .iter()
        .map(|x| datum.serre_weight(x))
        .collect::<Result<Vec<_>>>()?;
    Ok(sorted_dedup(ws))
}

fn reflection(datum: &RootDatum, alpha: Root) -> ExtAffineElt {
    ExtAffineElt::finite(FiniteWeylElt::reflection(datum.n(), datum.f(), alpha))
}

fn deep(datum: &RootDatum, mu: &WeightVec, m: i64) -> bool {
    let x = mu - &datum.eta();
    datum.in_c0(&x) && datum.depth(&x) >= m
}

// ---------------------------------------------------------------------------
// Order theory

/// Compares the optimized Bruhat, up-arrow and admissible-set predicates
/// with the brute-force ones on every pair of elements of length at most
/// `max_len`.
pub fn order_sweep(datum: &RootDatum, max_len: usize, cfg: &SweepConfig) -> Vec<SweepResult> {
    let (n, f) = (datum.n(), datum.f());
    let elts = elements_up_to(n, f, max_len);
    let mut out = Vec::new();

    if cfg.wants("bruhat-vs-oracle") || cfg.wants("up-vs-oracle") {
        let pairs: Vec<(usize, usize)> = (0..elts.len())
            .flat_map(|i| (0..elts.len()).map(move |j| (i, j)))
            .collect();
        let want_b = cfg.wants("bruhat-vs-oracle");
        let want_u = cfg.wants("up-vs-oracle");
        let res = tally(
            cfg,
            &["bruhat-vs-oracle", "up-vs-oracle"],
            &pairs,
            |&(i, j)| {
                let (u, w) = (&elts[i], &elts[j]);
                let mut checks = Vec::new();
                if want_b {
                    let fast = u.bruhat_leq(w);
                    let slow = brute_bruhat(u, w, ORACLE_MAX_LENGTH)?;
                    checks.push((
                        0,
                        check(
                            fast == slow,
                            || json!({"u": u, "w": w, "fast": fast, "oracle": slow}),
                        ),
                    ));
                }
                if want_u {
                    let fast = u.up_leq(w, TranslationBox::covering(u, w))?;
                    let radius = u
                        .trans()
                        .rows()
                        .chain(w.trans().rows())
                        .flatten()
                        .map(|t| t.abs())
                        .max()
                        .unwrap_or(0)
                        + 2 * n as i64;
                    let slow = brute_up(u, w, radius)?;
                    checks.push((
                        1,
                        check(
                            fast == slow,
                            || json!({"u": u, "w": w, "fast": fast, "oracle": slow}),
                        ),
                    ));
                }
                Ok(checks)
            },
        );
        for (k, r) in res.into_iter().enumerate() {
            if [want_b, want_u][k] {
                out.push(r);
            }
        }
    }

    if cfg.wants("adm-vs-oracle") {
        let eta = datum.eta();
        let mut minuscule = vec![vec![0i64; n]; f];
        for row in &mut minuscule {
            row[0] = 1;
        }
        let minuscule = WeightVec::from_rows(&minuscule).expect("shape");
        match (brute_adm_eta(datum), brute_adm(datum, &minuscule)) {
            (Ok(adm_eta), Ok(adm_min)) => {
                let mut items: Vec<ExtAffineElt> = elts.clone();
                items.extend(adm_eta.iter().cloned());
                items.sort();
                items.dedup();
                let mut r = tally(cfg, &["adm-vs-oracle"], &items, |x| {
                    let a = datum.adm_eta_contains(x);
                    let b = datum.adm_contains(&eta, x)?;
                    let c = datum.adm_contains(&minuscule, x)?;
                    let ok = a == adm_eta.contains(x) && b == a && c == adm_min.contains(x);
                    Ok(vec![(
                        0,
                        check(ok, || json!({"x": x, "eta": a, "minuscule": c})),
                    )])
                });
                r[0].observed =
                    json!({ "adm_eta_size": adm_eta.len(), "adm_minuscule_size": adm_min.len() });
                out.append(&mut r);
            }
            (Err(e), _) | (_, Err(e)) => {
                let mut r = empty("adm-vs-oracle");
                r.errors = 1;
                r.counterexamples.push(json!({ "error": e.to_string() }));
                out.push(r);
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Factorization lemmas

struct Domains {
    /// `w~_2` candidates: `W~_1` up to `X^0`, or `W~^+` under the mutation.
    w2: Vec<ExtAffineElt>,
    /// `(w~_2, alpha, w~_1)` with `w~_1 in W~^+` (in the box) and, unless
    /// mutated away, `w~_1 up-arrow w~_h^-1 w~_2`.
    triples: Vec<(ExtAffineElt, Root, ExtAffineElt)>,
    /// Up-arrow tests that could not be decided.
    undecided: usize,
}

fn domains(datum: &RootDatum, cfg: &SweepConfig, w2_radius: i64) -> Domains {
    let drop_restricted = cfg.mutation == Some(Mutation::DropRestrictedHypothesis);
    let drop_up = cfg.mutation == Some(Mutation::DropUpHypothesis);
    let w2 = if drop_restricted {
        dominant_box(datum, w2_radius)
            .into_iter()
            .filter(|x| !x.is_restricted_elt())
            .collect()
    } else {
        restricted_domain(datum, w2_radius)
    };
    let dom = dominant_box(datum, cfg.radius);
    let alphas: Vec<Root> = datum.simple_roots().collect();
    let wh_inv = datum.w_h().inverse();
    let cands: Vec<(usize, usize)> = (0..w2.len())
        .flat_map(|i| (0..dom.len()).map(move |k| (i, k)))
        .collect();
    let kept: Vec<Option<bool>> = cands
        .par_iter()
        .map(|&(i, k)| {
            if drop_up {
                return Some(true);
            }
            let target = wh_inv.mul(&w2[i]);
            dom[k]
                .up_leq(&target, TranslationBox::covering(&dom[k], &target))
                .ok()
        })
        .collect();
    let mut triples = Vec::new();
    let mut undecided = 0;
    for (&(i, k), keep) in cands.iter().zip(kept) {
        match keep {
            Some(true) => {
                for &a in &alphas {
                    triples.push((w2[i].clone(), a, dom[k].clone()));
                }
            }
            Some(false) => {}
            None => undecided += 1,
        }
    }
    Domains {
        w2,
        triples,
        undecided,
    }
}

fn factorization_sweeps(datum: &RootDatum, cfg: &SweepConfig, out: &mut Vec<SweepResult>) {
    let names = [
        "factorization-reduced",
        "omega-pairing",
        "omega-orthogonal",
        "omega-nonpositive",
        "omega-bounded",
        "diamond-factorization-reduced",
        "subregular-bound",
        "length-additivity",
    ];
    if !names.iter().any(|x| cfg.wants(x)) {
        return;
    }
    let dm = domains(datum, cfg, cfg.radius);
    let w0 = datum.w0_elt();
    let wh = datum.w_h();
    let wh_inv = wh.inverse();
    let alphas: Vec<Root> = datum.simple_roots().collect();
    let positive: Vec<Root> = datum.positive_roots().to_vec();

    // Over triples.
    let mut r = tally(
        cfg,
        &["factorization-reduced", "subregular-bound"],
        &dm.triples,
        |(w2, alpha, w1)| {
            let sa = reflection(datum, *alpha);
            let mut checks = Vec::new();
            let x = w2.inverse().mul(&sa).mul(&w0).mul(w1);
            let expect = w2.length() + sa.mul(&w0).length() + w1.length();
            checks.push((0, check(x.length() == expect, || {
            json!({"w2": w2, "alpha": alpha, "w1": w1, "length": x.length(), "expected": expect})
        })));
            // The bound needs <omega_alpha, beta^vee> <= 1 for all beta > 0.
            let oa = datum.omega_alpha(*alpha);
            if positive.iter().all(|&b| oa.pair(b) <= 1) {
                let d = sa.mul(w2).diamond();
                let lhs = d.mul(&w2.inverse()).mul(&sa).mul(&w0).mul(w1);
                let rhs = w0.mul(&wh_inv).mul(&d);
                checks.push((
                    1,
                    check(
                        lhs.bruhat_leq(&rhs),
                        || json!({"w2": w2, "alpha": alpha, "w1": w1, "lhs": lhs, "rhs": rhs}),
                    ),
                ));
            }
            Ok(checks)
        },
    );
    for x in &mut r {
        x.errors += dm.undecided;
    }
    out.extend(r.into_iter().filter(|x| cfg.wants(&x.name)));

    // Over (w~_2, alpha).
    let pairs: Vec<(ExtAffineElt, Root)> = dm
        .w2
        .iter()
        .flat_map(|w| alphas.iter().map(move |&a| (w.clone(), a)))
        .collect();
    let r = tally(
        cfg,
        &[
            "omega-pairing",
            "omega-orthogonal",
            "omega-nonpositive",
            "omega-bounded",
            "diamond-factorization-reduced",
        ],
        &pairs,
        |(w2, alpha)| {
            let sa = reflection(datum, *alpha);
            let x = sa.mul(w2);
            let d = x.diamond();
            let omega = d.trans() - x.trans();
            let wit = || json!({"w2": w2, "alpha": alpha, "omega": omega});
            let mut checks = Vec::new();
            checks.push((0, check(omega.pair(*alpha) == 1, wit)));
            for &beta in &alphas {
                if beta == *alpha {
                    continue;
                }
                let c = beta.cartan(*alpha);
                if c == 0 {
                    checks.push((
                        1,
                        check(
                            omega.pair(beta) == 0,
                            || json!({"w2": w2, "alpha": alpha, "beta": beta, "omega": omega}),
                        ),
                    ));
                }
                if c <= 0 {
                    checks.push((
                        2,
                        check(
                            omega.pair(beta) <= 0,
                            || json!({"w2": w2, "alpha": alpha, "beta": beta, "omega": omega}),
                        ),
                    ));
                }
            }
            let oa = datum.omega_alpha(*alpha);
            for &gamma in &positive {
                if oa.pair(gamma) <= 1 {
                    checks.push((
                        3,
                        check(
                            omega.pair(gamma) <= 1,
                            || json!({"w2": w2, "alpha": alpha, "gamma": gamma, "omega": omega}),
                        ),
                    ));
                }
            }
            let whole = w2.inverse().mul(&sa).mul(&w0);
            let right = d.mul(&whole);
            let ok = d.inverse().length() + right.length() == whole.length();
            checks.push((
                4,
                check(ok, || json!({"w2": w2, "alpha": alpha, "diamond": d})),
            ));
            Ok(checks)
        },
    );
    out.extend(r.into_iter().filter(|x| cfg.wants(&x.name)));

    if cfg.wants("length-additivity") {
        let weyl: Vec<ExtAffineElt> = datum
            .weyl_group()
            .into_iter()
            .map(ExtAffineElt::finite)
            .collect();
        let r = tally(cfg, &["length-additivity"], &dm.w2, |w| {
            let mut checks = Vec::new();
            for v in &weyl {
                let ok = v.mul(w).length() == v.length() + w.length();
                checks.push((0, check(ok, || json!({"w": w, "v": v}))));
            }
            let a = wh.mul(w).inverse();
            let b = w0.mul(w);
            let ok = a.mul(&b).length() == a.length() + b.length();
            checks.push((0, check(ok, || json!({"w": w, "kind": "w_h"}))));
            Ok(checks)
        });
        out.extend(r);
    }
}

// ---------------------------------------------------------------------------
// Uniqueness of 0-generic presentations

fn zero_generic_sweep(datum: &RootDatum, cfg: &SweepConfig, out: &mut Vec<SweepResult>) {
    if !cfg.wants("zero-generic-uniqueness") {
        return;
    }
    let drop_zr = cfg.mutation == Some(Mutation::DropZrHypothesis);
    let drop_c0 = cfg.mutation == Some(Mutation::DropC0Hypothesis);
    let eta = datum.eta();
    let mus = c0_weights(datum);
    let weyl = datum.weyl_group();
    let nus = offsets(datum.n(), datum.f(), cfg.radius);
    let r = tally(cfg, &["zero-generic-uniqueness"], &mus, |mu| {
        let mut checks = Vec::new();
        for s in &weyl {
            let r = DLPresentation::from_parts(s.clone(), mu.clone())?;
            for sigma in &weyl {
                for nu in &nus {
                    let t = datum.dl_transform(&r, sigma, nu);
                    let lambda = t.mu();
                    let c0 = datum.in_c0(&(lambda - &eta));
                    let diff = lambda - mu;
                    let zr = diff.rows().all(|row| row.iter().sum::<i64>() == 0);
                    if !(c0 || drop_c0) || !(zr || drop_zr) {
                        checks.push((0, Check::Skip));
                        continue;
                    }
                    let ok = lambda == mu && t.s() == s;
                    checks.push((
                        0,
                        check(
                            ok,
                            || json!({"s": s, "mu": mu, "w": t.s(), "lambda": lambda}),
                        ),
                    ));
                }
            }
        }
        Ok(checks)
    });
    out.extend(r);
}

// ---------------------------------------------------------------------------
// Weight sets

fn membership_sweeps(datum: &RootDatum, cfg: &SweepConfig, out: &mut Vec<SweepResult>) {
    let h = datum.h_eta();
    let shrink = cfg.mutation == Some(Mutation::DepthShrink);
    let taus = if shrink {
        params(datum, h - 1, Some(h - 1), cfg.samples)
    } else {
        params(datum, h, None, cfg.samples)
    };
    let tb = datum.tables();

    if cfg.wants("jh-paths-agree") || cfg.wants("decent-weight-genericity") {
        let mut sizes: BTreeMap<usize, usize> = BTreeMap::new();
        let r = tally(
            cfg,
            &["jh-paths-agree", "decent-weight-genericity"],
            &taus,
            |t| {
                let r = t.as_dl();
                let mut checks = Vec::new();
                if shrink {
                    let oracle = brute_jh_unchecked(datum, &r)?;
                    let fast = table_weights(datum, &r, &tb.jh_adm);
                    let ok = fast.as_ref().is_ok_and(|f| *f == oracle);
                    checks.push((0, check(ok, || json!({
                    "R": r, "oracle": oracle,
                    "fast": fast.as_ref().map(val).unwrap_or_else(|e| json!(e.to_string())),
                }))));
                    return Ok(checks);
                }
                let a = datum.jh_set(&r)?;
                let b = datum.jh_set_via_up(&r)?;
                let c = brute_jh(datum, &r)?;
                checks.push((
                    0,
                    check(
                        a == b && b == c,
                        || json!({"R": r, "adm": a, "up": b, "oracle": c}),
                    ),
                ));
                let gen = datum.dl_genericity(&r)?;
                for sigma in &a {
                    let m = sigma.depth(datum) - datum.d_sigma(sigma)?;
                    if m > 0 {
                        checks.push((
                            1,
                            check(
                                gen.is_some_and(|g| g >= m),
                                || json!({"R": r, "sigma": sigma, "m": m, "genericity": gen}),
                            ),
                        ));
                    }
                }
                Ok(checks)
            },
        );
        if !shrink {
            for t in &taus {
                if let Ok(a) = datum.jh_set(&t.as_dl()) {
                    *sizes.entry(a.len()).or_default() += 1;
                }
            }
        }
        for mut x in r {
            if x.name == "jh-paths-agree" {
                x.observed = json!({ "jh_sizes": sizes });
            }
            if cfg.wants(&x.name) {
                out.push(x);
            }
        }
    }

    if cfg.wants("wset-paths-agree") || cfg.wants("wset-cardinality") {
        let (n, f) = (datum.n() as u32, datum.f() as u32);
        let expected_wset = match n {
            2 => Some(2usize.pow(f)),
            3 => Some(9usize.pow(f)),
            _ => None,
        };
        let expected_wobv = (1..=n as usize).product::<usize>().pow(f);
        let r = tally(cfg, &["wset-paths-agree", "wset-cardinality"], &taus, |t| {
            let mut checks = Vec::new();
            if shrink {
                let r = t.as_dl();
                let oracle = brute_wset_unchecked(datum, t)?;
                let fast = table_weights(datum, &r, &tb.wset_char);
                let by_def = table_weights(datum, &r, &tb.jh_adm).and_then(|jh| {
                    let mut v = Vec::new();
                    for s in jh.iter().filter(|s| s.is_p_regular(datum)) {
                        v.push(datum.r_map(s)?);
                    }
                    Ok(sorted_dedup(v))
                });
                let ok = fast.as_ref().is_ok_and(|f| *f == oracle)
                    && by_def.as_ref().is_ok_and(|f| *f == oracle);
                checks.push((0, check(ok, || json!({
                    "tau": t, "oracle": oracle,
                    "characterization": fast.as_ref().map(val).unwrap_or_else(|e| json!(e.to_string())),
                    "definition": by_def.as_ref().map(val).unwrap_or_else(|e| json!(e.to_string())),
                }))));
                return Ok(checks);
            }
            let a = datum.wset(t)?;
            let b = datum.wset_by_definition(t)?;
            let c = brute_wset(datum, t)?;
            let d = datum.wobv(t)?;
            let e = brute_wobv(datum, t)?;
            let subset = d.iter().all(|x| a.binary_search(x).is_ok());
            checks.push((0, check(a == b && b == c && d == e && subset, || {
                json!({"tau": t, "characterization": a, "definition": b, "oracle": c, "wobv": d, "wobv_oracle": e})
            })));
            let ok = expected_wset.map_or(true, |k| c.len() == k) && e.len() == expected_wobv;
            checks.push((
                1,
                check(
                    ok,
                    || json!({"tau": t, "wset_size": c.len(), "wobv_size": e.len()}),
                ),
            ));
            Ok(checks)
        });
        for mut x in r {
            if x.name == "wset-cardinality" {
                let mut ws: BTreeMap<usize, usize> = BTreeMap::new();
                let mut wo: BTreeMap<usize, usize> = BTreeMap::new();
                for t in &taus {
                    if let (Ok(a), Ok(b)) = (brute_wset(datum, t), brute_wobv(datum, t)) {
                        *ws.entry(a.len()).or_default() += 1;
                        *wo.entry(b.len()).or_default() += 1;
                    }
                }
                x.observed = json!({ "taus": taus.len(), "wset_sizes": ws, "wobv_sizes": wo });
            }
            if cfg.wants(&x.name) {
                out.push(x);
            }
        }
    }
}

/// Pairs `(R, kappa)` with `kappa in JH(R)` deep enough to cover.
fn covering_pairs(datum: &RootDatum, rs: &[TameParam]) -> Vec<(DLPresentation, SerreWeight)> {
    let h = datum.h_eta();
    let mut out = Vec::new();
    for t in rs {
        let r = t.as_dl();
        if let Ok(jh) = datum.jh_set(&r) {
            for k in jh {
                if datum.d_sigma(&k).is_ok_and(|d| k.depth(datum) >= h + d) {
                    out.push((r.clone(), k));
                }
            }
        }
    }
    out
}

/// Up to `limit` parameters whose Jordan-Hölder sets contain a weight deep
/// enough to cover.
fn covering_params(datum: &RootDatum, limit: usize) -> Vec<TameParam> {
    let pool: Vec<TameParam> = params(datum, datum.h_eta(), None, 20 * limit)
        .into_iter()
        .filter(|t| !covering_pairs(datum, std::slice::from_ref(t)).is_empty())
        .collect();
    spread(pool, limit)
}

fn covering_sweeps(datum: &RootDatum, cfg: &SweepConfig, out: &mut Vec<SweepResult>) {
    let h = datum.h_eta();

    if cfg.wants("covers-vs-oracle") {
        let rs = covering_params(datum, (cfg.samples / 40).max(2));
        let pairs = covering_pairs(datum, &rs);
        let triples: Vec<(SerreWeight, SerreWeight)> = pairs
            .iter()
            .flat_map(|(r, k)| {
                datum
                    .jh_set(r)
                    .unwrap_or_default()
                    .into_iter()
                    .map(move |s| (k.clone(), s))
            })
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        out.extend(tally(cfg, &["covers-vs-oracle"], &triples, |(k, s)| {
            let fast = datum.covers(k, s)?;
            let slow = brute_covers(datum, k, s)?;
            Ok(vec![(
                0,
                check(
                    fast == slow,
                    || json!({"kappa": k, "sigma": s, "fast": fast, "oracle": slow}),
                ),
            )])
        }));
    }

    if cfg.wants("isolating") {
        let rs = params(datum, h, None, (cfg.samples / 4).max(4));
        out.extend(tally(cfg, &["isolating"], &rs, |t| {
            let r = t.as_dl();
            let jh = datum.jh_set(&r)?;
            let outer: Vec<SerreWeight> =
                sorted_dedup(datum.jh_outer(&r)?.into_iter().map(|(_, x)| x).collect());
            let mut checks = Vec::new();
            for k in &jh {
                if !datum.d_sigma(k).is_ok_and(|d| k.depth(datum) >= h + d) {
                    continue;
                }
                let covered = datum.covered_by(k)?;
                for s in &outer {
                    if covered.binary_search(s).is_ok() {
                        checks.push((0, check(k == s, || json!({"R": r, "kappa": k, "sigma": s}))));
                    }
                }
            }
            Ok(checks)
        }));
    }

    if cfg.wants("covering-characterization") {
        let rs = covering_params(datum, (cfg.samples / 20).max(3));
        let kappas: Vec<SerreWeight> = covering_pairs(datum, &rs)
            .into_iter()
            .map(|(_, k)| k)
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let w0 = datum.w0_elt();
        let restricted = datum.restricted_reps();
        let eta = datum.eta();
        out.extend(tally(cfg, &["covering-characterization"], &kappas, |k| {
            let mut lowers = Vec::new();
            for w in &restricted {
                let lower = brute_lower_interval(&w0.mul(w), ORACLE_MAX_LENGTH)?;
                let base = lower
                    .iter()
                    .find(|x| x.length() == 0)
                    .expect("minimum")
                    .clone();
                lowers.push((w, lower, base));
            }
            let mut checks = Vec::new();
            for s in datum.covered_by(k)? {
                for pres in datum.presentations_of(k) {
                    let lower_k = brute_lower_interval(&w0.mul(pres.w1()), ORACLE_MAX_LENGTH)?;
                    let mut found = None;
                    'search: for (w, lower, base) in &lowers {
                        for y in &lower_k {
                            if y.fin() != base.fin() {
                                continue;
                            }
                            let shift = y.trans() - base.trans();
                            let omega2 = pres.omega() + &shift;
                            if !datum.in_c0(&(&omega2 - &eta)) {
                                continue;
                            }
                            if datum.serre_weight_of(w, &omega2)? != s {
                                continue;
                            }
                            if lower.iter().all(|z| lower_k.contains(&z.translate(&shift))) {
                                found = Some(json!({"w": w, "omega": omega2}));
                                break 'search;
                            }
                        }
                    }
                    checks.push((
                        0,
                        check(
                            found.is_some(),
                            || json!({"kappa": k, "sigma": s, "presentation": pres}),
                        ),
                    ));
                }
            }
            Ok(checks)
        }));
    }
}

fn connecting_sweeps(datum: &RootDatum, cfg: &SweepConfig, out: &mut Vec<SweepResult>) {
    let h = datum.h_eta();

    if cfg.wants("obvious-weights-connected") {
        let dm = domains(datum, cfg, 0);
        let taus = params(datum, h, None, (cfg.samples / 20).max(3));
        let w0 = datum.w0_elt();
        let w0f = datum.w0();
        let jobs: Vec<(usize, usize)> = (0..taus.len())
            .flat_map(|i| (0..dm.triples.len()).map(move |k| (i, k)))
            .collect();
        let wsets: Vec<Result<(DLPresentation, Vec<SerreWeight>)>> = taus
            .iter()
            .map(|t| Ok((datum.tame_presentation(t, h)?, datum.wset(t)?)))
            .collect();
        let mut r = tally(cfg, &["obvious-weights-connected"], &jobs, |&(i, k)| {
            let (s, ws) = wsets[i].as_ref().map_err(|e| e.clone())?;
            let (w2, alpha, w1) = &dm.triples[k];
            let sa = reflection(datum, *alpha);
            let w = s.elt().mul(&w1.inverse()).mul(&w0).mul(&sa).mul(w2);
            if !deep(datum, w.trans(), h) {
                return Ok(vec![(0, Check::Skip)]);
            }
            let r = DLPresentation::new(w);
            let jh = datum.jh_set(&r)?;
            let fa = ExtAffineElt::finite(w0f.compose(w2.fin())).diamond();
            let fb = ExtAffineElt::finite(w0f.compose(sa.fin()).compose(w2.fin())).diamond();
            let a = datum.outer_weight(&r, &fa)?;
            let b = datum.outer_weight(&r, &fb)?;
            let inside =
                |x: &SerreWeight| ws.binary_search(x).is_ok() && jh.binary_search(x).is_ok();
            Ok(vec![(
                0,
                check(
                    inside(&a) && inside(&b),
                    || json!({"tau": s, "w2": w2, "alpha": alpha, "w1": w1, "R": r, "sigma": a, "sigma2": b}),
                ),
            )])
        });
        r[0].errors += dm.undecided;
        out.extend(r);
    }

    if cfg.wants("connecting-types-cover") || cfg.wants("connectivity") {
        let taus = params(datum, 2 * h, None, (cfg.samples / 30).max(2));
        let mut vertex_counts: BTreeMap<usize, usize> = BTreeMap::new();
        let r = tally(
            cfg,
            &["connecting-types-cover", "connectivity"],
            &taus,
            |t| {
                let ws = datum.wset(t)?;
                let edges = datum.connections(t)?;
                let mut checks = Vec::new();
                for e in &edges {
                    let ok = e.validate(datum).is_ok()
                        && ws.binary_search(&e.sigma).is_ok()
                        && ws.binary_search(&e.sigma2).is_ok();
                    checks.push((0, check(ok, || json!({"tau": t, "edge": e}))));
                }
                for v in &ws {
                    let ok = edges.iter().any(|e| &e.sigma == v || &e.sigma2 == v);
                    checks.push((0, check(ok, || json!({"tau": t, "isolated": v}))));
                }
                let g = datum.connectivity_graph(t)?;
                let ok = g.is_connected()
                    && g.all_reach_obvious()
                    && g.stray_edges == 0
                    && g.vertices == ws;
                checks.push((1, check(ok, || json!({"tau": t, "graph": g.to_json()}))));
                Ok(checks)
            },
        );
        for t in &taus {
            if let Ok(ws) = datum.wset(t) {
                *vertex_counts.entry(ws.len()).or_default() += 1;
            }
        }
        for mut x in r {
            if x.name == "connectivity" {
                x.observed = json!({ "taus": taus.len(), "vertex_counts": vertex_counts });
            }
            if cfg.wants(&x.name) {
                out.push(x);
            }
        }
    }
}

fn intersection_sweep(datum: &RootDatum, cfg: &SweepConfig, out: &mut Vec<SweepResult>) {
    if !cfg.wants("weight-intersection") {
        return;
    }
    let n = datum.n() as i64;
    let taus = params(datum, n, None, (cfg.samples / 20).max(3));
    let mut pairs: Vec<(TameParam, TameParam)> = Vec::new();
    for rho in &taus {
        for tau in &taus {
            pairs.push((rho.clone(), tau.clone()));
        }
    }
    // Admissible by construction: w~(rho) = w~(tau) t_{w(eta)}.
    let eta = datum.eta();
    for tau in &taus {
        for w in datum.weyl_group() {
            let rho = TameParam::new(tau.elt().mul(&ExtAffineElt::translation(w.apply(&eta))));
            if datum.tame_presentation(&rho, n - 1).is_ok() {
                pairs.push((rho, tau.clone()));
            }
        }
    }
    let mut r = tally(cfg, &["weight-intersection"], &pairs, |(rho, tau)| {
        let rep = datum.equivalence_report(rho, tau)?;
        Ok(vec![(
            0,
            check(
                rep.agree(),
                || json!({"rho": rho, "tau": tau, "report": rep}),
            ),
        )])
    });
    let admissible = pairs
        .par_iter()
        .filter(|(rho, tau)| datum.admissible_pair(rho, tau).unwrap_or(false))
        .count();
    r[0].observed = json!({ "pairs": pairs.len(), "admissible": admissible });
    out.extend(r);
}

fn elimination_sweep(datum: &RootDatum, cfg: &SweepConfig, out: &mut Vec<SweepResult>) {
    if !cfg.wants("elimination-totality") {
        return;
    }
    let (n, f, p) = (datum.n(), datum.f(), datum.p());
    let taus = params(datum, datum.h_eta(), None, (cfg.samples / 40).max(2));
    let rows = weight_rows(n, p);
    let lambdas: Vec<WeightVec> = products(&vec![rows; f], f)
        .into_iter()
        .map(|rs| WeightVec::from_rows(&rs).expect("shape"))
        .collect();
    let mut jobs: Vec<(TameParam, SerreWeight)> = Vec::new();
    for t in &taus {
        let Ok(ws) = datum.wset(t) else { continue };
        // Only twists that occur in W?(tau); the others differ by central
        // character and are excluded for trivial reasons.
        let twists: BTreeSet<Vec<i64>> = ws
            .iter()
            .map(|s| s.lambda().rows().map(|r| r[n - 1]).collect())
            .collect();
        for c in &twists {
            let shift = x0(n, c);
            for l in &lambdas {
                let Ok(s) = SerreWeight::new(datum, &(l + &shift)) else {
                    continue;
                };
                let deep_enough = datum.d_sigma(&s).is_ok_and(|d| s.depth(datum) >= d);
                if deep_enough && ws.binary_search(&s).is_err() {
                    jobs.push((t.clone(), s));
                }
            }
        }
    }
    jobs.sort_by(|a, b| (a.0.elt(), &a.1).cmp(&(b.0.elt(), &b.1)));
    jobs.dedup();
    out.extend(tally(cfg, &["elimination-totality"], &jobs, |(t, s)| {
        let cert = datum.eliminate(s, t);
        let ok = cert.as_ref().is_ok_and(|c| c.validate(datum).is_ok());
        Ok(vec![(0, check(ok, || {
            json!({"tau": t, "sigma": s, "result": cert.as_ref().map(|_| json!("invalid certificate")).unwrap_or_else(|e| json!(e.to_string()))})
        }))])
    }));
}

/// Runs every applicable sweep for the configuration. Failures are part of
/// the report; only an invalid datum is an error.
pub fn lemma_sweeps(cfg: &SweepConfig) -> Result<SweepReport> {
    let datum = RootDatum::new(cfg.n, cfg.f, cfg.p)?;
    let mut out = Vec::new();
    out.extend(order_sweep(&datum, cfg.order_length, cfg));
    factorization_sweeps(&datum, cfg, &mut out);
    zero_generic_sweep(&datum, cfg, &mut out);
    membership_sweeps(&datum, cfg, &mut out);
    covering_sweeps(&datum, cfg, &mut out);
    connecting_sweeps(&datum, cfg, &mut out);
    intersection_sweep(&datum, cfg, &mut out);
    elimination_sweep(&datum, cfg, &mut out);
    out.sort_by_key(|r| {
        SWEEP_NAMES
            .iter()
            .position(|n| *n == r.name)
            .unwrap_or(usize::MAX)
    });
    let all_passed = out.iter().all(SweepResult::ok);
    Ok(SweepReport {
        config: cfg.clone(),
        mutation: cfg.mutation,
        sweeps: out,
        all_passed,
    })
}
