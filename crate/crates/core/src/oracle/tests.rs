use super::*;
use crate::affine_weyl::{omega_element, ExtAffineElt};
use crate::herzig::TameParam;
use crate::root_data::{FiniteWeylElt, RootDatum, WeightVec};
use crate::weights_dl::DLPresentation;

fn w(rows: &[&[i64]]) -> WeightVec {
    WeightVec::from_rows(rows).unwrap()
}

fn perm(rows: &[&[usize]]) -> FiniteWeylElt {
    FiniteWeylElt::from_rows(rows).unwrap()
}

fn failures(report: &SweepReport) -> Vec<String> {
    report
        .sweeps
        .iter()
        .filter(|s| !s.ok())
        .map(|s| serde_json::to_string(s).unwrap())
        .collect()
}

#[test]
fn brute_bruhat_examples() {
    let u = omega_element(2, 1, &[1]);
    let t10 = ExtAffineElt::translation(w(&[&[1, 0]]));
    let t01 = ExtAffineElt::translation(w(&[&[0, 1]]));
    assert!(brute_bruhat(&u, &t10, 6).unwrap());
    assert!(brute_bruhat(&t10, &t10, 6).unwrap());
    assert!(!brute_bruhat(&t10, &t01, 6).unwrap());
    assert!(!brute_bruhat(&t01, &t10, 6).unwrap());
    // Different Omega components are never comparable.
    let e = ExtAffineElt::identity(2, 1);
    assert!(!brute_bruhat(&e, &t10, 6).unwrap());
}

#[test]
fn brute_bruhat_budget() {
    let far = ExtAffineElt::translation(w(&[&[9, 0, -9]]));
    let e = ExtAffineElt::identity(3, 1);
    assert!(matches!(
        brute_bruhat(&e, &far, 6),
        Err(crate::Error::Budget { .. })
    ));
}

#[test]
fn reduced_words_replay() {
    let x = ExtAffineElt::new(w(&[&[2, 0, -1]]), perm(&[&[2, 3, 1]])).unwrap();
    let (words, delta) = brute_reduced_words(&x, 10).unwrap();
    assert!(words.len() > 1);
    for word in &words {
        assert_eq!(word.len(), x.length());
        let prod = word
            .iter()
            .fold(ExtAffineElt::identity(3, 1), |acc, s| acc.mul(s));
        assert_eq!(prod.mul(&delta), x);
    }
}

#[test]
fn brute_up_examples() {
    let e = ExtAffineElt::identity(2, 1);
    assert!(brute_up(&e, &e, 2).unwrap());
    // Raising the base alcove across the wall <x, alpha> = 1.
    let s = ExtAffineElt::finite(FiniteWeylElt::longest(2, 1));
    let up = ExtAffineElt::translation(w(&[&[1, -1]])).mul(&s);
    assert!(brute_up(&e, &up, 4).unwrap());
    assert!(!brute_up(&up, &e, 4).unwrap());
}

#[test]
fn brute_up_agrees_with_bruhat_on_dominant_pairs() {
    let d = RootDatum::new(3, 1, 37).unwrap();
    let dom: Vec<ExtAffineElt> = d
        .restricted_reps()
        .into_iter()
        .map(|x| d.w_h().inverse().mul(&x))
        .collect();
    for u in &dom {
        for v in &dom {
            assert_eq!(brute_up(u, v, 8).unwrap(), u.bruhat_leq(v), "{u} {v}");
        }
    }
}

#[test]
fn brute_adm_size() {
    assert_eq!(
        brute_adm_eta(&RootDatum::new(2, 1, 7).unwrap())
            .unwrap()
            .len(),
        3
    );
    assert_eq!(
        brute_adm_eta(&RootDatum::new(3, 1, 7).unwrap())
            .unwrap()
            .len(),
        25
    );
    assert_eq!(
        brute_adm_eta(&RootDatum::new(2, 2, 7).unwrap())
            .unwrap()
            .len(),
        9
    );
}

#[test]
fn brute_jh_matches_optimized() {
    let d = RootDatum::new(3, 1, 37).unwrap();
    let r = DLPresentation::from_parts(perm(&[&[2, 3, 1]]), w(&[&[20, 10, 0]])).unwrap();
    let jh = brute_jh(&d, &r).unwrap();
    assert_eq!(jh.len(), 9);
    assert_eq!(jh, d.jh_set(&r).unwrap());
    let t = TameParam::new(r.elt().clone());
    assert_eq!(brute_wset(&d, &t).unwrap(), d.wset(&t).unwrap());
    assert_eq!(brute_wobv(&d, &t).unwrap().len(), 6);
}

#[test]
fn brute_jh_refuses_shallow() {
    let d = RootDatum::new(2, 1, 7).unwrap();
    let r = DLPresentation::from_parts(FiniteWeylElt::identity(2, 1), w(&[&[1, 0]])).unwrap();
    assert!(matches!(brute_jh(&d, &r), Err(crate::Error::Depth { .. })));
}

#[test]
fn mutation_names_round_trip() {
    for m in Mutation::ALL {
        assert_eq!(m.name().parse::<Mutation>().unwrap(), m);
        assert_eq!(
            serde_json::to_value(m).unwrap(),
            serde_json::json!(m.name())
        );
    }
    assert!("drop-everything".parse::<Mutation>().is_err());
}

#[test]
fn sweeps_pass_gl2() {
    let report = lemma_sweeps(&SweepConfig::desk(2, 1, 7)).unwrap();
    assert!(report.all_passed, "{:#?}", failures(&report));
    for name in SWEEP_NAMES {
        let s = report
            .sweep(name)
            .unwrap_or_else(|| panic!("missing {name}"));
        // With one simple root there is no second root to pair against.
        let vacuous = ["omega-orthogonal", "omega-nonpositive"].contains(name);
        assert!(vacuous || s.checked > 0, "{name} checked nothing");
    }
}

#[test]
fn sweeps_pass_two_embeddings() {
    let mut cfg = SweepConfig::desk(2, 2, 7);
    cfg.radius = 2;
    let report = lemma_sweeps(&cfg).unwrap();
    assert!(report.all_passed, "{:#?}", failures(&report));
}

#[test]
fn sweeps_pass_gl3() {
    let mut cfg = SweepConfig::desk(3, 1, 37);
    cfg.order_length = 5;
    cfg.samples = 40;
    let report = lemma_sweeps(&cfg).unwrap();
    assert!(report.all_passed, "{:#?}", failures(&report));
}

#[test]
fn every_mutation_has_teeth() {
    for (n, p) in [(2, 7), (3, 37)] {
        for m in Mutation::ALL {
            let mut cfg = SweepConfig::desk(n, 1, p).with_mutation(m);
            cfg.samples = 24;
            let report = lemma_sweeps(&cfg).unwrap();
            assert!(!report.all_passed, "n = {n}, {m}");
            assert!(
                report.counterexamples() > 0,
                "n = {n}, {m}: {:#?}",
                report.sweeps
            );
            for s in &report.sweeps {
                assert!(m.affected().contains(&s.name.as_str()));
            }
        }
    }
}

#[test]
fn report_is_deterministic() {
    let cfg = SweepConfig::desk(2, 1, 7).only(&["zero-generic-uniqueness", "wset-paths-agree"]);
    let a = serde_json::to_string(&lemma_sweeps(&cfg).unwrap()).unwrap();
    let b = serde_json::to_string(&lemma_sweeps(&cfg).unwrap()).unwrap();
    assert_eq!(a, b);
}
