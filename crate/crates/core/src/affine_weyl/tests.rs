use super::*;
use crate::root_data::{FiniteWeylElt, RootDatum, WeightVec};

fn w(rows: &[&[i64]]) -> WeightVec {
    WeightVec::from_rows(rows).unwrap()
}

fn t(rows: &[&[i64]]) -> ExtAffineElt {
    ExtAffineElt::translation(w(rows))
}

fn perm(rows: &[&[usize]]) -> FiniteWeylElt {
    FiniteWeylElt::from_rows(rows).unwrap()
}

fn elt(tr: &[&[i64]], p: &[&[usize]]) -> ExtAffineElt {
    ExtAffineElt::new(w(tr), perm(p)).unwrap()
}

#[test]
fn length_examples_gl2() {
    let id = ExtAffineElt::identity(2, 1);
    assert_eq!(id.length(), 0);
    let u = elt(&[&[1, 0]], &[&[2, 1]]);
    assert_eq!(u.length(), 0);
    assert_eq!(t(&[&[1, 0]]).length(), 1);
    assert_eq!(ExtAffineElt::finite(perm(&[&[2, 1]])).length(), 1);
    assert_eq!(u, omega_generator(2, 1, 0));
}

#[test]
fn omega_generator_powers() {
    for n in 2..=5 {
        let u = omega_generator(n, 1, 0);
        assert_eq!(u.length(), 0);
        let mut acc = ExtAffineElt::identity(n, 1);
        for m in 1..=n as i64 {
            acc = acc.mul(&u);
            assert_eq!(acc, omega_element(n, 1, &[m]));
        }
        assert_eq!(acc, ExtAffineElt::translation(w(&[&vec![1; n]])));
        assert_eq!(omega_element(n, 1, &[-1]), u.inverse());
    }
}

#[test]
fn translation_one_zero_word() {
    let x = t(&[&[1, 0]]);
    let word = x.reduced_word();
    assert_eq!(word.labels(), vec!["s0@0", "omega^1@0"]);
    assert_eq!(word.replay(), x);
    let g = x.minimal_gallery();
    assert_eq!(g.len(), 1);
    assert!(g.is_minimal());
}

#[test]
fn identity_gallery_is_empty() {
    assert!(ExtAffineElt::identity(3, 2).minimal_gallery().is_empty());
}

#[test]
fn bruhat_examples_gl2() {
    let u = omega_generator(2, 1, 0);
    let t10 = t(&[&[1, 0]]);
    let t01 = t(&[&[0, 1]]);
    assert!(u.bruhat_leq(&t10));
    assert!(!t10.bruhat_leq(&t01));
    assert!(!t01.bruhat_leq(&t10));
    assert!(t10.bruhat_leq(&t10));
    assert!(!ExtAffineElt::identity(2, 1).bruhat_leq(&t10));
}

#[test]
fn interval_examples() {
    let t10 = t(&[&[1, 0]]);
    let iv = t10.bruhat_interval(DEFAULT_INTERVAL_BUDGET).unwrap();
    assert_eq!(iv, vec![omega_generator(2, 1, 0), t10.clone()]);
    let u = omega_generator(3, 1, 0);
    assert_eq!(u.bruhat_interval(4).unwrap(), vec![u.clone()]);
    let big = t(&[&[6, 0, -6]]);
    assert!(matches!(
        big.bruhat_interval(4),
        Err(crate::Error::Budget { .. })
    ));
}

#[test]
fn adm_eta_gl2() {
    let d = RootDatum::new(2, 1, 5).unwrap();
    let adm = d.adm_set(&d.eta(), DEFAULT_INTERVAL_BUDGET).unwrap();
    let mut expect = vec![t(&[&[1, 0]]), t(&[&[0, 1]]), omega_generator(2, 1, 0)];
    expect.sort_by_key(|e| (e.length(), e.clone()));
    assert_eq!(adm, expect);
    assert!(!d.adm_eta_contains(&ExtAffineElt::identity(2, 1)));
    for e in &adm {
        assert!(d.adm_eta_contains(e));
    }
}

#[test]
fn adm_eta_sizes() {
    for (n, size) in [(2, 3), (3, 25)] {
        let d = RootDatum::new(n, 1, 7).unwrap();
        assert_eq!(d.tables().adm.len(), size, "n = {n}");
    }
}

#[test]
fn restricted_and_dominant_membership() {
    let d = RootDatum::new(3, 1, 7).unwrap();
    assert!(ExtAffineElt::identity(3, 1).is_restricted_elt());
    assert!(d.w_h().is_restricted_elt());
    let u = omega_generator(2, 1, 0);
    assert!(u.is_restricted_elt() && u.is_in_omega());
    assert!(t(&[&[1, 0]]).is_dominant_elt());
    assert!(!t(&[&[1, 0]]).is_restricted_elt());
    assert!(!t(&[&[0, 1]]).is_dominant_elt());
}

#[test]
fn diamond_examples() {
    let s = ExtAffineElt::finite(perm(&[&[2, 1]]));
    assert_eq!(s.diamond(), omega_generator(2, 1, 0));
    let d = RootDatum::new(3, 2, 7).unwrap();
    for r in d.restricted_reps() {
        assert!(r.is_restricted_elt());
        assert_eq!(r.diamond(), r);
        let shifted = r.translate(&w(&[&[3, -1, 2], &[0, 4, 4]]));
        assert_eq!(shifted.diamond(), r);
    }
    assert_eq!(d.restricted_reps().len(), 36);
}

#[test]
fn omega_decompose_invariants() {
    let x = elt(&[&[3, -1, 0], &[2, 2, -5]], &[&[2, 3, 1], &[3, 1, 2]]);
    let dec = x.omega_decompose();
    assert_eq!(dec.delta.length(), 0);
    assert_eq!(dec.wa.mul(&dec.delta), x);
    assert!(dec.wa.omega_exponents().iter().all(|&m| m == 0));
}

#[test]
fn p_dot_examples() {
    let d = RootDatum::new(2, 1, 7).unwrap();
    let u = omega_generator(2, 1, 0);
    assert_eq!(d.p_dot(&u, &w(&[&[2, 1]])), w(&[&[7, 3]]));
    let lam = w(&[&[4, -2]]);
    assert_eq!(d.p_dot(&ExtAffineElt::identity(2, 1), &lam), lam);
}

#[test]
fn up_examples() {
    let s0 = Generator {
        embedding: 0,
        index: 0,
    }
    .element(2, 1);
    let id = ExtAffineElt::identity(2, 1);
    let bx = TranslationBox::new(4);
    assert!(id.up_leq(&s0, bx).unwrap());
    assert!(id.up_leq_chain(&s0, bx).unwrap());
    assert!(id.up_leq(&id, bx).unwrap());
    assert!(!s0.up_leq(&id, bx).unwrap());
}

#[test]
fn up_box_too_small_is_inconclusive() {
    let a = ExtAffineElt::finite(perm(&[&[3, 2, 1]]));
    let b = t(&[&[3, 0, -3]]);
    let err = a.up_leq_chain(&b, TranslationBox::new(1)).unwrap_err();
    assert!(matches!(err, crate::Error::Inconclusive(_)));
    let cover = TranslationBox::covering(&a, &b);
    assert!(a.up_leq_chain(&b, cover).is_ok());
}

#[test]
fn alcove_element_locates() {
    let d = RootDatum::new(3, 1, 7).unwrap();
    for y in [w(&[&[20, 9, 1]]), w(&[&[-3, 5, 13]]), w(&[&[0, 13, 8]])] {
        let a = d.alcove_element(&y).unwrap();
        let shifted = &y - &a.trans().scale(7);
        let back = a.fin().inverse().apply(&shifted);
        // y = p t + w(z) with z / p in A_0.
        assert!(d.positive_roots().iter().all(|&b| {
            let v = back.pair(b);
            0 < v && v < 7
        }));
    }
    assert!(d.alcove_element(&w(&[&[7, 0, 3]])).is_err());
}

#[test]
fn json_shape() {
    let x = elt(&[&[1, 0]], &[&[2, 1]]);
    let s = serde_json::to_string(&x).unwrap();
    assert_eq!(s, r#"{"trans":[[1,0]],"perm":[[2,1]]}"#);
    let back: ExtAffineElt = serde_json::from_str(&s).unwrap();
    assert_eq!(back, x);
}

#[test]
fn single_table_jh_sizes() {
    for (n, size) in [(2, 2), (3, 9)] {
        let tb = single_tables(n);
        for s in 0..tb.jh_adm.len() {
            assert_eq!(tb.jh_adm[s].len(), size, "n = {n}, s = {s}");
            assert_eq!(tb.jh_adm[s], tb.jh_up[s], "n = {n}, s = {s}");
            for pick in &tb.wobv[s] {
                assert!(tb.wset_char[s].contains(pick));
            }
        }
    }
}
