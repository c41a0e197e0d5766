//! Per-`n` tables for a single embedding.
//!
//! Everything about `Res GL_n` factors over embeddings: `W~`, its Bruhat and
//! up-arrow orders, `Adm(eta)` and the restricted alcoves are products. The
//! tables below are `p`-independent and built once per `n`.

use std::collections::{HashMap, HashSet};
use std::sync::{Arc, Mutex, OnceLock};

use super::elt::ExtAffineElt;
use super::order::{dominant_points_below, up_chain_points, DEFAULT_INTERVAL_BUDGET};
use crate::root_data::{FiniteWeylElt, WeightVec};

/// `(index into restricted, offset)`: a presentation `(w~, mu + offset)`.
pub(crate) type Pick = (usize, WeightVec);

pub struct SingleTables {
    /// Index of each element of `S_n` in lexicographic order.
    pub(crate) weyl_index: HashMap<FiniteWeylElt, usize>,
    /// Canonical `W~_1` representatives, indexed like `weyl_index`.
    pub(crate) restricted: Vec<ExtAffineElt>,
    /// `{u in W~^+ : u up-arrow restricted[i]}` by chain search.
    pub(crate) up_below: Vec<Vec<ExtAffineElt>>,
    pub(crate) adm: Vec<ExtAffineElt>,
    pub(crate) adm_set: HashSet<ExtAffineElt>,
    /// Indexed by `s`: JH presentations via the `Adm(eta)` inclusion.
    pub(crate) jh_adm: Vec<Vec<Pick>>,
    /// Indexed by `s`: JH presentations via up-arrow and `t_omega in t_mu s u^-1 W`.
    pub(crate) jh_up: Vec<Vec<Pick>>,
    /// Indexed by `s`: `W?` presentations via `t_mu s in t_omega W~_{<= w_0 w~}`.
    pub(crate) wset_char: Vec<Vec<Pick>>,
    /// Indexed by `s`: extremal presentations, `t_mu s in t_omega W w~`.
    pub(crate) wobv: Vec<Vec<Pick>>,
    /// Indexed by `s`, then by `w`: outer factor `(w^diamond, s (w~_h w^diamond)^-1 (0))`.
    pub(crate) outer: Vec<Vec<Pick>>,
}

static CACHE: OnceLock<Mutex<HashMap<usize, Arc<SingleTables>>>> = OnceLock::new();

/// Shared tables for `GL_n` over a single embedding.
pub fn single_tables(n: usize) -> Arc<SingleTables> {
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().expect("table cache").get(&n) {
        return t.clone();
    }
    // Built outside the lock; a racing duplicate build is harmless.
    let built = Arc::new(SingleTables::build(n));
    cache
        .lock()
        .expect("table cache")
        .entry(n)
        .or_insert(built)
        .clone()
}

fn eta1(n: usize) -> WeightVec {
    WeightVec::from_rows(&[(0..n as i64).rev().collect::<Vec<_>>()]).expect("eta")
}

impl SingleTables {
    fn build(n: usize) -> Self {
        let weyl = FiniteWeylElt::all(n, 1);
        let weyl_index: HashMap<FiniteWeylElt, usize> = weyl
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, w)| (w, i))
            .collect();
        let restricted: Vec<ExtAffineElt> = weyl
            .iter()
            .map(|w| ExtAffineElt::finite(w.clone()).diamond())
            .collect();
        let restricted_index: HashMap<FiniteWeylElt, usize> = restricted
            .iter()
            .enumerate()
            .map(|(i, r)| (r.fin().clone(), i))
            .collect();
        let w0 = ExtAffineElt::finite(FiniteWeylElt::longest(n, 1));
        let eta = eta1(n);
        let w_h = w0.mul(&ExtAffineElt::translation(-&eta));

        let lower_w0w: Vec<Vec<ExtAffineElt>> = restricted
            .iter()
            .map(|r| {
                w0.mul(r)
                    .bruhat_interval(DEFAULT_INTERVAL_BUDGET)
                    .expect("restricted intervals are small")
            })
            .collect();
        let lower_w0w_set: Vec<HashSet<ExtAffineElt>> = lower_w0w
            .iter()
            .map(|v| v.iter().cloned().collect())
            .collect();

        let up_below: Vec<Vec<ExtAffineElt>> = restricted
            .iter()
            .map(|r| {
                let target = r.scaled_point();
                let mut v: Vec<ExtAffineElt> = dominant_points_below(&target, n)
                    .into_iter()
                    .filter(|x| up_chain_points(x.clone(), &target, n, None).expect("unbounded"))
                    .map(|x| ExtAffineElt::from_scaled_point(n, &x))
                    .collect();
                v.sort();
                v
            })
            .collect();

        let mut adm_set: HashSet<ExtAffineElt> = HashSet::new();
        for w in &weyl {
            let t = ExtAffineElt::translation(w.apply(&eta));
            adm_set.extend(
                t.bruhat_interval(DEFAULT_INTERVAL_BUDGET)
                    .expect("Adm(eta) intervals are small"),
            );
        }
        let mut adm: Vec<ExtAffineElt> = adm_set.iter().cloned().collect();
        adm.sort_by_key(|e| (e.length(), e.clone()));

        let ns = weyl.len();
        let mut jh_adm = vec![Vec::new(); ns];
        for (i, r) in restricted.iter().enumerate() {
            let w0w_inv = w0.mul(r).inverse();
            for a in &adm {
                let x = a.mul(&w0w_inv);
                if lower_w0w[i].iter().all(|v| adm_set.contains(&x.mul(v))) {
                    let s = x.fin().inverse();
                    let offset = s.apply(x.trans());
                    jh_adm[weyl_index[&s]].push((i, offset));
                }
            }
        }

        let mut jh_up = vec![Vec::new(); ns];
        for (i, r) in restricted.iter().enumerate() {
            let target = w_h.mul(r);
            let canon = target.diamond();
            let c = target.trans() - canon.trans();
            let k = restricted_index[canon.fin()];
            for u in &up_below[k] {
                let u = u.translate(&c);
                let back = u.inverse().act(&WeightVec::zero(n, 1));
                for (si, s) in weyl.iter().enumerate() {
                    jh_up[si].push((i, s.apply(&back)));
                }
            }
        }

        let mut wset_char = vec![Vec::new(); ns];
        let mut wobv = vec![Vec::new(); ns];
        for (i, r) in restricted.iter().enumerate() {
            for y in &lower_w0w[i] {
                wset_char[weyl_index[y.fin()]].push((i, -y.trans()));
            }
            for v in &weyl {
                let y = ExtAffineElt::finite(v.clone()).mul(r);
                if lower_w0w_set[i].contains(&y) {
                    wobv[weyl_index[y.fin()]].push((i, -y.trans()));
                }
            }
        }

        let mut outer = vec![Vec::new(); ns];
        for (si, s) in weyl.iter().enumerate() {
            for w in &weyl {
                let i = restricted_index[w];
                let back = w_h
                    .mul(&restricted[i])
                    .inverse()
                    .act(&WeightVec::zero(n, 1));
                outer[si].push((i, s.apply(&back)));
            }
        }

        for list in jh_adm
            .iter_mut()
            .chain(jh_up.iter_mut())
            .chain(wset_char.iter_mut())
            .chain(wobv.iter_mut())
        {
            list.sort();
            list.dedup();
        }

        SingleTables {
            weyl_index,
            restricted,
            up_below,
            adm,
            adm_set,
            jh_adm,
            jh_up,
            wset_char,
            wobv,
            outer,
        }
    }

    pub(crate) fn restricted_index(&self, w: &FiniteWeylElt) -> usize {
        // restricted[i] has finite part weyl[i] because diamond keeps w.
        self.weyl_index[w]
    }
}
