//! Connecting types.
//!
//! For `s~ = w~(tau)` and a factorization
//! `w~^-1 s~ = w~_2^-1 s_alpha w_0 w~_1` with `w~_2 in W~_1`,
//! `w~_1 in W~^+`, `w~_1 up-arrow w~_h^-1 w~_2` and `w~(0) - eta` `h_eta`-deep,
//! the outer weights of `R(w~)` attached to `w_0 w_2` and `w_0 s_alpha w_2`
//! both lie in `W?(tau)`; `R(w~)` connects them.

use rayon::prelude::*;
use serde::Serialize;

use super::TameParam;
use crate::affine_weyl::{ExtAffineElt, TranslationBox};
use crate::error::{Error, Result};
use crate::root_data::{FiniteWeylElt, Root, RootDatum};
use crate::weights_dl::{DLPresentation, SerreWeight};

/// A connecting type together with its factorization data.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct ConnectionEdge {
    /// Outer weight attached to `w_0 w_2`.
    pub sigma: SerreWeight,
    /// Outer weight attached to `w_0 s_alpha w_2`.
    pub sigma2: SerreWeight,
    #[serde(rename = "R")]
    pub r: DLPresentation,
    pub alpha: Root,
    pub w1: ExtAffineElt,
    pub w2: ExtAffineElt,
    /// The presentation `s~` of the parameter.
    pub tau: DLPresentation,
}

fn fail(msg: impl Into<String>) -> Error {
    Error::Certificate(msg.into())
}

impl ConnectionEdge {
    /// Re-checks the factorization hypotheses and both outer weights.
    pub fn validate(&self, datum: &RootDatum) -> Result<()> {
        let eta = datum.eta();
        let h = datum.h_eta();
        let deep = |x: &crate::WeightVec| datum.in_c0(x) && datum.depth(x) >= h;
        if !deep(&(self.tau.mu() - &eta)) {
            return Err(fail("s~(0) - eta is not h_eta-deep"));
        }
        if !deep(&(self.r.mu() - &eta)) {
            return Err(fail("w~(0) - eta is not h_eta-deep"));
        }
        if !self.alpha.is_simple() || datum.check_root(self.alpha).is_err() {
            return Err(fail("alpha is not a simple root"));
        }
        if !self.w2.is_restricted_elt() {
            return Err(fail("w~_2 is not restricted"));
        }
        if !self.w1.is_dominant_elt() {
            return Err(fail("w~_1 is not dominant"));
        }
        let target = datum.w_h().inverse().mul(&self.w2);
        let bx = TranslationBox::covering(&self.w1, &target);
        if !self.w1.up_leq(&target, bx)? {
            return Err(fail("w~_1 is not up-arrow below w~_h^-1 w~_2"));
        }
        let s_alpha = reflection(datum, self.alpha);
        let rhs = self
            .w2
            .inverse()
            .mul(&s_alpha)
            .mul(&datum.w0_elt())
            .mul(&self.w1);
        if self.r.elt().inverse().mul(self.tau.elt()) != rhs {
            return Err(fail("factorization does not hold"));
        }
        let (a, b) = designated_outer(datum, &self.r, &self.w2, self.alpha)?;
        if a != self.sigma || b != self.sigma2 {
            return Err(fail("stored weights are not the designated outer weights"));
        }
        Ok(())
    }
}

fn reflection(datum: &RootDatum, alpha: Root) -> ExtAffineElt {
    ExtAffineElt::finite(FiniteWeylElt::reflection(datum.n(), datum.f(), alpha))
}

/// The outer weights of `R(w~)` attached to `w_0 w_2` and `w_0 s_alpha w_2`.
fn designated_outer(
    datum: &RootDatum,
    r: &DLPresentation,
    w2: &ExtAffineElt,
    alpha: Root,
) -> Result<(SerreWeight, SerreWeight)> {
    let wh_inv = datum.w_h().inverse();
    let a = datum.outer_weight(r, &wh_inv.mul(w2))?;
    let moved = reflection(datum, alpha).mul(w2).diamond();
    let b = datum.outer_weight(r, &wh_inv.mul(&moved))?;
    Ok((a, b))
}

impl RootDatum {
    /// `{w~_1 in W~^+ : w~_1 up-arrow x}` for restricted `x`, from the
    /// per-embedding tables.
    pub(crate) fn up_below_restricted(&self, x: &ExtAffineElt) -> Vec<ExtAffineElt> {
        let tb = self.tables();
        let mut out: Vec<Vec<ExtAffineElt>> = vec![Vec::new()];
        for j in 0..self.f() {
            let comp = x.component(j);
            let canon = comp.diamond();
            let c = comp.trans() - canon.trans();
            let k = tb.restricted_index(canon.fin());
            let mut next = Vec::new();
            for prefix in &out {
                for u in &tb.up_below[k] {
                    let mut v = prefix.clone();
                    v.push(u.translate(&c));
                    next.push(v);
                }
            }
            out = next;
        }
        out.into_iter()
            .map(|parts| ExtAffineElt::from_components(&parts).expect("components"))
            .collect()
    }

    /// Every connecting type of `tau` found by enumerating the `h_eta`-deep
    /// presentations `s~`, simple roots `alpha`, canonical `w~_2 in W~_1`
    /// and `w~_1 up-arrow w~_h^-1 w~_2`. Sorted and deduplicated.
    pub fn connections(&self, tau: &TameParam) -> Result<Vec<ConnectionEdge>> {
        let h = self.h_eta();
        let eta = self.eta();
        let t = self.tame_presentation(tau, h)?;
        let mut reps: Vec<DLPresentation> = self
            .lowest_alcove_reps(&t)?
            .into_iter()
            .filter(|x| self.depth(&(x.mu() - &eta)) >= h)
            .collect();
        if !reps.contains(&t) {
            reps.push(t);
        }
        let alphas: Vec<Root> = self.simple_roots().collect();
        let w2s = self.restricted_reps();
        let mut jobs: Vec<(&DLPresentation, Root, &ExtAffineElt)> = Vec::new();
        for s in &reps {
            for &a in &alphas {
                jobs.extend(w2s.iter().map(|w2| (s, a, w2)));
            }
        }
        let w0 = self.w0_elt();
        let wh_inv = self.w_h().inverse();
        let found: Vec<Result<Vec<ConnectionEdge>>> = jobs
            .par_iter()
            .map(|&(s, alpha, w2)| {
                let mut out = Vec::new();
                let tail = w0.mul(&reflection(self, alpha)).mul(w2);
                for w1 in self.up_below_restricted(&wh_inv.mul(w2)) {
                    let w = s.elt().mul(&w1.inverse()).mul(&tail);
                    let shifted = w.trans() - &eta;
                    if !self.in_c0(&shifted) || self.depth(&shifted) < h {
                        continue;
                    }
                    let r = DLPresentation::new(w);
                    let (sigma, sigma2) = designated_outer(self, &r, w2, alpha)?;
                    if sigma == sigma2 {
                        continue;
                    }
                    out.push(ConnectionEdge {
                        sigma,
                        sigma2,
                        r,
                        alpha,
                        w1,
                        w2: w2.clone(),
                        tau: s.clone(),
                    });
                }
                Ok(out)
            })
            .collect();
        let mut edges = Vec::new();
        for part in found {
            edges.extend(part?);
        }
        edges.sort();
        edges.dedup();
        Ok(edges)
    }

    /// A connecting type tying `sigma` and `sigma2` inside `W?(tau)`, if the
    /// search space contains one. The orientation `(sigma, sigma2)` is
    /// preferred; the reverse is returned otherwise.
    pub fn connect(
        &self,
        sigma: &SerreWeight,
        sigma2: &SerreWeight,
        tau: &TameParam,
    ) -> Result<Option<ConnectionEdge>> {
        let w = self.wset(tau)?;
        for x in [sigma, sigma2] {
            if w.binary_search(x).is_err() {
                return Err(Error::Precondition(format!("{x} is not in W?({tau})")));
            }
        }
        if sigma == sigma2 {
            return Ok(None);
        }
        let edges = self.connections(tau)?;
        let forward = edges
            .iter()
            .find(|e| &e.sigma == sigma && &e.sigma2 == sigma2);
        let backward = || {
            edges
                .iter()
                .find(|e| &e.sigma == sigma2 && &e.sigma2 == sigma)
        };
        Ok(forward.or_else(backward).cloned())
    }
}
