//! The presentation orbit of `R(t_mu s)`.
//!
//! `R_s(mu) = R_w(lambda)` exactly when `w = sigma s pi(sigma)^-1` and
//! `lambda = sigma(mu) + (p - w pi) nu` for some `sigma in W`,
//! `nu in X*(T)`. For fixed `sigma` the map `p - w pi` is injective, so the
//! candidate `nu` is unique and is found cycle by cycle on the coordinate
//! permutation induced by `w pi`.

use std::collections::BTreeSet;

use super::DLPresentation;
use crate::error::{Error, Result};
use crate::root_data::{FiniteWeylElt, RootDatum, WeightVec};

/// Cap on the number of `(sigma, nu)` candidates scanned for lowest alcove
/// re-presentations.
const ORBIT_BUDGET: usize = 20_000_000;

/// Largest `h_nu` that can carry `R(t_mu s)` into a lowest alcove
/// presentation: `(p - 1) h_nu <= h(mu') + h(mu) <= p - 1 + h_mu`.
pub(crate) fn lowest_alcove_bound(p: i64, h_mu: i64) -> i64 {
    (p - 1 + h_mu) / (p - 1)
}

impl RootDatum {
    /// The presentation `phi(g) t_mu s pi(g)^-1` for `g = t_nu sigma`.
    pub fn dl_transform(
        &self,
        r: &DLPresentation,
        sigma: &FiniteWeylElt,
        nu: &WeightVec,
    ) -> DLPresentation {
        let w = sigma.compose(r.s()).compose(&sigma.frobenius().inverse());
        let lambda = &(&sigma.apply(r.mu()) + &nu.scale(self.p())) - &w.apply(&nu.frobenius());
        DLPresentation::from_parts(w, lambda).expect("shapes agree")
    }

    /// Whether two presentations name the same Deligne-Lusztig representation.
    pub fn dl_equal(&self, r1: &DLPresentation, r2: &DLPresentation) -> Result<bool> {
        self.check_weight(r1.mu())?;
        self.check_weight(r2.mu())?;
        if r1 == r2 {
            return Ok(true);
        }
        for sigma in self.weyl_group() {
            if self.dl_witness(r1, r2, &sigma)?.is_some() {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// The `nu` relating `r1` to `r2` through `sigma`, if any.
    pub fn dl_witness(
        &self,
        r1: &DLPresentation,
        r2: &DLPresentation,
        sigma: &FiniteWeylElt,
    ) -> Result<Option<WeightVec>> {
        let w = r2.s();
        if &sigma.compose(r1.s()).compose(&sigma.frobenius().inverse()) != w {
            return Ok(None);
        }
        let b = r2.mu() - &sigma.apply(r1.mu());
        self.solve_p_minus_w_pi(w, &b)
    }

    /// Solves `(p - w pi) nu = b` over the integers.
    pub(crate) fn solve_p_minus_w_pi(
        &self,
        w: &FiniteWeylElt,
        b: &WeightVec,
    ) -> Result<Option<WeightVec>> {
        let (n, f) = (self.n(), self.f());
        let len = n * f;
        // A = w pi permutes coordinates: A e_k = e_{a[k]}.
        let mut a = vec![0usize; len];
        for (k, slot) in a.iter_mut().enumerate() {
            let mut e = vec![vec![0i64; n]; f];
            e[k / n][k % n] = 1;
            let img = w.apply(&WeightVec::from_rows(&e).expect("shape").frobenius());
            *slot = (0..len)
                .find(|&m| img.get(m / n, m % n) == 1)
                .expect("permutation");
        }
        let mut prev = vec![0usize; len];
        for (k, &m) in a.iter().enumerate() {
            prev[m] = k;
        }
        let bv: Vec<i64> = (0..len).map(|m| b.get(m / n, m % n)).collect();
        let p = self.p() as i128;
        let mut nu = vec![0i64; len];
        let mut seen = vec![false; len];
        for start in 0..len {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut cur = a[start];
            while cur != start {
                seen[cur] = true;
                cycle.push(cur);
                cur = a[cur];
            }
            let l = cycle.len() as u32;
            let overflow = || Error::Budget {
                what: "p-power in the orbit solver",
                needed: l as usize,
                budget: 0,
            };
            let pl = p.checked_pow(l).ok_or_else(overflow)?;
            for &c in &cycle {
                // nu_c (p^L - 1) = sum_t b_{prev^t(c)} p^{L-1-t}
                let mut acc: i128 = 0;
                let mut idx = c;
                let mut pw = pl / p;
                for _ in 0..l {
                    acc = acc
                        .checked_add((bv[idx] as i128).checked_mul(pw).ok_or_else(overflow)?)
                        .ok_or_else(overflow)?;
                    idx = prev[idx];
                    pw /= p;
                }
                if acc % (pl - 1) != 0 {
                    return Ok(None);
                }
                nu[c] = i64::try_from(acc / (pl - 1)).map_err(|_| overflow())?;
            }
        }
        let rows: Vec<Vec<i64>> = nu.chunks(n).map(|r| r.to_vec()).collect();
        Ok(Some(WeightVec::from_rows(&rows).expect("shape")))
    }

    /// All presentations `(s', mu')` of `R` with `mu' - eta in C_0`, with
    /// `mu'` reduced modulo `(p - pi) X^0`.
    pub fn lowest_alcove_reps(&self, r: &DLPresentation) -> Result<Vec<DLPresentation>> {
        self.check_weight(r.mu())?;
        let (n, f) = (self.n(), self.f());
        let bound = lowest_alcove_bound(self.p(), self.h_value(r.mu()));
        let free = (n - 1) * f;
        let per = (2 * bound + 1) as usize;
        let needed = per
            .checked_pow(free as u32)
            .unwrap_or(usize::MAX)
            .saturating_mul(self.weyl_order());
        if needed > ORBIT_BUDGET {
            return Err(Error::Budget {
                what: "lowest alcove search",
                needed,
                budget: ORBIT_BUDGET,
            });
        }
        let eta = self.eta();
        let mut out = BTreeSet::new();
        let mut digits = vec![-bound; free];
        let nus: Vec<WeightVec> = {
            let mut v = Vec::new();
            loop {
                let rows: Vec<Vec<i64>> = digits
                    .chunks(n - 1)
                    .map(|c| c.iter().copied().chain(std::iter::once(0)).collect())
                    .collect();
                let nu = WeightVec::from_rows(&rows).expect("shape");
                if self.h_value(&nu) <= bound {
                    v.push(nu);
                }
                let mut i = 0;
                while i < free {
                    digits[i] += 1;
                    if digits[i] <= bound {
                        break;
                    }
                    digits[i] = -bound;
                    i += 1;
                }
                if i == free {
                    break;
                }
            }
            v
        };
        for sigma in self.weyl_group() {
            for nu in &nus {
                let cand = self.dl_transform(r, &sigma, nu);
                if self.in_c0(&(cand.mu() - &eta)) {
                    let mu = self.reduce_mod_p_pi(cand.mu());
                    out.insert(DLPresentation::from_parts(cand.s().clone(), mu)?);
                }
            }
        }
        Ok(out.into_iter().collect())
    }

    /// Largest `m` such that `R` has a presentation with `mu - eta` `m`-deep
    /// in `C_0`; `None` when `R` is not `0`-generic.
    pub fn dl_genericity(&self, r: &DLPresentation) -> Result<Option<i64>> {
        let eta = self.eta();
        Ok(self
            .lowest_alcove_reps(r)?
            .iter()
            .map(|x| self.depth(&(x.mu() - &eta)))
            .max())
    }

    /// A presentation of `R` with `mu - eta` `m`-deep in `C_0`, preferring
    /// `r` itself. Refuses when none exists.
    pub fn deep_presentation(
        &self,
        r: &DLPresentation,
        m: i64,
        what: &'static str,
    ) -> Result<DLPresentation> {
        let eta = self.eta();
        let shifted = r.mu() - &eta;
        if self.in_c0(&shifted) && self.depth(&shifted) >= m {
            return Ok(r.clone());
        }
        let reps = self.lowest_alcove_reps(r)?;
        let best = reps.iter().max_by_key(|x| {
            (
                self.depth(&(x.mu() - &eta)),
                std::cmp::Reverse((*x).clone()),
            )
        });
        match best {
            Some(x) if self.depth(&(x.mu() - &eta)) >= m => Ok(x.clone()),
            other => Err(Error::Depth {
                what,
                required: m,
                actual: other.map_or(-1, |x| self.depth(&(x.mu() - &eta))),
            }),
        }
    }
}
