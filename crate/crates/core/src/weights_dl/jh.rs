//! Jordan-Hölder sets of generic Deligne-Lusztig representations, outer
//! factors and the covering order.
//!
//! Every criterion here is a product over embeddings, so the per-`n` tables
//! supply the candidates of one embedding and the answer is their product.

use super::{DLPresentation, SerrePresentation, SerreWeight};
use crate::affine_weyl::{ExtAffineElt, Pick, SingleTables};
use crate::error::{Error, Result};
use crate::root_data::{FiniteWeylElt, RootDatum, WeightVec};

/// The cartesian product of per-embedding picks, as `(w~, offset)` pairs.
pub(crate) fn product_picks(
    tables: &SingleTables,
    lists: &[&[Pick]],
) -> Vec<(ExtAffineElt, WeightVec)> {
    let mut out: Vec<(Vec<ExtAffineElt>, Vec<WeightVec>)> = vec![(Vec::new(), Vec::new())];
    for list in lists {
        let mut next = Vec::with_capacity(out.len() * list.len());
        for (ws, offs) in &out {
            for (i, off) in list.iter() {
                let mut ws = ws.clone();
                let mut offs = offs.clone();
                ws.push(tables.restricted[*i].clone());
                offs.push(off.clone());
                next.push((ws, offs));
            }
        }
        out = next;
    }
    out.into_iter()
        .map(|(ws, offs)| {
            (
                ExtAffineElt::from_components(&ws).expect("components"),
                WeightVec::from_components(&offs),
            )
        })
        .collect()
}

impl RootDatum {
    pub(crate) fn weyl_indices(&self, s: &FiniteWeylElt) -> Vec<usize> {
        let tb = self.tables();
        (0..self.f())
            .map(|j| tb.weyl_index[&s.component(j)])
            .collect()
    }

    /// Presentations `(w~, mu + offset)` built from a per-`s` table.
    pub(crate) fn presentations_from_table(
        &self,
        s: &FiniteWeylElt,
        mu: &WeightVec,
        table: &[Vec<Pick>],
    ) -> Result<Vec<SerrePresentation>> {
        let tb = self.tables();
        let lists: Vec<&[Pick]> = self
            .weyl_indices(s)
            .into_iter()
            .map(|i| table[i].as_slice())
            .collect();
        let mut out = Vec::new();
        for (w, off) in product_picks(tb, &lists) {
            let omega = mu + &off;
            out.push(SerrePresentation::canonical(self, &w, &omega).map_err(|_| {
                Error::Precondition(format!("candidate ({w}, {omega}) leaves the lowest alcove"))
            })?);
        }
        out.sort();
        out.dedup();
        Ok(out)
    }

    fn weights_of(&self, pres: &[SerrePresentation]) -> Result<Vec<SerreWeight>> {
        let mut out = pres
            .iter()
            .map(|x| self.serre_weight(x))
            .collect::<Result<Vec<_>>>()?;
        out.sort();
        out.dedup();
        Ok(out)
    }

    /// Presentations `(w~, omega)` with
    /// `t_omega W~_{<= w_0 w~} subset t_mu s Adm(eta)`, for an `h_eta`-deep
    /// presentation of `R`.
    pub fn jh_presentations(&self, r: &DLPresentation) -> Result<Vec<SerrePresentation>> {
        let r = self.deep_presentation(r, self.h_eta(), "Deligne-Lusztig presentation")?;
        self.presentations_from_table(r.s(), r.mu(), &self.tables().jh_adm)
    }

    /// `JH(R-bar)` via the `Adm(eta)` inclusion.
    pub fn jh_set(&self, r: &DLPresentation) -> Result<Vec<SerreWeight>> {
        self.weights_of(&self.jh_presentations(r)?)
    }

    /// `JH(R-bar)` via `u~ up-arrow w~_h w~` and `t_omega in t_mu s u~^-1 W`.
    pub fn jh_set_via_up(&self, r: &DLPresentation) -> Result<Vec<SerreWeight>> {
        let r = self.deep_presentation(r, self.h_eta(), "Deligne-Lusztig presentation")?;
        let pres = self.presentations_from_table(r.s(), r.mu(), &self.tables().jh_up)?;
        self.weights_of(&pres)
    }

    /// The outer factor `F_{(w^diamond, t_mu s (w~_h w^diamond)^-1 (0))}` for
    /// every `w in W`, in the order of [`RootDatum::weyl_group`].
    pub fn jh_outer(&self, r: &DLPresentation) -> Result<Vec<(FiniteWeylElt, SerreWeight)>> {
        let r = self.deep_presentation(r, self.h_eta(), "Deligne-Lusztig presentation")?;
        let tb = self.tables();
        let sidx = self.weyl_indices(r.s());
        let mut out = Vec::with_capacity(self.weyl_order());
        for w in self.weyl_group() {
            let widx = self.weyl_indices(&w);
            let lists: Vec<&[Pick]> = (0..self.f())
                .map(|j| std::slice::from_ref(&tb.outer[sidx[j]][widx[j]]))
                .collect();
            let (wd, off) = product_picks(tb, &lists).pop().expect("one pick");
            let pres = SerrePresentation::canonical(self, &wd, &(r.mu() + &off))
                .map_err(|_| Error::Precondition("outer factor leaves the lowest alcove".into()))?;
            out.push((w, self.serre_weight(&pres)?));
        }
        Ok(out)
    }

    /// The outer factor of `R` attached to the restricted `w~`:
    /// `F_{(w~, t_mu s (w~_h w~)^-1 (0))}`. No depth is required of `R`
    /// beyond the resulting presentation being valid.
    pub fn outer_weight(&self, r: &DLPresentation, w: &ExtAffineElt) -> Result<SerreWeight> {
        let back = self.w_h().mul(w).inverse().act(&self.zero());
        let omega = r.elt().act(&back);
        let pres = SerrePresentation::canonical(self, w, &omega)?;
        self.serre_weight(&pres)
    }

    /// `R_u = R(t_{nu_u} u)` with `nu_u = omega - u (w~_h w~)^-1 (0)`: the
    /// representations having `F_{(w~, omega)}` as an outer factor.
    pub fn outer_family(&self, pres: &SerrePresentation) -> Vec<(FiniteWeylElt, DLPresentation)> {
        let back = self.w_h().mul(pres.w1()).inverse().act(&self.zero());
        self.weyl_group()
            .into_iter()
            .map(|u| {
                let nu = pres.omega() - &u.apply(&back);
                let r = DLPresentation::from_parts(u.clone(), nu).expect("shape");
                (u, r)
            })
            .collect()
    }

    fn check_covering_depth(&self, kappa: &SerreWeight) -> Result<()> {
        let required = self.h_eta() + self.d_sigma(kappa)?;
        let actual = kappa.depth(self);
        if actual < required {
            return Err(Error::Depth {
                what: "covering weight",
                required,
                actual,
            });
        }
        Ok(())
    }

    /// `kappa` covers `sigma`: `sigma in JH(R_u)` for every `R_u` having
    /// `kappa` as an outer factor.
    pub fn covers(&self, kappa: &SerreWeight, sigma: &SerreWeight) -> Result<bool> {
        self.check_covering_depth(kappa)?;
        let pres = &self.presentations_of(kappa)[0];
        for (_, r) in self.outer_family(pres) {
            if !self.jh_set(&r)?.contains(sigma) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// All weights covered by `kappa`.
    pub fn covered_by(&self, kappa: &SerreWeight) -> Result<Vec<SerreWeight>> {
        self.check_covering_depth(kappa)?;
        let pres = &self.presentations_of(kappa)[0];
        let mut acc: Option<Vec<SerreWeight>> = None;
        for (_, r) in self.outer_family(pres) {
            let jh = self.jh_set(&r)?;
            acc = Some(match acc {
                None => jh,
                Some(prev) => prev.into_iter().filter(|x| jh.contains(x)).collect(),
            });
        }
        Ok(acc.unwrap_or_default())
    }
}
