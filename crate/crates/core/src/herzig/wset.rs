use serde::Serialize;

use super::TameParam;
use crate::affine_weyl::ExtAffineElt;
use crate::error::Result;
use crate::root_data::{FiniteWeylElt, RootDatum, WeightVec};
use crate::weights_dl::{DLPresentation, SerrePresentation, SerreWeight};

/// The four combinatorial conditions comparing a mod `p` parameter with a
/// tame type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WtIntersectReport {
    /// `w~(rho) in w~(tau) Adm(eta)` for some presentations.
    pub admissible: bool,
    /// `JH(R(tau)) cap W?(rho)` is nonempty.
    pub jh_meets_wset: bool,
    /// `JH(R(tau)) cap W_obv(rho)` is nonempty.
    pub jh_meets_wobv: bool,
    /// `JH_out(R(tau)) cap W?(rho)` is nonempty.
    pub outer_meets_wset: bool,
}

impl WtIntersectReport {
    pub fn agree(&self) -> bool {
        let v = self.admissible;
        self.jh_meets_wset == v && self.jh_meets_wobv == v && self.outer_meets_wset == v
    }
}

fn weights(datum: &RootDatum, pres: &[SerrePresentation]) -> Result<Vec<SerreWeight>> {
    let mut out = pres
        .iter()
        .map(|x| datum.serre_weight(x))
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}

fn meets(a: &[SerreWeight], b: &[SerreWeight]) -> bool {
    a.iter().any(|x| b.binary_search(x).is_ok())
}

impl RootDatum {
    /// Presentations `(w~, omega)` with `w~(tau) in t_omega W~_{<= w_0 w~}`.
    pub fn wset_presentations(&self, tau: &TameParam) -> Result<Vec<SerrePresentation>> {
        let t = self.tame_presentation(tau, self.h_eta())?;
        self.presentations_from_table(t.s(), t.mu(), &self.tables().wset_char)
    }

    /// `W?(tau)`, sorted, through the Bruhat-interval characterization.
    pub fn wset(&self, tau: &TameParam) -> Result<Vec<SerreWeight>> {
        weights(self, &self.wset_presentations(tau)?)
    }

    /// `W?(tau) = R(JH(R(t_mu s)))`, keeping `p`-regular constituents only.
    pub fn wset_by_definition(&self, tau: &TameParam) -> Result<Vec<SerreWeight>> {
        let t = self.tame_presentation(tau, self.h_eta())?;
        let mut out = Vec::new();
        for sigma in self.jh_set(&t)? {
            if sigma.is_p_regular(self) {
                out.push(self.r_map(&sigma)?);
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }

    /// Presentations with `w~(tau) in t_omega W w~`.
    pub fn wobv_presentations(&self, tau: &TameParam) -> Result<Vec<SerrePresentation>> {
        let t = self.tame_presentation(tau, self.h_eta())?;
        self.presentations_from_table(t.s(), t.mu(), &self.tables().wobv)
    }

    /// The extremal weights `W_obv(tau)`, sorted.
    pub fn wobv(&self, tau: &TameParam) -> Result<Vec<SerreWeight>> {
        weights(self, &self.wobv_presentations(tau)?)
    }

    pub fn is_extremal(&self, sigma: &SerreWeight, tau: &TameParam) -> Result<bool> {
        Ok(self.wobv(tau)?.binary_search(sigma).is_ok())
    }

    /// `Adm(eta)` membership for an element known only up to left
    /// multiplication by `t_c`, `c in (p - pi) X^0`: the determinant fixes
    /// `c`, and the element is admissible iff that `c` is integral and the
    /// shifted element lies in `Adm(eta)`.
    pub fn adm_eta_contains_mod_p_pi(&self, x: &ExtAffineElt) -> Result<bool> {
        let n = self.n() as i64;
        let target: i64 = self.eta().row(0).iter().sum();
        let mut rows = Vec::with_capacity(self.f());
        for row in x.trans().rows() {
            let excess = row.iter().sum::<i64>() - target;
            if excess % n != 0 {
                return Ok(false);
            }
            rows.push(vec![excess / n; self.n()]);
        }
        let b = WeightVec::from_rows(&rows)?;
        let id = FiniteWeylElt::identity(self.n(), self.f());
        if self.solve_p_minus_w_pi(&id, &b)?.is_none() {
            return Ok(false);
        }
        Ok(self.adm_eta_contains(&x.translate(&-&b)))
    }

    /// All of `Adm(eta)` for the product datum.
    pub fn adm_eta_elements(&self) -> Vec<ExtAffineElt> {
        let tb = self.tables();
        let mut out: Vec<Vec<ExtAffineElt>> = vec![Vec::new()];
        for _ in 0..self.f() {
            let mut next = Vec::with_capacity(out.len() * tb.adm.len());
            for prefix in &out {
                for a in &tb.adm {
                    let mut v = prefix.clone();
                    v.push(a.clone());
                    next.push(v);
                }
            }
            out = next;
        }
        out.into_iter()
            .map(|parts| ExtAffineElt::from_components(&parts).expect("components"))
            .collect()
    }

    fn check_pair_genericity(&self, rho: &TameParam, tau: &TameParam) -> Result<()> {
        let n = self.n() as i64;
        self.tame_presentation(rho, n - 1)?;
        self.tame_presentation(tau, n)?;
        Ok(())
    }

    /// Whether `w~(rho) in w~(tau) Adm(eta)` for some presentations, with
    /// `w~(tau)` running over the lowest alcove presentations of `tau`.
    pub fn admissible_pair(&self, rho: &TameParam, tau: &TameParam) -> Result<bool> {
        self.check_pair_genericity(rho, tau)?;
        let target = rho.as_dl();
        let reps = self.lowest_alcove_reps(&tau.as_dl())?;
        for a in self.adm_eta_elements() {
            for y in &reps {
                if self.dl_equal(&DLPresentation::new(y.elt().mul(&a)), &target)? {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }

    /// Evaluates the admissibility condition together with the three
    /// weight-intersection conditions.
    pub fn equivalence_report(
        &self,
        rho: &TameParam,
        tau: &TameParam,
    ) -> Result<WtIntersectReport> {
        let admissible = self.admissible_pair(rho, tau)?;
        let r = tau.as_dl();
        let jh = self.jh_set(&r)?;
        let mut outer: Vec<SerreWeight> = self.jh_outer(&r)?.into_iter().map(|(_, x)| x).collect();
        outer.sort();
        outer.dedup();
        let w = self.wset(rho)?;
        let obv = self.wobv(rho)?;
        Ok(WtIntersectReport {
            admissible,
            jh_meets_wset: meets(&jh, &w),
            jh_meets_wobv: meets(&jh, &obv),
            outer_meets_wset: meets(&outer, &w),
        })
    }
}
