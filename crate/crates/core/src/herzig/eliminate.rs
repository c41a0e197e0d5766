//! Weight elimination: for `sigma` outside `W?(tau)`, a `0`-generic `R` with
//! `sigma` as an outer factor such that no lowest alcove presentation
//! `t_nu s` of `R` has `w~(tau) in t_nu s Adm(eta)`.

use serde::Serialize;

use super::TameParam;
use crate::error::{Error, Result};
use crate::root_data::{FiniteWeylElt, RootDatum};
use crate::weights_dl::{DLPresentation, SerrePresentation, SerreWeight};

/// Self-contained witness that `sigma` is eliminated by `tau`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EliminationCertificate {
    pub sigma: SerreWeight,
    /// The `h_eta`-deep presentation of `tau` the test was run against.
    pub tau: DLPresentation,
    /// The presentation `(w~, omega)` of `sigma` generating the family `R_u`.
    pub presentation: SerrePresentation,
    pub u: FiniteWeylElt,
    #[serde(rename = "R")]
    pub r: DLPresentation,
    /// Every lowest alcove presentation of `R`.
    pub reps: Vec<DLPresentation>,
}

fn fail(msg: impl Into<String>) -> Error {
    Error::Certificate(msg.into())
}

impl EliminationCertificate {
    /// Re-derives every claim from the stored data.
    pub fn validate(&self, datum: &RootDatum) -> Result<()> {
        let eta = datum.eta();
        let t = &self.tau;
        let shifted = t.mu() - &eta;
        if !datum.in_c0(&shifted) || datum.depth(&shifted) < datum.h_eta() {
            return Err(fail("tau presentation is not h_eta-deep"));
        }
        if datum.serre_weight(&self.presentation)? != self.sigma {
            return Err(fail("presentation does not name sigma"));
        }
        let expected = datum
            .outer_family(&self.presentation)
            .into_iter()
            .find(|(u, _)| *u == self.u)
            .map(|(_, r)| r);
        if expected.as_ref() != Some(&self.r) {
            return Err(fail("R is not R_u for the stored presentation"));
        }
        if !datum.in_c0(&(self.r.mu() - &eta)) {
            return Err(fail("R is not 0-generic"));
        }
        if datum.outer_weight(&self.r, self.presentation.w1())? != self.sigma {
            return Err(fail("sigma is not an outer factor of R"));
        }
        if datum.lowest_alcove_reps(&self.r)? != self.reps {
            return Err(fail("stored presentations of R are incomplete"));
        }
        for x in &self.reps {
            if datum.adm_eta_contains_mod_p_pi(&x.elt().inverse().mul(t.elt()))? {
                return Err(fail(format!("w~(tau) lies in {} Adm(eta)", x.elt())));
            }
        }
        Ok(())
    }
}

impl RootDatum {
    /// Searches the families `R_u` of every presentation of `sigma` for an
    /// eliminating representation.
    pub fn eliminate(
        &self,
        sigma: &SerreWeight,
        tau: &TameParam,
    ) -> Result<EliminationCertificate> {
        let t = self.tame_presentation(tau, self.h_eta())?;
        let d = self.d_sigma(sigma)?;
        let actual = sigma.depth(self);
        if actual < d {
            return Err(Error::Depth {
                what: "eliminated weight",
                required: d,
                actual,
            });
        }
        if self.wset(tau)?.binary_search(sigma).is_ok() {
            return Err(Error::NotEliminable);
        }
        let eta = self.eta();
        for pres in self.presentations_of(sigma) {
            for (u, r) in self.outer_family(&pres) {
                if !self.in_c0(&(r.mu() - &eta)) {
                    continue;
                }
                let reps = self.lowest_alcove_reps(&r)?;
                let mut clear = true;
                for x in &reps {
                    if self.adm_eta_contains_mod_p_pi(&x.elt().inverse().mul(t.elt()))? {
                        clear = false;
                        break;
                    }
                }
                if clear {
                    return Ok(EliminationCertificate {
                        sigma: sigma.clone(),
                        tau: t,
                        presentation: pres,
                        u,
                        r,
                        reps,
                    });
                }
            }
        }
        Err(Error::Inconclusive(format!(
            "no eliminating representation found for {sigma} against {tau}"
        )))
    }
}
