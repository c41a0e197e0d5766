//! Tame inertial parameters, the predicted weight set `W?`, extremal weights,
//! weight elimination, connecting types and the weight-connectivity graph.
//!
//! A parameter `tau(s, mu)` is stored through the element `t_mu s`. Its
//! presentations form the same orbit as those of `R(t_mu s)`, so every
//! predicate first moves to a presentation deep enough for the statement it
//! evaluates and refuses when none exists.

mod connect;
mod eliminate;
mod graph;
mod wset;

#[cfg(test)]
mod tests;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::affine_weyl::ExtAffineElt;
use crate::error::Result;
use crate::root_data::{FiniteWeylElt, RootDatum, WeightVec};
use crate::weights_dl::DLPresentation;

pub use connect::ConnectionEdge;
pub use eliminate::EliminationCertificate;
pub use graph::{ConnectivityGraph, GraphEdge};
pub use wset::WtIntersectReport;

/// A tame inertial parameter `tau(s, mu)`, named by `w~(tau) = t_mu s`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TameParam {
    elt: ExtAffineElt,
}

impl TameParam {
    pub fn new(elt: ExtAffineElt) -> Self {
        TameParam { elt }
    }

    pub fn from_parts(s: FiniteWeylElt, mu: WeightVec) -> Result<Self> {
        Ok(TameParam {
            elt: ExtAffineElt::new(mu, s)?,
        })
    }

    pub fn elt(&self) -> &ExtAffineElt {
        &self.elt
    }

    pub fn s(&self) -> &FiniteWeylElt {
        self.elt.fin()
    }

    pub fn mu(&self) -> &WeightVec {
        self.elt.trans()
    }

    /// The Deligne-Lusztig presentation with the same element; both share
    /// one presentation orbit.
    pub fn as_dl(&self) -> DLPresentation {
        DLPresentation::new(self.elt.clone())
    }

    /// Largest `m` with an `m`-deep presentation, `None` if not `0`-generic.
    pub fn genericity(&self, datum: &RootDatum) -> Result<Option<i64>> {
        datum.dl_genericity(&self.as_dl())
    }
}

impl fmt::Display for TameParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "tau({})", self.elt)
    }
}

impl RootDatum {
    /// A presentation of `tau` with `w~(tau)(0) - eta` `m`-deep in `C_0`.
    pub fn tame_presentation(&self, tau: &TameParam, m: i64) -> Result<DLPresentation> {
        self.deep_presentation(&tau.as_dl(), m, "tame parameter")
    }
}
