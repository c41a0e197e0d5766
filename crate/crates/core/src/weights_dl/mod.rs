//! Serre weights, their lowest alcove presentations, Deligne-Lusztig
//! presentations and the combinatorial Jordan-Hölder sets.
//!
//! A Serre weight `F(lambda)` is stored through its highest weight, reduced
//! to a canonical representative modulo `(p - pi) X^0`. A presentation
//! `(w~, omega)` with `w~ in W~_1` and `omega - eta in C_0` names
//! `F(pi^-1(w~) . (omega - eta))`, and `R(t_mu s)` is named by the element
//! `t_mu s` together with the orbit relation
//! `t_lambda w = phi(g) t_mu s pi(g)^-1`, `phi(t_nu sigma) = t_{p nu} sigma`.

mod dl;
mod jh;
mod serre;

#[cfg(test)]
mod tests;

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::affine_weyl::ExtAffineElt;
use crate::error::{Error, Result};
use crate::root_data::{FiniteWeylElt, RootDatum, WeightVec};

/// A Serre weight `F(lambda)`, `lambda in X_1(T)`, held in canonical form
/// modulo `(p - pi) X^0`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SerreWeight {
    lambda: WeightVec,
}

impl SerreWeight {
    /// Validates that `lambda` is `p`-restricted and reduces it.
    pub fn new(datum: &RootDatum, lambda: &WeightVec) -> Result<Self> {
        datum.check_weight(lambda)?;
        if !datum.is_p_restricted(lambda) {
            return Err(Error::InvalidPresentation(format!(
                "{lambda} is not p-restricted for p = {}",
                datum.p()
            )));
        }
        Ok(SerreWeight {
            lambda: datum.reduce_mod_p_pi(lambda),
        })
    }

    pub fn lambda(&self) -> &WeightVec {
        &self.lambda
    }

    /// Depth of `lambda` in its `p`-alcove; `-1` when `lambda` is on a wall.
    pub fn depth(&self, datum: &RootDatum) -> i64 {
        datum.depth(&self.lambda)
    }

    pub fn is_m_deep(&self, datum: &RootDatum, m: i64) -> bool {
        self.depth(datum) >= m
    }

    pub fn is_p_regular(&self, datum: &RootDatum) -> bool {
        self.depth(datum) >= 0
    }
}

impl fmt::Debug for SerreWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}", self.lambda)
    }
}

impl fmt::Display for SerreWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}", self.lambda)
    }
}

impl Serialize for SerreWeight {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("SerreWeight", 2)?;
        st.serialize_field("lambda", &self.lambda)?;
        st.serialize_field("canonical", &true)?;
        st.end()
    }
}

/// Raw JSON form of a weight, before validation against a datum.
#[derive(Clone, Debug, Deserialize)]
pub struct SerreWeightInput {
    pub lambda: WeightVec,
}

/// A lowest alcove presentation `(w~, omega)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct SerrePresentation {
    w1: ExtAffineElt,
    omega: WeightVec,
}

impl SerrePresentation {
    pub fn new(datum: &RootDatum, w1: ExtAffineElt, omega: WeightVec) -> Result<Self> {
        datum.check_weight(&omega)?;
        datum.check_weight(w1.trans())?;
        if !w1.is_restricted_elt() {
            return Err(Error::InvalidPresentation(format!(
                "{w1} is not restricted"
            )));
        }
        if !datum.in_c0(&(&omega - &datum.eta())) {
            return Err(Error::InvalidPresentation(format!(
                "{omega} - eta is not in C_0"
            )));
        }
        Ok(SerrePresentation { w1, omega })
    }

    /// The canonical form of the same pair: `w~` is moved to the canonical
    /// `W~_1` element via `(t_c w~, omega) ~ (w~, omega + c)`, then `omega`
    /// is reduced modulo `(p - pi) X^0`.
    pub fn canonical(datum: &RootDatum, w1: &ExtAffineElt, omega: &WeightVec) -> Result<Self> {
        let canon = w1.diamond();
        let c = w1.trans() - canon.trans();
        let omega = datum.reduce_mod_p_pi(&(omega + &c));
        SerrePresentation::new(datum, canon, omega)
    }

    pub fn w1(&self) -> &ExtAffineElt {
        &self.w1
    }

    pub fn omega(&self) -> &WeightVec {
        &self.omega
    }
}

/// `R(t_mu s) = R_s(mu)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DLPresentation {
    elt: ExtAffineElt,
}

impl DLPresentation {
    pub fn new(elt: ExtAffineElt) -> Self {
        DLPresentation { elt }
    }

    pub fn from_parts(s: FiniteWeylElt, mu: WeightVec) -> Result<Self> {
        Ok(DLPresentation {
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
}

impl fmt::Display for DLPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R({})", self.elt)
    }
}
