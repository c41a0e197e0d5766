use std::fmt;
use std::ops::Mul;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::root_data::{Entries, FiniteWeylElt, PermEntries, WeightVec};

/// An element `t_lambda w` of `W~ = X*(T) x| W`.
///
/// It acts on `X*(T) (x) R` by `x -> lambda + w(x)`, so
/// `(t_lambda w)(t_mu v) = t_{lambda + w(mu)} wv`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtAffineElt {
    trans: WeightVec,
    fin: FiniteWeylElt,
}

impl ExtAffineElt {
    pub fn new(trans: WeightVec, fin: FiniteWeylElt) -> Result<Self> {
        if trans.n() != fin.n() || trans.f() != fin.f() {
            return Err(Error::Shape {
                expected: format!("translation of shape {}x{}", fin.f(), fin.n()),
                got: format!("{}x{}", trans.f(), trans.n()),
            });
        }
        Ok(ExtAffineElt { trans, fin })
    }

    pub(crate) fn from_parts(trans: WeightVec, fin: FiniteWeylElt) -> Self {
        debug_assert!(trans.n() == fin.n() && trans.f() == fin.f());
        ExtAffineElt { trans, fin }
    }

    pub fn identity(n: usize, f: usize) -> Self {
        ExtAffineElt {
            trans: WeightVec::zero(n, f),
            fin: FiniteWeylElt::identity(n, f),
        }
    }

    pub fn translation(lambda: WeightVec) -> Self {
        let fin = FiniteWeylElt::identity(lambda.n(), lambda.f());
        ExtAffineElt { trans: lambda, fin }
    }

    pub fn finite(w: FiniteWeylElt) -> Self {
        ExtAffineElt {
            trans: WeightVec::zero(w.n(), w.f()),
            fin: w,
        }
    }

    pub fn trans(&self) -> &WeightVec {
        &self.trans
    }

    pub fn fin(&self) -> &FiniteWeylElt {
        &self.fin
    }

    pub fn n(&self) -> usize {
        self.fin.n()
    }

    pub fn f(&self) -> usize {
        self.fin.f()
    }

    pub fn is_translation(&self) -> bool {
        self.fin.is_identity()
    }

    pub fn is_identity(&self) -> bool {
        self.fin.is_identity() && self.trans.is_zero()
    }

    pub fn mul(&self, other: &Self) -> Self {
        ExtAffineElt {
            trans: &self.trans + &self.fin.apply(&other.trans),
            fin: self.fin.compose(&other.fin),
        }
    }

    pub fn inverse(&self) -> Self {
        let winv = self.fin.inverse();
        let trans = -&winv.apply(&self.trans);
        ExtAffineElt { trans, fin: winv }
    }

    /// Affine action on a lattice point: `lambda + w(x)`.
    pub fn act(&self, x: &WeightVec) -> WeightVec {
        &self.trans + &self.fin.apply(x)
    }

    /// Left multiplication by `t_c`.
    pub fn translate(&self, c: &WeightVec) -> Self {
        ExtAffineElt {
            trans: &self.trans + c,
            fin: self.fin.clone(),
        }
    }

    pub fn frobenius(&self) -> Self {
        ExtAffineElt {
            trans: self.trans.frobenius(),
            fin: self.fin.frobenius(),
        }
    }

    pub fn frobenius_inv(&self) -> Self {
        ExtAffineElt {
            trans: self.trans.frobenius_inv(),
            fin: self.fin.frobenius_inv(),
        }
    }

    /// The component in embedding `j`, as an element for `f = 1`.
    pub fn component(&self, j: usize) -> Self {
        let n = self.n();
        ExtAffineElt {
            trans: WeightVec::from_flat(n, self.trans.row(j).iter().copied().collect()),
            fin: FiniteWeylElt::from_flat(n, self.fin.flat()[j * n..(j + 1) * n].into()),
        }
    }

    pub fn from_components(parts: &[ExtAffineElt]) -> Result<Self> {
        let n = parts.first().map(|p| p.n()).ok_or_else(|| Error::Shape {
            expected: "at least one component".into(),
            got: "none".into(),
        })?;
        let mut trans = Entries::new();
        let mut perm = PermEntries::new();
        for p in parts {
            if p.n() != n {
                return Err(Error::Shape {
                    expected: format!("components with n = {n}"),
                    got: format!("n = {}", p.n()),
                });
            }
            trans.extend_from_slice(p.trans.entries());
            perm.extend_from_slice(p.fin.flat());
        }
        Ok(ExtAffineElt {
            trans: WeightVec::from_flat(n, trans),
            fin: FiniteWeylElt::from_flat(n, perm),
        })
    }

    /// Per-embedding determinant of the translation part; it indexes the
    /// `Omega` component.
    pub fn omega_exponents(&self) -> SmallVec<[i64; 4]> {
        self.trans.det()
    }

    /// `n` times the image of the interior point `eta / n` of `A_0`:
    /// `n lambda + w(eta)`. Every alcove predicate is a sign test on it.
    pub(crate) fn scaled_point(&self) -> Entries {
        let n = self.n();
        let f = self.f();
        let mut out: Entries = SmallVec::from_elem(0, n * f);
        for j in 0..f {
            for i in 0..n {
                let img = self.fin.image(j, i);
                out[j * n + img] = (n - 1 - i) as i64;
            }
        }
        for (o, t) in out.iter_mut().zip(self.trans.entries()) {
            *o += n as i64 * t;
        }
        out
    }

    /// Inverse of [`Self::scaled_point`]. The scaled point of an element
    /// has pairwise distinct residues mod `n` inside each embedding.
    pub(crate) fn from_scaled_point(n: usize, x: &[i64]) -> Self {
        let ni = n as i64;
        let mut trans = Entries::with_capacity(x.len());
        let mut perm: PermEntries = SmallVec::from_elem(0, x.len());
        for (j, row) in x.chunks(n).enumerate() {
            for (k, &v) in row.iter().enumerate() {
                trans.push(v.div_euclid(ni));
                let r = v.rem_euclid(ni) as usize;
                // (w eta)_k = r = eta_i with i = n - 1 - r, so w(i) = k.
                perm[j * n + (n - 1 - r)] = k as u8;
            }
        }
        ExtAffineElt {
            trans: WeightVec::from_flat(n, trans),
            fin: FiniteWeylElt::from_flat(n, perm),
        }
    }
}

impl Mul for &ExtAffineElt {
    type Output = ExtAffineElt;
    fn mul(self, rhs: &ExtAffineElt) -> ExtAffineElt {
        ExtAffineElt::mul(self, rhs)
    }
}

impl fmt::Debug for ExtAffineElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ExtAffineElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t{}*{}", self.trans, self.fin)
    }
}

#[derive(Serialize, Deserialize)]
struct EltRepr {
    trans: WeightVec,
    perm: FiniteWeylElt,
}

impl Serialize for ExtAffineElt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        EltRepr {
            trans: self.trans.clone(),
            perm: self.fin.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExtAffineElt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = EltRepr::deserialize(d)?;
        ExtAffineElt::new(r.trans, r.perm).map_err(D::Error::custom)
    }
}
