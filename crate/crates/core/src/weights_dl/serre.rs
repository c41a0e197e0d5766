use super::{SerrePresentation, SerreWeight};
use crate::affine_weyl::{omega_element, ExtAffineElt};
use crate::error::{Error, Result};
use crate::root_data::{RootDatum, WeightVec};

impl RootDatum {
    /// Canonical representative of `lambda` modulo `(p - pi) X^0`.
    ///
    /// `X^0 / (p - pi) X^0` is cyclic of order `p^f - 1` through
    /// `c -> sum_j c_j p^j`. The representative keeps the `X^0`-free part of
    /// `lambda` (last entry zero per embedding) and adds back the base-`p`
    /// digits of that residue as constants.
    pub fn reduce_mod_p_pi(&self, lambda: &WeightVec) -> WeightVec {
        let n = self.n();
        let p = self.p() as i128;
        let modulus = p.pow(self.f() as u32) - 1;
        let mut v: i128 = 0;
        let mut pj: i128 = 1;
        for row in lambda.rows() {
            v = (v + row[n - 1] as i128 * pj).rem_euclid(modulus);
            pj = pj * p % modulus.max(1);
        }
        let mut digits = Vec::with_capacity(self.f());
        for _ in 0..self.f() {
            digits.push((v % p) as i64);
            v /= p;
        }
        lambda.normalize_x0().add_x0(&digits)
    }

    /// `F_{(w~, omega)} = F(pi^-1(w~) . (omega - eta))`.
    pub fn serre_weight(&self, pres: &SerrePresentation) -> Result<SerreWeight> {
        self.serre_weight_of(pres.w1(), pres.omega())
    }

    /// As [`Self::serre_weight`], for any `w~` with `w~ . C_0` restricted.
    pub fn serre_weight_of(&self, w: &ExtAffineElt, omega: &WeightVec) -> Result<SerreWeight> {
        let lambda = self.p_dot(&w.frobenius_inv(), &(omega - &self.eta()));
        SerreWeight::new(self, &lambda)
    }

    /// The element `w~` with `lambda in w~ . C_0`, together with the point
    /// `omega in eta + C_0` such that `lambda = w~ . (omega - eta)`.
    pub fn weight_alcove(&self, lambda: &WeightVec) -> Result<(ExtAffineElt, WeightVec)> {
        let y = lambda + &self.eta();
        let a = self.alcove_element(&y)?;
        let rest = &y - &a.trans().scale(self.p());
        let omega = a.fin().inverse().apply(&rest);
        Ok((a, omega))
    }

    /// All lowest alcove presentations of `sigma` in canonical form, one per
    /// class of `Omega / X^0`. Empty when `sigma` is not `0`-deep.
    pub fn presentations_of(&self, sigma: &SerreWeight) -> Vec<SerrePresentation> {
        let Ok((a, omega)) = self.weight_alcove(sigma.lambda()) else {
            return Vec::new();
        };
        let w = a.frobenius();
        let (n, f) = (self.n(), self.f());
        let eta = self.eta();
        let mut out = Vec::with_capacity(n.pow(f as u32));
        let mut exps = vec![0i64; f];
        loop {
            let delta = omega_element(n, f, &exps);
            let w2 = w.mul(&delta.inverse());
            let omega2 = &self.p_dot(&delta.frobenius_inv(), &(&omega - &eta)) + &eta;
            out.push(
                SerrePresentation::canonical(self, &w2, &omega2)
                    .expect("Omega re-indexing keeps presentations valid"),
            );
            let mut j = 0;
            while j < f {
                exps[j] += 1;
                if exps[j] < n as i64 {
                    break;
                }
                exps[j] = 0;
                j += 1;
            }
            if j == f {
                break;
            }
        }
        out.sort();
        out.dedup();
        out
    }

    /// `d_{F(lambda)} = max_{v in closure(A_0)} h_{w~_h w~(v)}` with
    /// `lambda in w~ . C_0`. The vertices of the closed base alcove are the
    /// `(1^k, 0^{n-k})` up to `X^0`, chosen independently per embedding.
    pub fn d_sigma(&self, sigma: &SerreWeight) -> Result<i64> {
        let (a, _) = self
            .weight_alcove(sigma.lambda())
            .map_err(|_| Error::Precondition(format!("{sigma} is not p-regular")))?;
        let x = self.w_h().mul(&a);
        let n = self.n();
        let mut best = 0;
        for j in 0..self.f() {
            let comp = x.component(j);
            for k in 0..n {
                let v: Vec<i64> = (0..n).map(|i| i64::from(i < k)).collect();
                let img = comp.act(&WeightVec::from_rows(&[v]).expect("vertex"));
                let row = img.row(0);
                best = best.max(row.iter().max().unwrap() - row.iter().min().unwrap());
            }
        }
        Ok(best)
    }

    /// The bijection `F(lambda) -> F(w~_h . lambda)` on `p`-regular weights.
    pub fn r_map(&self, sigma: &SerreWeight) -> Result<SerreWeight> {
        if !sigma.is_p_regular(self) {
            return Err(Error::Precondition(format!("{sigma} is not p-regular")));
        }
        SerreWeight::new(self, &self.p_dot(&self.w_h(), sigma.lambda()))
    }

    /// Inverse of [`Self::r_map`].
    pub fn r_map_inv(&self, sigma: &SerreWeight) -> Result<SerreWeight> {
        if !sigma.is_p_regular(self) {
            return Err(Error::Precondition(format!("{sigma} is not p-regular")));
        }
        SerreWeight::new(self, &self.p_dot(&self.w_h().inverse(), sigma.lambda()))
    }
}
