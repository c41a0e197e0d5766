//! Lengths, Coxeter generators, reduced words and minimal galleries.
//!
//! All predicates here act on the scaled point `X = n * w~(eta / n)`. A
//! positive root `beta` sees `A_0` as the strip `0 < <x, beta> < 1`, so the
//! number of `beta`-hyperplanes between `A_0` and `w~(A_0)` is
//! `|floor(X_beta / n)|`.

use std::fmt;

use serde::Serialize;
use smallvec::SmallVec;

use super::elt::ExtAffineElt;
use crate::root_data::{FiniteWeylElt, Root, WeightVec};

#[inline]
pub(crate) fn pair_point(x: &[i64], n: usize, j: usize, i: usize, k: usize) -> i64 {
    x[j * n + i] - x[j * n + k]
}

/// Hyperplane count on a scaled point.
pub(crate) fn point_length(x: &[i64], n: usize) -> usize {
    let ni = n as i64;
    let mut total = 0usize;
    for row in x.chunks(n) {
        for i in 0..n {
            for k in i + 1..n {
                total += (row[i] - row[k]).div_euclid(ni).unsigned_abs() as usize;
            }
        }
    }
    total
}

/// A Coxeter generator of `W_a`: `index = 0` is the affine reflection
/// `t_{alpha_0} s_{alpha_0}` with `alpha_0 = e_1 - e_n`, and `index = i >= 1`
/// is the simple transposition `(i, i + 1)`, both in one embedding.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Generator {
    pub embedding: usize,
    pub index: usize,
}

impl Generator {
    pub fn label(&self) -> String {
        format!("s{}@{}", self.index, self.embedding)
    }

    /// The reflecting wall, as `(positive root, level)`.
    pub fn wall(&self, n: usize) -> (Root, i64) {
        if self.index == 0 {
            (Root::new(self.embedding, 0, n - 1), 1)
        } else {
            (Root::new(self.embedding, self.index - 1, self.index), 0)
        }
    }

    pub fn element(&self, n: usize, f: usize) -> ExtAffineElt {
        let (root, level) = self.wall(n);
        let s = FiniteWeylElt::reflection(n, f, root);
        let mut t = WeightVec::zero(n, f);
        if level != 0 {
            t = root.to_weight(n, f).scale(level);
        }
        ExtAffineElt::from_parts(t, s)
    }

    #[inline]
    pub(crate) fn is_left_descent(&self, x: &[i64], n: usize) -> bool {
        let j = self.embedding;
        if self.index == 0 {
            pair_point(x, n, j, 0, n - 1) > n as i64
        } else {
            pair_point(x, n, j, self.index - 1, self.index) < 0
        }
    }

    /// Left multiplication on a scaled point.
    #[inline]
    pub(crate) fn apply_point(&self, x: &mut [i64], n: usize) {
        let b = self.embedding * n;
        if self.index == 0 {
            x.swap(b, b + n - 1);
            x[b] += n as i64;
            x[b + n - 1] -= n as i64;
        } else {
            x.swap(b + self.index - 1, b + self.index);
        }
    }

    pub fn all(n: usize, f: usize) -> impl Iterator<Item = Generator> {
        (0..f).flat_map(move |embedding| (0..n).map(move |index| Generator { embedding, index }))
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

pub(crate) fn first_left_descent(x: &[i64], n: usize) -> Option<Generator> {
    let f = x.len() / n;
    Generator::all(n, f).find(|g| g.is_left_descent(x, n))
}

/// The `Omega` generator `u = t_{e_1} c` with `c(k) = k + 1 mod n`; it has
/// length zero and `u^n = t_{(1, ..., 1)}`.
pub fn omega_generator(n: usize, f: usize, embedding: usize) -> ExtAffineElt {
    let mut perm: Vec<Vec<usize>> = (0..f).map(|_| (1..=n).collect()).collect();
    perm[embedding] = (0..n).map(|k| (k + 1) % n + 1).collect();
    let mut t = vec![vec![0i64; n]; f];
    t[embedding][0] = 1;
    ExtAffineElt::from_parts(
        WeightVec::from_rows(&t).expect("shape"),
        FiniteWeylElt::from_rows(&perm).expect("permutation"),
    )
}

/// The element of `Omega` with the given per-embedding exponents.
pub fn omega_element(n: usize, f: usize, exps: &[i64]) -> ExtAffineElt {
    let mut out = ExtAffineElt::identity(n, f);
    let ni = n as i64;
    let mut shift = vec![vec![0i64; n]; f];
    for (j, &m) in exps.iter().enumerate() {
        shift[j] = vec![m.div_euclid(ni); n];
        let u = omega_generator(n, f, j);
        for _ in 0..m.rem_euclid(ni) {
            out = out.mul(&u);
        }
    }
    out.translate(&WeightVec::from_rows(&shift).expect("shape"))
}

impl ExtAffineElt {
    /// Number of affine root hyperplanes separating `A_0` and `w~(A_0)`.
    pub fn length(&self) -> usize {
        point_length(&self.scaled_point(), self.n())
    }

    /// Closed-form length of `t_lambda w`:
    /// `sum_{beta > 0, w^-1 beta > 0} |<lambda, beta>| +
    ///  sum_{beta > 0, w^-1 beta < 0} |<lambda, beta> - 1|`.
    pub fn length_closed_form(&self) -> usize {
        let n = self.n();
        let winv = self.fin().inverse();
        let mut total = 0usize;
        for j in 0..self.f() {
            for i in 0..n {
                for k in i + 1..n {
                    let beta = Root::new(j, i, k);
                    let v = self.trans().pair(beta);
                    let pre = winv.apply_root(beta);
                    total += if pre.is_positive() {
                        v.unsigned_abs() as usize
                    } else {
                        (v - 1).unsigned_abs() as usize
                    };
                }
            }
        }
        total
    }

    pub fn is_length_zero(&self) -> bool {
        self.length() == 0
    }

    /// Left descents `s` with `l(s w~) < l(w~)`.
    pub fn left_descents(&self) -> Vec<Generator> {
        let x = self.scaled_point();
        Generator::all(self.n(), self.f())
            .filter(|g| g.is_left_descent(&x, self.n()))
            .collect()
    }

    /// A reduced word `w~ = s_{i_1} ... s_{i_k} delta` with `delta in Omega`,
    /// obtained by peeling the first left descent at each step.
    pub fn reduced_word(&self) -> ReducedWord {
        let n = self.n();
        let mut x = self.scaled_point();
        let mut generators = Vec::new();
        while let Some(g) = first_left_descent(&x, n) {
            g.apply_point(&mut x, n);
            generators.push(g);
        }
        ReducedWord {
            n,
            f: self.f(),
            generators,
            omega: self.omega_exponents(),
        }
    }

    /// The hyperplanes crossed, in order, by the gallery
    /// `A_0, s_{i_1} A_0, s_{i_1} s_{i_2} A_0, ..., w~ A_0`.
    pub fn minimal_gallery(&self) -> Gallery {
        let word = self.reduced_word();
        let (n, f) = (self.n(), self.f());
        let mut prefix = ExtAffineElt::identity(n, f);
        let mut crossings = Vec::with_capacity(word.generators.len());
        for g in &word.generators {
            let (root, level) = g.wall(n);
            crossings.push(image_of_hyperplane(&prefix, root, level));
            prefix = prefix.mul(&g.element(n, f));
        }
        Gallery { crossings }
    }

    /// The affine hyperplanes separating `A_0` from `w~(A_0)`, sorted.
    pub fn separating_hyperplanes(&self) -> Vec<(Root, i64)> {
        let n = self.n();
        let ni = n as i64;
        let x = self.scaled_point();
        let mut out = Vec::new();
        for j in 0..self.f() {
            for i in 0..n {
                for k in i + 1..n {
                    let fl = pair_point(&x, n, j, i, k).div_euclid(ni);
                    let levels: Vec<i64> = if fl > 0 {
                        (1..=fl).collect()
                    } else {
                        (fl + 1..=0).collect()
                    };
                    out.extend(levels.into_iter().map(|l| (Root::new(j, i, k), l)));
                }
            }
        }
        out.sort();
        out
    }
}

/// Image of `{<x, beta> = level}` under `g`, normalized to a positive root.
fn image_of_hyperplane(g: &ExtAffineElt, beta: Root, level: i64) -> (Root, i64) {
    let img = g.fin().apply_root(beta);
    let lvl = level + g.trans().pair(img);
    if img.is_positive() {
        (img, lvl)
    } else {
        (-img, -lvl)
    }
}

/// A reduced expression `s_{i_1} ... s_{i_k} * omega^{m}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReducedWord {
    n: usize,
    f: usize,
    pub generators: Vec<Generator>,
    pub omega: SmallVec<[i64; 4]>,
}

impl ReducedWord {
    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Labels `"s{i}@{j}"` followed by `"omega^{m}@{j}"` for nonzero `m`.
    pub fn labels(&self) -> Vec<String> {
        let mut out: Vec<String> = self.generators.iter().map(|g| g.label()).collect();
        for (j, &m) in self.omega.iter().enumerate() {
            if m != 0 {
                out.push(format!("omega^{m}@{j}"));
            }
        }
        out
    }

    pub fn omega_part(&self) -> ExtAffineElt {
        omega_element(self.n, self.f, &self.omega)
    }

    pub fn replay(&self) -> ExtAffineElt {
        let mut out = ExtAffineElt::identity(self.n, self.f);
        for g in &self.generators {
            out = out.mul(&g.element(self.n, self.f));
        }
        out.mul(&self.omega_part())
    }
}

impl Serialize for ReducedWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.labels().serialize(s)
    }
}

/// The ordered hyperplanes `(positive root, level)` crossed by a gallery.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Gallery {
    pub crossings: Vec<(Root, i64)>,
}

impl Gallery {
    pub fn len(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty()
    }

    /// No hyperplane is crossed twice.
    pub fn is_minimal(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.crossings.iter().all(|c| seen.insert(*c))
    }
}
