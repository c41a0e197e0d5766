//! Root datum of `Res GL_n` over `f` unramified embeddings.
//!
//! Characters are integer vectors in `Z^{n f}`, one `n`-vector per embedding.
//! The Weyl group is `S_n^f` acting by permuting positions inside each
//! embedding, and the roots are the `e_i - e_k` of a single embedding.
//!
//! Conventions fixed here and used throughout the crate:
//!
//! * `eta = (n-1, ..., 1, 0)` in every embedding.
//! * `omega_alpha` for `alpha = e_i - e_{i+1}` is `(1, ..., 1, 0, ..., 0)` with
//!   `i` ones, in the embedding of `alpha` and zero elsewhere. Every statement
//!   built on it is invariant under `X^0` shifts.
//! * The Frobenius automorphism `pi` moves embedding `j` to embedding `j + 1`
//!   (indices mod `f`).
//! * A permutation `w` acts on characters by `(w x)_{w(i)} = x_i`.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::{Arc, OnceLock};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::SmallVec;

use crate::affine_weyl::SingleTables;
use crate::error::{Error, Result};

pub(crate) type Entries = SmallVec<[i64; 8]>;
pub(crate) type PermEntries = SmallVec<[u8; 8]>;

/// An element of `X*(T) = Z^{n f}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVec {
    n: usize,
    entries: Entries,
}

impl WeightVec {
    pub fn zero(n: usize, f: usize) -> Self {
        WeightVec {
            n,
            entries: SmallVec::from_elem(0, n * f),
        }
    }

    /// Builds a weight from its per-embedding rows.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let n = rows.first().map(|r| r.as_ref().len()).unwrap_or(0);
        if n == 0 {
            return Err(Error::Shape {
                expected: "at least one non-empty embedding row".into(),
                got: format!("{} rows", rows.len()),
            });
        }
        let mut entries = Entries::with_capacity(n * rows.len());
        for r in rows {
            let r = r.as_ref();
            if r.len() != n {
                return Err(Error::Shape {
                    expected: format!("rows of length {n}"),
                    got: format!("row of length {}", r.len()),
                });
            }
            entries.extend_from_slice(r);
        }
        Ok(WeightVec { n, entries })
    }

    pub(crate) fn from_flat(n: usize, entries: Entries) -> Self {
        debug_assert!(n > 0 && entries.len() % n == 0);
        WeightVec { n, entries }
    }

    /// Rank of the `GL_n` factor.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of embeddings.
    pub fn f(&self) -> usize {
        self.entries.len() / self.n
    }

    pub fn row(&self, j: usize) -> &[i64] {
        &self.entries[j * self.n..(j + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[i64]> + '_ {
        self.entries.chunks(self.n)
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        self.rows().map(|r| r.to_vec()).collect()
    }

    pub fn get(&self, j: usize, i: usize) -> i64 {
        self.entries[j * self.n + i]
    }

    pub(crate) fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&x| x == 0)
    }

    /// `<self, (e_i - e_k)^vee>` for the root `beta`, without range checks.
    #[inline]
    pub fn pair(&self, beta: Root) -> i64 {
        let base = beta.embedding * self.n;
        self.entries[base + beta.i] - self.entries[base + beta.k]
    }

    /// Membership in `X^0(T)`: every embedding component is constant.
    pub fn is_x0(&self) -> bool {
        self.rows().all(|r| r.iter().all(|&x| x == r[0]))
    }

    /// Per-embedding sum of entries; the image in `X*(T)/ZR = Z^f`.
    pub fn det(&self) -> SmallVec<[i64; 4]> {
        self.rows().map(|r| r.iter().sum()).collect()
    }

    /// Embedding `j` as a weight for `f = 1`.
    pub fn component(&self, j: usize) -> Self {
        WeightVec::from_flat(self.n, self.row(j).into())
    }

    /// Concatenates single-embedding weights of equal length.
    pub fn from_components(parts: &[WeightVec]) -> Self {
        let n = parts[0].n;
        let entries = parts
            .iter()
            .flat_map(|p| p.entries.iter().copied())
            .collect();
        WeightVec::from_flat(n, entries)
    }

    /// Frobenius: embedding `j` moves to `j + 1 mod f`.
    pub fn frobenius(&self) -> Self {
        let (n, f) = (self.n, self.f());
        let mut out = self.entries.clone();
        for j in 0..f {
            let dst = (j + 1) % f;
            out[dst * n..(dst + 1) * n].copy_from_slice(self.row(j));
        }
        WeightVec::from_flat(n, out)
    }

    pub fn frobenius_inv(&self) -> Self {
        let (n, f) = (self.n, self.f());
        let mut out = self.entries.clone();
        for j in 0..f {
            let src = (j + 1) % f;
            out[j * n..(j + 1) * n].copy_from_slice(self.row(src));
        }
        WeightVec::from_flat(n, out)
    }

    pub fn scale(&self, c: i64) -> Self {
        WeightVec {
            n: self.n,
            entries: self.entries.iter().map(|x| x * c).collect(),
        }
    }

    /// Adds the constant `c[j]` to every entry of embedding `j`.
    pub fn add_x0(&self, c: &[i64]) -> Self {
        let mut out = self.clone();
        for (j, row) in out.entries.chunks_mut(self.n).enumerate() {
            row.iter_mut().for_each(|x| *x += c[j]);
        }
        out
    }

    /// Representative modulo `X^0`: the last entry of every embedding is zero.
    pub fn normalize_x0(&self) -> Self {
        let last: SmallVec<[i64; 4]> = self.rows().map(|r| -r[self.n - 1]).collect();
        self.add_x0(&last)
    }

    fn check_shape(&self, other: &Self) {
        assert!(
            self.n == other.n && self.entries.len() == other.entries.len(),
            "weight shape mismatch"
        );
    }
}

impl Add for &WeightVec {
    type Output = WeightVec;
    fn add(self, rhs: &WeightVec) -> WeightVec {
        self.check_shape(rhs);
        WeightVec {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &WeightVec {
    type Output = WeightVec;
    fn sub(self, rhs: &WeightVec) -> WeightVec {
        self.check_shape(rhs);
        WeightVec {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &WeightVec {
    type Output = WeightVec;
    fn neg(self) -> WeightVec {
        self.scale(-1)
    }
}

impl fmt::Debug for WeightVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for WeightVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, r) in self.rows().enumerate() {
            if j > 0 {
                f.write_str(";")?;
            }
            let parts: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", parts.join(","))?;
        }
        Ok(())
    }
}

impl Serialize for WeightVec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for WeightVec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<i64>>::deserialize(d)?;
        WeightVec::from_rows(&rows).map_err(D::Error::custom)
    }
}

/// A root `e_i - e_k` of embedding `embedding` (0-based positions).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Root {
    pub embedding: usize,
    pub i: usize,
    pub k: usize,
}

impl Root {
    pub fn new(embedding: usize, i: usize, k: usize) -> Self {
        debug_assert!(i != k);
        Root { embedding, i, k }
    }

    pub fn is_positive(self) -> bool {
        self.i < self.k
    }

    pub fn is_simple(self) -> bool {
        self.k == self.i + 1
    }

    /// The positive root among `{self, -self}`.
    pub fn abs(self) -> Self {
        if self.is_positive() {
            self
        } else {
            -self
        }
    }

    /// `<beta, alpha^vee>` for two type A roots.
    pub fn cartan(self, alpha: Root) -> i64 {
        if self.embedding != alpha.embedding {
            return 0;
        }
        let e = |x: usize| -> i64 { (x == alpha.i) as i64 - (x == alpha.k) as i64 };
        e(self.i) - e(self.k)
    }

    /// As a character (`e_i - e_k` in its embedding).
    pub fn to_weight(self, n: usize, f: usize) -> WeightVec {
        let mut w = WeightVec::zero(n, f);
        w.entries[self.embedding * n + self.i] = 1;
        w.entries[self.embedding * n + self.k] = -1;
        w
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}-e{}@{}", self.i + 1, self.k + 1, self.embedding)
    }
}

impl std::ops::Neg for Root {
    type Output = Root;

    fn neg(self) -> Root {
        Root {
            embedding: self.embedding,
            i: self.k,
            k: self.i,
        }
    }
}

impl Serialize for Root {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            embedding: usize,
            i: usize,
            k: usize,
        }
        Repr {
            embedding: self.embedding,
            i: self.i + 1,
            k: self.k + 1,
        }
        .serialize(s)
    }
}

/// An element of `W = S_n^f`, stored as one permutation per embedding.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteWeylElt {
    n: usize,
    perm: PermEntries,
}

impl FiniteWeylElt {
    pub fn identity(n: usize, f: usize) -> Self {
        FiniteWeylElt {
            n,
            perm: (0..f).flat_map(|_| 0..n as u8).collect(),
        }
    }

    /// Builds an element from 1-based one-line notation, one row per embedding.
    pub fn from_rows<R: AsRef<[usize]>>(rows: &[R]) -> Result<Self> {
        let n = rows.first().map(|r| r.as_ref().len()).unwrap_or(0);
        if n == 0 || n > u8::MAX as usize {
            return Err(Error::Shape {
                expected: "non-empty permutation rows".into(),
                got: format!("{} rows", rows.len()),
            });
        }
        let mut perm = PermEntries::new();
        for r in rows {
            let r = r.as_ref();
            let mut seen = vec![false; n];
            if r.len() != n {
                return Err(Error::Shape {
                    expected: format!("permutations of length {n}"),
                    got: format!("length {}", r.len()),
                });
            }
            for &x in r {
                if x == 0 || x > n || seen[x - 1] {
                    return Err(Error::NotAPermutation(r.to_vec()));
                }
                seen[x - 1] = true;
                perm.push((x - 1) as u8);
            }
        }
        Ok(FiniteWeylElt { n, perm })
    }

    pub(crate) fn from_flat(n: usize, perm: PermEntries) -> Self {
        FiniteWeylElt { n, perm }
    }

    /// The longest element: order reversal in every embedding.
    pub fn longest(n: usize, f: usize) -> Self {
        FiniteWeylElt {
            n,
            perm: (0..f).flat_map(|_| (0..n as u8).rev()).collect(),
        }
    }

    /// The reflection `s_beta`.
    pub fn reflection(n: usize, f: usize, beta: Root) -> Self {
        let mut w = Self::identity(n, f);
        let base = beta.embedding * n;
        w.perm.swap(base + beta.i, base + beta.k);
        w
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn f(&self) -> usize {
        self.perm.len() / self.n
    }

    /// Image of position `i` of embedding `j` (0-based).
    #[inline]
    pub fn image(&self, j: usize, i: usize) -> usize {
        self.perm[j * self.n + i] as usize
    }

    pub fn to_rows(&self) -> Vec<Vec<usize>> {
        self.perm
            .chunks(self.n)
            .map(|r| r.iter().map(|&x| x as usize + 1).collect())
            .collect()
    }

    pub(crate) fn flat(&self) -> &[u8] {
        &self.perm
    }

    pub fn is_identity(&self) -> bool {
        self.perm
            .chunks(self.n)
            .all(|r| r.iter().enumerate().all(|(i, &x)| i == x as usize))
    }

    /// `self * other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        let n = self.n;
        let perm = other
            .perm
            .iter()
            .enumerate()
            .map(|(idx, &x)| {
                let base = (idx / n) * n;
                self.perm[base + x as usize]
            })
            .collect();
        FiniteWeylElt { n, perm }
    }

    pub fn inverse(&self) -> Self {
        let n = self.n;
        let mut perm = self.perm.clone();
        for (idx, &x) in self.perm.iter().enumerate() {
            let base = (idx / n) * n;
            perm[base + x as usize] = (idx - base) as u8;
        }
        FiniteWeylElt { n, perm }
    }

    /// `(w x)_{w(i)} = x_i`.
    pub fn apply(&self, x: &WeightVec) -> WeightVec {
        let n = self.n;
        let mut out = x.entries.clone();
        for (idx, &img) in self.perm.iter().enumerate() {
            let base = (idx / n) * n;
            out[base + img as usize] = x.entries[idx];
        }
        WeightVec::from_flat(n, out)
    }

    pub fn apply_root(&self, beta: Root) -> Root {
        Root {
            embedding: beta.embedding,
            i: self.image(beta.embedding, beta.i),
            k: self.image(beta.embedding, beta.k),
        }
    }

    /// Coxeter length: number of inversions.
    pub fn length(&self) -> usize {
        self.perm
            .chunks(self.n)
            .map(|r| {
                let mut c = 0;
                for a in 0..r.len() {
                    for b in a + 1..r.len() {
                        if r[a] > r[b] {
                            c += 1;
                        }
                    }
                }
                c
            })
            .sum()
    }

    pub fn component(&self, j: usize) -> Self {
        FiniteWeylElt::from_flat(self.n, self.perm[j * self.n..(j + 1) * self.n].into())
    }

    pub fn from_components(parts: &[FiniteWeylElt]) -> Self {
        let n = parts[0].n;
        let perm = parts.iter().flat_map(|p| p.perm.iter().copied()).collect();
        FiniteWeylElt { n, perm }
    }

    /// Conjugation by Frobenius: embedding `j` moves to `j + 1`.
    pub fn frobenius(&self) -> Self {
        let f = self.f();
        let mut perm = self.perm.clone();
        for j in 0..f {
            let dst = (j + 1) % f;
            perm[dst * self.n..(dst + 1) * self.n]
                .copy_from_slice(&self.perm[j * self.n..(j + 1) * self.n]);
        }
        FiniteWeylElt { n: self.n, perm }
    }

    pub fn frobenius_inv(&self) -> Self {
        let f = self.f();
        let mut perm = self.perm.clone();
        for j in 0..f {
            let src = (j + 1) % f;
            perm[j * self.n..(j + 1) * self.n]
                .copy_from_slice(&self.perm[src * self.n..(src + 1) * self.n]);
        }
        FiniteWeylElt { n: self.n, perm }
    }

    /// All elements of `S_n^f` in lexicographic order.
    pub fn all(n: usize, f: usize) -> Vec<Self> {
        let single = permutations(n);
        let mut out: Vec<PermEntries> = vec![PermEntries::new()];
        for _ in 0..f {
            let mut next = Vec::with_capacity(out.len() * single.len());
            for prefix in &out {
                for s in &single {
                    let mut v = prefix.clone();
                    v.extend_from_slice(s);
                    next.push(v);
                }
            }
            out = next;
        }
        out.into_iter()
            .map(|perm| FiniteWeylElt { n, perm })
            .collect()
    }
}

fn permutations(n: usize) -> Vec<Vec<u8>> {
    fn rec(prefix: &mut Vec<u8>, used: &mut [bool], out: &mut Vec<Vec<u8>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                prefix.push(x as u8);
                rec(prefix, used, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

impl fmt::Debug for FiniteWeylElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FiniteWeylElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, r) in self.to_rows().iter().enumerate() {
            if j > 0 {
                f.write_str(";")?;
            }
            let parts: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            write!(f, "[{}]", parts.join(","))?;
        }
        Ok(())
    }
}

impl Serialize for FiniteWeylElt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for FiniteWeylElt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<usize>>::deserialize(d)?;
        FiniteWeylElt::from_rows(&rows).map_err(D::Error::custom)
    }
}

/// Floor signature `floor(<lambda + eta, beta^vee> / p)` over the positive
/// roots, in the order of [`RootDatum::positive_roots`].
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct AlcoveLabel(pub Vec<i64>);

/// The datum `(n, f, p)`. Cheap to clone; lazily built tables are shared.
#[derive(Clone)]
pub struct RootDatum {
    n: usize,
    f: usize,
    p: i64,
    positive: Arc<[Root]>,
    tables: Arc<OnceLock<Arc<SingleTables>>>,
}

impl RootDatum {
    pub fn new(n: usize, f: usize, p: i64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidDatum(format!(
                "n must be at least 2 (got {n}); GL_1 has no roots"
            )));
        }
        if n > 8 {
            return Err(Error::InvalidDatum(format!("n = {n} is beyond desk scale")));
        }
        if f == 0 {
            return Err(Error::InvalidDatum("f must be at least 1".into()));
        }
        if !is_prime(p) {
            return Err(Error::InvalidDatum(format!("p = {p} is not prime")));
        }
        if p < n as i64 {
            return Err(Error::InvalidDatum(format!(
                "C0 empty: need p > h_eta = {}, got p = {p}",
                n - 1
            )));
        }
        let positive: Vec<Root> = (0..f)
            .flat_map(|j| (0..n).flat_map(move |i| (i + 1..n).map(move |k| Root::new(j, i, k))))
            .collect();
        Ok(RootDatum {
            n,
            f,
            p,
            positive: positive.into(),
            tables: Arc::new(OnceLock::new()),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn f(&self) -> usize {
        self.f
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    /// `h_eta = n - 1`.
    pub fn h_eta(&self) -> i64 {
        self.n as i64 - 1
    }

    /// Single-embedding tables for this `n`, shared across data.
    pub(crate) fn tables(&self) -> &SingleTables {
        self.tables
            .get_or_init(|| crate::affine_weyl::single_tables(self.n))
    }

    pub fn zero(&self) -> WeightVec {
        WeightVec::zero(self.n, self.f)
    }

    /// `eta = (n-1, ..., 0)` in every embedding.
    pub fn eta(&self) -> WeightVec {
        WeightVec::from_flat(
            self.n,
            (0..self.f).flat_map(|_| (0..self.n as i64).rev()).collect(),
        )
    }

    /// The fundamental weight `(1, ..., 1, 0, ..., 0)` for a simple root.
    pub fn omega_alpha(&self, alpha: Root) -> WeightVec {
        debug_assert!(alpha.is_simple());
        let mut w = self.zero();
        for x in 0..=alpha.i {
            w.entries[alpha.embedding * self.n + x] = 1;
        }
        w
    }

    pub fn w0(&self) -> FiniteWeylElt {
        FiniteWeylElt::longest(self.n, self.f)
    }

    pub fn identity_w(&self) -> FiniteWeylElt {
        FiniteWeylElt::identity(self.n, self.f)
    }

    pub fn weyl_group(&self) -> Vec<FiniteWeylElt> {
        FiniteWeylElt::all(self.n, self.f)
    }

    pub fn weyl_order(&self) -> usize {
        (1..=self.n).product::<usize>().pow(self.f as u32)
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn roots(&self) -> impl Iterator<Item = Root> + '_ {
        self.positive.iter().flat_map(|&r| [r, -r])
    }

    pub fn simple_roots(&self) -> impl Iterator<Item = Root> + '_ {
        let n = self.n;
        (0..self.f).flat_map(move |j| (0..n - 1).map(move |i| Root::new(j, i, i + 1)))
    }

    /// The highest root `e_1 - e_n` of each embedding.
    pub fn highest_roots(&self) -> impl Iterator<Item = Root> + '_ {
        let n = self.n;
        (0..self.f).map(move |j| Root::new(j, 0, n - 1))
    }

    pub fn check_weight(&self, lambda: &WeightVec) -> Result<()> {
        if lambda.n() != self.n || lambda.f() != self.f {
            return Err(Error::Shape {
                expected: format!("{} embeddings of length {}", self.f, self.n),
                got: format!("{} embeddings of length {}", lambda.f(), lambda.n()),
            });
        }
        Ok(())
    }

    pub fn check_root(&self, beta: Root) -> Result<()> {
        if beta.embedding >= self.f || beta.i >= self.n || beta.k >= self.n || beta.i == beta.k {
            return Err(Error::RootOutOfRange {
                embedding: beta.embedding,
                i: beta.i,
                k: beta.k,
            });
        }
        Ok(())
    }

    /// The pairing `<lambda, beta^vee> = lambda_{j,i} - lambda_{j,k}`.
    pub fn pairing(&self, lambda: &WeightVec, beta: Root) -> Result<i64> {
        self.check_weight(lambda)?;
        self.check_root(beta)?;
        Ok(lambda.pair(beta))
    }

    /// `h_nu = max_{alpha in R} <nu, alpha^vee>`.
    pub fn h_value(&self, nu: &WeightVec) -> i64 {
        nu.rows()
            .map(|r| r.iter().max().unwrap() - r.iter().min().unwrap())
            .max()
            .unwrap_or(0)
    }

    /// The Frobenius automorphism: component `j` moves to `j + 1 mod f`.
    pub fn frobenius_pi(&self, lambda: &WeightVec) -> WeightVec {
        lambda.frobenius()
    }

    pub fn frobenius_pi_inv(&self, lambda: &WeightVec) -> WeightVec {
        lambda.frobenius_inv()
    }

    /// Largest `m` with `lambda` `m`-deep in its `p`-alcove, i.e.
    /// `min_{alpha, k} |<lambda + eta, alpha^vee> - k p| - 1`. Returns `-1` on
    /// a wall.
    pub fn depth(&self, lambda: &WeightVec) -> i64 {
        let eta = self.eta();
        let shifted = lambda + &eta;
        self.positive
            .iter()
            .map(|&b| {
                let r = shifted.pair(b).rem_euclid(self.p);
                r.min(self.p - r)
            })
            .min()
            .unwrap()
            - 1
    }

    pub fn is_m_deep(&self, lambda: &WeightVec, m: i64) -> bool {
        self.depth(lambda) >= m
    }

    pub fn alcove_of(&self, lambda: &WeightVec) -> AlcoveLabel {
        let shifted = lambda + &self.eta();
        AlcoveLabel(
            self.positive
                .iter()
                .map(|&b| shifted.pair(b).div_euclid(self.p))
                .collect(),
        )
    }

    /// `lambda` lies in the lowest `p`-alcove `C_0`.
    pub fn in_c0(&self, lambda: &WeightVec) -> bool {
        let shifted = lambda + &self.eta();
        self.positive.iter().all(|&b| {
            let v = shifted.pair(b);
            0 < v && v < self.p
        })
    }

    /// Depth of `lambda` inside `C_0`, or `None` when `lambda` is not in `C_0`.
    pub fn depth_in_c0(&self, lambda: &WeightVec) -> Option<i64> {
        self.in_c0(lambda).then(|| self.depth(lambda))
    }

    pub fn is_dominant(&self, lambda: &WeightVec) -> bool {
        self.simple_roots().all(|a| lambda.pair(a) >= 0)
    }

    /// `X_1(T)`: dominant with `<lambda, alpha^vee> <= p - 1` on simple roots.
    pub fn is_p_restricted(&self, lambda: &WeightVec) -> bool {
        self.simple_roots().all(|a| {
            let v = lambda.pair(a);
            0 <= v && v < self.p
        })
    }
}

impl PartialEq for RootDatum {
    fn eq(&self, other: &Self) -> bool {
        (self.n, self.f, self.p) == (other.n, other.f, other.p)
    }
}

impl Eq for RootDatum {}

impl fmt::Debug for RootDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RootDatum")
            .field("n", &self.n)
            .field("f", &self.f)
            .field("p", &self.p)
            .finish()
    }
}

fn is_prime(p: i64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}
