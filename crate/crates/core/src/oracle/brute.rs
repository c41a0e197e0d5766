//! Naive reference implementations. Nothing here uses the per-`n` tables,
//! the scaled-point fast paths or any caching across calls.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::affine_weyl::{ExtAffineElt, Generator};
use crate::error::{Error, Result};
use crate::herzig::TameParam;
use crate::root_data::{FiniteWeylElt, Root, RootDatum, WeightVec};
use crate::weights_dl::{DLPresentation, SerreWeight};

/// Longest element the oracle will expand into reduced words.
pub const ORACLE_MAX_LENGTH: usize = 10;

fn generators(n: usize, f: usize) -> Vec<ExtAffineElt> {
    Generator::all(n, f).map(|g| g.element(n, f)).collect()
}

/// Every reduced word of `w`, as `(s_1, ..., s_k)` with `w = s_1 ... s_k delta`,
/// together with the length-zero part `delta`.
pub fn brute_reduced_words(
    w: &ExtAffineElt,
    max_length: usize,
) -> Result<(Vec<Vec<ExtAffineElt>>, ExtAffineElt)> {
    let len = w.length();
    if len > max_length {
        return Err(Error::Budget {
            what: "oracle reduced words",
            needed: len,
            budget: max_length,
        });
    }
    let gens = generators(w.n(), w.f());
    let mut words = Vec::new();
    let mut delta = None;
    let mut stack = vec![(w.clone(), Vec::new())];
    while let Some((x, prefix)) = stack.pop() {
        let lx = x.length();
        if lx == 0 {
            delta = Some(x);
            words.push(prefix);
            continue;
        }
        for g in &gens {
            let y = g.mul(&x);
            if y.length() < lx {
                let mut next = prefix.clone();
                next.push(g.clone());
                stack.push((y, next));
            }
        }
    }
    Ok((words, delta.expect("every element has a reduced word")))
}

fn subword_products(word: &[ExtAffineElt], delta: &ExtAffineElt) -> HashSet<ExtAffineElt> {
    // Products s_{i_1} ... s_{i_m} for i_1 < ... < i_m, built right to left.
    let mut acc: HashSet<ExtAffineElt> = HashSet::from([delta.clone()]);
    for s in word.iter().rev() {
        let with: Vec<ExtAffineElt> = acc.iter().map(|x| s.mul(x)).collect();
        acc.extend(with);
    }
    acc
}

/// Bruhat order by the subword property, tested against every reduced word
/// of `w`. The words must agree; a disagreement is reported as an error.
pub fn brute_bruhat(u: &ExtAffineElt, w: &ExtAffineElt, max_length: usize) -> Result<bool> {
    let (words, delta) = brute_reduced_words(w, max_length)?;
    let mut answer = None;
    for word in &words {
        let here = subword_products(word, &delta).contains(u);
        match answer {
            None => answer = Some(here),
            Some(a) if a != here => {
                return Err(Error::Inconclusive(format!(
                    "reduced words of {w} disagree on {u}"
                )))
            }
            _ => {}
        }
    }
    Ok(answer.unwrap_or(false))
}

/// `W~_{<= w}` as the union of subword products over all reduced words.
pub fn brute_lower_interval(w: &ExtAffineElt, max_length: usize) -> Result<HashSet<ExtAffineElt>> {
    let (words, delta) = brute_reduced_words(w, max_length)?;
    let mut out = HashSet::new();
    for word in &words {
        out.extend(subword_products(word, &delta));
    }
    Ok(out)
}

/// `Adm(lambda)` as a union of brute-force lower intervals below the
/// `t_{w(lambda)}`.
pub fn brute_adm(datum: &RootDatum, lambda: &WeightVec) -> Result<HashSet<ExtAffineElt>> {
    let mut out = HashSet::new();
    let mut seen = BTreeSet::new();
    for w in FiniteWeylElt::all(datum.n(), datum.f()) {
        let mu = w.apply(lambda);
        if seen.insert(mu.clone()) {
            let len = ExtAffineElt::translation(mu.clone()).length();
            out.extend(brute_lower_interval(&ExtAffineElt::translation(mu), len)?);
        }
    }
    Ok(out)
}

pub fn brute_adm_eta(datum: &RootDatum) -> Result<HashSet<ExtAffineElt>> {
    brute_adm(datum, &datum.eta())
}

fn positive_roots(n: usize, f: usize) -> Vec<Root> {
    let mut out = Vec::new();
    for j in 0..f {
        for i in 0..n {
            for k in i + 1..n {
                out.push(Root::new(j, i, k));
            }
        }
    }
    out
}

/// `n` times the image of the interior point `eta / n` of the base alcove.
fn sample_point(x: &ExtAffineElt) -> Vec<i64> {
    let (n, f) = (x.n(), x.f());
    let eta_rows: Vec<Vec<i64>> = (0..f).map(|_| (0..n as i64).rev().collect()).collect();
    let eta = WeightVec::from_rows(&eta_rows).expect("shape");
    let img = &x.trans().scale(n as i64) + &x.fin().apply(&eta);
    img.rows().flat_map(|r| r.to_vec()).collect()
}

fn pair(point: &[i64], n: usize, beta: Root) -> i64 {
    point[beta.embedding * n + beta.i] - point[beta.embedding * n + beta.k]
}

/// Partial-sum dominance `a <= b` per embedding, with equal totals.
fn below(a: &[i64], b: &[i64], n: usize) -> bool {
    a.chunks(n).zip(b.chunks(n)).all(|(ra, rb)| {
        let mut s = 0;
        for k in 0..n {
            s += rb[k] - ra[k];
            if s < 0 {
                return false;
            }
        }
        s == 0
    })
}

/// Up-arrow order by breadth-first search over single raising reflections
/// `x -> s_{beta, m} x` (the alcove of `x` lies below the wall
/// `<., beta> = m`). Raising moves only ever add positive multiples of
/// positive roots, so the search keeps below `w` in dominance; translations
/// leaving the box of the given radius make a negative answer inconclusive.
pub fn brute_up(u: &ExtAffineElt, w: &ExtAffineElt, radius: i64) -> Result<bool> {
    if u == w {
        return Ok(true);
    }
    if u.omega_exponents() != w.omega_exponents() {
        return Ok(false);
    }
    let (n, f) = (u.n(), u.f());
    let ni = n as i64;
    let target = sample_point(w);
    let roots = positive_roots(n, f);
    let mut seen: HashSet<ExtAffineElt> = HashSet::from([u.clone()]);
    let mut queue = VecDeque::from([u.clone()]);
    let mut truncated = false;
    while let Some(x) = queue.pop_front() {
        let px = sample_point(&x);
        for &beta in &roots {
            let refl = FiniteWeylElt::reflection(n, f, beta);
            let mut m = pair(&px, n, beta).div_euclid(ni) + 1;
            loop {
                let step = ExtAffineElt::new(beta.to_weight(n, f).scale(m), refl.clone())?;
                let y = step.mul(&x);
                let py = sample_point(&y);
                if !below(&py, &target, n) {
                    break;
                }
                m += 1;
                if y.trans().rows().flatten().any(|t| t.abs() > radius) {
                    truncated = true;
                    continue;
                }
                if &y == w {
                    return Ok(true);
                }
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
    }
    if truncated {
        Err(Error::Inconclusive(format!(
            "raising search from {u} to {w} left the box of radius {radius}"
        )))
    } else {
        Ok(false)
    }
}

fn require_deep(datum: &RootDatum, mu: &WeightVec, what: &'static str) -> Result<()> {
    let shifted = mu - &datum.eta();
    let actual = if datum.in_c0(&shifted) {
        datum.depth(&shifted)
    } else {
        -1
    };
    if actual < datum.h_eta() {
        return Err(Error::Depth {
            what,
            required: datum.h_eta(),
            actual,
        });
    }
    Ok(())
}

/// All offsets with entries in `[-r, r]`.
pub(crate) fn offsets(n: usize, f: usize, r: i64) -> Vec<WeightVec> {
    let len = n * f;
    let mut out = Vec::new();
    let mut digits = vec![-r; len];
    loop {
        let rows: Vec<Vec<i64>> = digits.chunks(n).map(|c| c.to_vec()).collect();
        out.push(WeightVec::from_rows(&rows).expect("shape"));
        let mut i = 0;
        while i < len {
            digits[i] += 1;
            if digits[i] <= r {
                break;
            }
            digits[i] = -r;
            i += 1;
        }
        if i == len {
            return out;
        }
    }
}

fn restricted_candidates(datum: &RootDatum) -> Vec<ExtAffineElt> {
    FiniteWeylElt::all(datum.n(), datum.f())
        .into_iter()
        .map(|w| ExtAffineElt::finite(w).diamond())
        .collect()
}

fn sorted(mut v: Vec<SerreWeight>) -> Vec<SerreWeight> {
    v.sort();
    v.dedup();
    v
}

/// `JH(R)` for an `h_eta`-deep presentation, straight from the criterion
/// `t_omega W~_{<= w_0 w~} subset t_mu s Adm(eta)` over a box of `omega`.
pub fn brute_jh(datum: &RootDatum, r: &DLPresentation) -> Result<Vec<SerreWeight>> {
    require_deep(datum, r.mu(), "oracle Deligne-Lusztig presentation")?;
    brute_jh_unchecked(datum, r)
}

/// [`brute_jh`] without the depth guard; candidates with `omega - eta`
/// outside `C_0` are skipped.
pub fn brute_jh_unchecked(datum: &RootDatum, r: &DLPresentation) -> Result<Vec<SerreWeight>> {
    let adm = brute_adm_eta(datum)?;
    let eta = datum.eta();
    let w0 = ExtAffineElt::finite(FiniteWeylElt::longest(datum.n(), datum.f()));
    let r_inv = r.elt().inverse();
    let mut out = Vec::new();
    for w in restricted_candidates(datum) {
        let lower = brute_lower_interval(&w0.mul(&w), ORACLE_MAX_LENGTH)?;
        for d in offsets(datum.n(), datum.f(), datum.n() as i64) {
            let omega = r.mu() + &d;
            if !datum.in_c0(&(&omega - &eta)) {
                continue;
            }
            let t = r_inv.mul(&ExtAffineElt::translation(omega.clone()));
            if lower.iter().all(|y| adm.contains(&t.mul(y))) {
                out.push(datum.serre_weight_of(&w, &omega)?);
            }
        }
    }
    Ok(sorted(out))
}

fn brute_presentation_set(
    datum: &RootDatum,
    tau: &TameParam,
    member: impl Fn(&ExtAffineElt, &ExtAffineElt) -> Result<bool>,
) -> Result<Vec<SerreWeight>> {
    let eta = datum.eta();
    let mut out = Vec::new();
    for w in restricted_candidates(datum) {
        for d in offsets(datum.n(), datum.f(), datum.n() as i64) {
            let omega = tau.mu() + &d;
            if !datum.in_c0(&(&omega - &eta)) {
                continue;
            }
            let x = ExtAffineElt::translation(-&omega).mul(tau.elt());
            if member(&x, &w)? {
                out.push(datum.serre_weight_of(&w, &omega)?);
            }
        }
    }
    Ok(sorted(out))
}

/// `W?(tau)` from `w~(tau) in t_omega W~_{<= w_0 w~}` over a box of `omega`.
pub fn brute_wset(datum: &RootDatum, tau: &TameParam) -> Result<Vec<SerreWeight>> {
    require_deep(datum, tau.mu(), "oracle tame parameter")?;
    brute_wset_unchecked(datum, tau)
}

/// [`brute_wset`] without the depth guard.
pub fn brute_wset_unchecked(datum: &RootDatum, tau: &TameParam) -> Result<Vec<SerreWeight>> {
    let w0 = ExtAffineElt::finite(FiniteWeylElt::longest(datum.n(), datum.f()));
    brute_presentation_set(datum, tau, |x, w| {
        Ok(brute_lower_interval(&w0.mul(w), ORACLE_MAX_LENGTH)?.contains(x))
    })
}

/// `W_obv(tau)` from `w~(tau) in t_omega W w~`.
pub fn brute_wobv(datum: &RootDatum, tau: &TameParam) -> Result<Vec<SerreWeight>> {
    require_deep(datum, tau.mu(), "oracle tame parameter")?;
    brute_presentation_set(datum, tau, |x, w| {
        Ok(FiniteWeylElt::all(datum.n(), datum.f())
            .into_iter()
            .any(|v| &ExtAffineElt::finite(v).mul(w) == x))
    })
}

/// The covering relation by its definition over the family `R_u`, with
/// Jordan-Hölder sets from [`brute_jh`].
pub fn brute_covers(datum: &RootDatum, kappa: &SerreWeight, sigma: &SerreWeight) -> Result<bool> {
    let d = datum.d_sigma(kappa)?;
    let need = datum.h_eta() + d;
    if kappa.depth(datum) < need {
        return Err(Error::Depth {
            what: "oracle covering weight",
            required: need,
            actual: kappa.depth(datum),
        });
    }
    let pres = datum
        .presentations_of(kappa)
        .into_iter()
        .next()
        .ok_or_else(|| Error::Precondition(format!("{kappa} has no presentation")))?;
    let w_h = ExtAffineElt::finite(FiniteWeylElt::longest(datum.n(), datum.f()))
        .mul(&ExtAffineElt::translation(-&datum.eta()));
    let back = w_h.mul(pres.w1()).inverse().act(&datum.zero());
    for u in FiniteWeylElt::all(datum.n(), datum.f()) {
        let nu = pres.omega() - &u.apply(&back);
        let r = DLPresentation::from_parts(u, nu)?;
        if brute_jh(datum, &r)?.binary_search(sigma).is_err() {
            return Ok(false);
        }
    }
    Ok(true)
}
