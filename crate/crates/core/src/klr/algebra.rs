//! The quiver Hecke algebra `H_Q(β)` with products rewritten to the normal
//! form `x^a · τ_σ · e(j)`, where `τ_σ` uses the lexicographically smallest
//! reduced word of `σ` and `e(j)` is the idempotent on the right.
//!
//! Rewriting works on words in the `τ_k`. A reduced word is brought to the
//! canonical one by commutation and braid moves; each braid move leaves a
//! scalar multiple of the word with the triple deleted. A square `τ_k τ_k`
//! becomes a polynomial, which is then pushed to the left past the remaining
//! `τ`s, each crossing possibly leaving a divided difference behind.

use super::perm::Perm;
use super::poly::{fmt_monomial, mono_mul, Monomial, Poly};
use crate::error::{Error, Result};
use crate::linalg::{rat, Rational};
use crate::quiver::OrientedQuiver;
use crate::rootsys::CartanDatum;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::sync::{Arc, RwLock};

/// A PBW basis element `x^mono · τ_perm · e(idem)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KlrWord {
    pub idem: Vec<usize>,
    pub perm: Perm,
    pub mono: Monomial,
}

impl KlrWord {
    /// The idempotent on the left, `σ·idem`.
    pub fn left_idem(&self) -> Vec<usize> {
        self.perm.act(&self.idem)
    }
}

/// Finite rational combination of PBW words; zero coefficients are never
/// stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KlrElement {
    beta: Vec<i64>,
    terms: BTreeMap<KlrWord, Rational>,
}

impl KlrElement {
    pub fn zero(beta: &[i64]) -> Self {
        Self { beta: beta.to_vec(), terms: BTreeMap::new() }
    }

    pub fn beta(&self) -> &[i64] {
        &self.beta
    }

    pub fn terms(&self) -> &BTreeMap<KlrWord, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &KlrWord) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, w: KlrWord, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &KlrElement) -> KlrElement {
        self.add_scaled(other, &Rational::one())
    }

    pub fn sub(&self, other: &KlrElement) -> KlrElement {
        self.add_scaled(other, &-Rational::one())
    }

    pub fn add_scaled(&self, other: &KlrElement, k: &Rational) -> KlrElement {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c * k);
        }
        out
    }

    pub fn scale(&self, k: &Rational) -> KlrElement {
        KlrElement::zero(&self.beta).add_scaled(self, k)
    }
}

/// Homogeneity of an element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase", tag = "kind", content = "value")]
pub enum Degree {
    Zero,
    Homogeneous(i64),
    Inhomogeneous,
}

/// Normal form of `τ_w e(j)` for a fixed `j`: coefficients of `x^a τ_σ e(j)`.
type Nf = BTreeMap<(Monomial, Perm), Rational>;
type Corrections = Vec<(i64, Vec<usize>)>;

pub struct KlrAlgebra {
    quiver: OrientedQuiver,
    beta: Vec<i64>,
    d: usize,
    seqs: Vec<Vec<usize>>,
    seq_index: HashMap<Vec<usize>, usize>,
    nf_cache: RwLock<HashMap<NfKey, Arc<Nf>>>,
    tau_cache: RwLock<HashMap<TauKey, Arc<Nf>>>,
}

/// `(monomial exponents, sequence)` for cached normal forms.
type NfKey = (Vec<u8>, usize);
/// `(letter, permutation, sequence)` for cached `τ_k τ_w e(i)` products.
type TauKey = (usize, Perm, usize);

impl std::fmt::Debug for KlrAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("KlrAlgebra")
            .field("type", &self.quiver.datum().kind().to_string())
            .field("orientation", &self.quiver.orientation_string())
            .field("beta", &self.beta)
            .finish()
    }
}

impl KlrAlgebra {
    pub fn new(quiver: &OrientedQuiver, beta: &[i64]) -> Result<Self> {
        let n = quiver.rank();
        if beta.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: beta.len() });
        }
        if beta.iter().any(|&b| b < 0) {
            return Err(Error::NotInPositiveCone(beta.to_vec()));
        }
        let d: usize = beta.iter().map(|&b| b as usize).sum();
        let seqs = sequences(beta);
        let seq_index = seqs.iter().enumerate().map(|(k, s)| (s.clone(), k)).collect();
        Ok(Self {
            quiver: quiver.clone(),
            beta: beta.to_vec(),
            d,
            seqs,
            seq_index,
            nf_cache: RwLock::new(HashMap::new()),
            tau_cache: RwLock::new(HashMap::new()),
        })
    }

    pub fn quiver(&self) -> &OrientedQuiver {
        &self.quiver
    }

    pub fn datum(&self) -> &CartanDatum {
        self.quiver.datum()
    }

    pub fn beta(&self) -> &[i64] {
        &self.beta
    }

    /// `d = ht β`.
    pub fn d(&self) -> usize {
        self.d
    }

    /// `I^β`, sorted.
    pub fn sequences(&self) -> &[Vec<usize>] {
        &self.seqs
    }

    fn seq_id(&self, seq: &[usize]) -> usize {
        self.seq_index[seq]
    }

    pub fn zero(&self) -> KlrElement {
        KlrElement::zero(&self.beta)
    }

    pub fn basis(&self, idem: Vec<usize>, perm: Perm, mono: Monomial) -> KlrElement {
        let mut e = self.zero();
        e.add_term(KlrWord { idem, perm, mono }, Rational::one());
        e
    }

    fn check_seq(&self, seq: &[usize]) -> Result<()> {
        if !self.seq_index.contains_key(seq) {
            return Err(Error::IndexOutOfRange(format!(
                "sequence {:?} is not in I^beta",
                seq.iter().map(|i| i + 1).collect::<Vec<_>>()
            )));
        }
        Ok(())
    }

    /// `e(i)` for a 0-based sequence.
    pub fn idempotent(&self, seq: &[usize]) -> Result<KlrElement> {
        self.check_seq(seq)?;
        Ok(self.basis(seq.to_vec(), Perm::identity(self.d), vec![0; self.d]))
    }

    /// `1 = Σ_i e(i)`.
    pub fn one(&self) -> KlrElement {
        let mut e = self.zero();
        for s in &self.seqs {
            e.add_term(
                KlrWord { idem: s.clone(), perm: Perm::identity(self.d), mono: vec![0; self.d] },
                Rational::one(),
            );
        }
        e
    }

    pub fn scalar(&self, c: Rational) -> KlrElement {
        self.one().scale(&c)
    }

    /// `x_k = Σ_i x_k e(i)`, 0-based `k`.
    pub fn x(&self, k: usize) -> Result<KlrElement> {
        if k >= self.d {
            return Err(Error::IndexOutOfRange(format!("x_{} with d = {}", k + 1, self.d)));
        }
        let mut mono = vec![0; self.d];
        mono[k] = 1;
        Ok(self.poly_element(&Poly::monomial(mono, Rational::one())))
    }

    /// `f · 1` for a polynomial `f`.
    pub fn poly_element(&self, f: &Poly) -> KlrElement {
        let mut e = self.zero();
        for s in &self.seqs {
            for (m, c) in f.terms() {
                e.add_term(
                    KlrWord { idem: s.clone(), perm: Perm::identity(self.d), mono: m.clone() },
                    c.clone(),
                );
            }
        }
        e
    }

    /// `f · e(i)`.
    pub fn poly_idem(&self, f: &Poly, seq: &[usize]) -> Result<KlrElement> {
        self.check_seq(seq)?;
        let mut e = self.zero();
        for (m, c) in f.terms() {
            e.add_term(
                KlrWord { idem: seq.to_vec(), perm: Perm::identity(self.d), mono: m.clone() },
                c.clone(),
            );
        }
        Ok(e)
    }

    /// `τ_k = Σ_i τ_k e(i)`, 0-based `k`.
    pub fn tau(&self, k: usize) -> Result<KlrElement> {
        if k + 1 >= self.d {
            return Err(Error::IndexOutOfRange(format!("tau_{} with d = {}", k + 1, self.d)));
        }
        let perm = Perm::identity(self.d).left_mul(k);
        let mut e = self.zero();
        for s in &self.seqs {
            e.add_term(
                KlrWord { idem: s.clone(), perm: perm.clone(), mono: vec![0; self.d] },
                Rational::one(),
            );
        }
        Ok(e)
    }

    /// `τ_{w_1} ⋯ τ_{w_m} e(j)` in normal form.
    pub fn tau_word(&self, word: &[usize], seq: &[usize]) -> Result<KlrElement> {
        self.check_seq(seq)?;
        if let Some(&k) = word.iter().find(|&&k| k + 1 >= self.d) {
            return Err(Error::IndexOutOfRange(format!("tau_{} with d = {}", k + 1, self.d)));
        }
        let nf = self.nf_word(word, self.seq_id(seq));
        Ok(self.nf_to_element(&nf, seq, &Poly::one(self.d)))
    }

    fn nf_to_element(&self, nf: &Nf, seq: &[usize], left: &Poly) -> KlrElement {
        let mut e = self.zero();
        for ((m, p), c) in nf {
            for (lm, lc) in left.terms() {
                e.add_term(
                    KlrWord { idem: seq.to_vec(), perm: p.clone(), mono: mono_mul(lm, m) },
                    c * lc,
                );
            }
        }
        e
    }

    // relation data -------------------------------------------------------

    fn q_poly(&self, idem: &[usize], k: usize) -> Poly {
        let (a, b) = (idem[k], idem[k + 1]);
        let d = self.d;
        if a == b {
            Poly::zero(d)
        } else if self.quiver.has_arrow(a, b) {
            Poly::var(d, k + 1).sub(&Poly::var(d, k))
        } else if self.quiver.has_arrow(b, a) {
            Poly::var(d, k).sub(&Poly::var(d, k + 1))
        } else {
            Poly::one(d)
        }
    }

    /// `(τ_{k+1}τ_kτ_{k+1} − τ_kτ_{k+1}τ_k) e(i) = ε e(i)`.
    fn braid_eps(&self, idem: &[usize], k: usize) -> i64 {
        if idem[k] != idem[k + 2] {
            0
        } else if self.quiver.has_arrow(idem[k + 1], idem[k]) {
            1
        } else if self.quiver.has_arrow(idem[k], idem[k + 1]) {
            -1
        } else {
            0
        }
    }

    /// Right-hand idempotent of a suffix `w` of a word ending in `e(j)`.
    fn idem_after(&self, suffix: &[usize], j: usize) -> Vec<usize> {
        Perm::from_word(self.d, suffix).act(&self.seqs[j])
    }

    // word rewriting ------------------------------------------------------

    /// Rewrites a reduced `w`, for which `c` is a left descent, into a word
    /// beginning with `c`, plus braid corrections.
    fn bring_to_front(&self, w: &[usize], c: usize, j: usize) -> (Vec<usize>, Corrections) {
        let a = w[0];
        if a == c {
            return (w.to_vec(), Vec::new());
        }
        let (t1, corr1) = self.bring_to_front(&w[1..], c, j);
        let lift = |corr: Corrections, prefix: &[usize]| -> Corrections {
            corr.into_iter()
                .map(|(k, cw)| (k, prefix.iter().copied().chain(cw).collect()))
                .collect()
        };
        if a.abs_diff(c) > 1 {
            let mut word = vec![c, a];
            word.extend_from_slice(&t1[1..]);
            return (word, lift(corr1, &[a]));
        }
        let (t2, corr2) = self.bring_to_front(&t1[1..], a, j);
        let r2 = &t2[1..];
        let mut corrections = lift(corr1, &[a]);
        corrections.extend(lift(corr2, &[a, c]));
        let k = a.min(c);
        let eps = self.braid_eps(&self.idem_after(r2, j), k);
        if eps != 0 {
            // τ_{k+1}τ_kτ_{k+1} = τ_kτ_{k+1}τ_k + ε, and the reverse with −ε
            let sign = if a == k + 1 { eps } else { -eps };
            corrections.push((sign, r2.to_vec()));
        }
        let mut word = vec![c, a, c];
        word.extend_from_slice(r2);
        (word, corrections)
    }

    /// Rewrites a reduced word into the canonical word of its permutation.
    fn canonicalize(&self, w: &[usize], j: usize) -> (Vec<usize>, Corrections) {
        if w.is_empty() {
            return (Vec::new(), Vec::new());
        }
        let sigma = Perm::from_word(self.d, w);
        let c = (0..self.d - 1).find(|&k| sigma.is_left_descent(k)).expect("nonempty reduced word");
        let (w1, mut corr) = self.bring_to_front(w, c, j);
        let (t, corr2) = self.canonicalize(&w1[1..], j);
        corr.extend(corr2.into_iter().map(|(k, cw)| (k, std::iter::once(c).chain(cw).collect())));
        let mut word = vec![c];
        word.extend(t);
        (word, corr)
    }

    fn add_nf(out: &mut Nf, nf: &Nf, left: &Poly, scale: &Rational) {
        for ((m, p), c) in nf {
            for (lm, lc) in left.terms() {
                let key = (mono_mul(lm, m), p.clone());
                let v = c * lc * scale;
                let e = out.entry(key.clone()).or_insert_with(Rational::zero);
                *e += v;
                if e.is_zero() {
                    out.remove(&key);
                }
            }
        }
    }

    /// Normal form of `τ_{w_1} ⋯ τ_{w_m} e(j)`.
    fn nf_word(&self, w: &[usize], j: usize) -> Arc<Nf> {
        let key = (w.iter().map(|&k| k as u8).collect::<Vec<u8>>(), j);
        if let Some(hit) = self.nf_cache.read().expect("cache lock").get(&key) {
            return hit.clone();
        }
        let result = if w.is_empty() {
            let mut nf = Nf::new();
            nf.insert((vec![0; self.d], Perm::identity(self.d)), Rational::one());
            nf
        } else {
            let rest = self.nf_word(&w[1..], j);
            let c = w[0];
            let mut out = Nf::new();
            for ((mono, pi), coef) in rest.iter() {
                let lhs = self.tau_times_basis(c, mono, pi, j);
                Self::add_nf(&mut out, &lhs, &Poly::one(self.d), coef);
            }
            out
        };
        let result = Arc::new(result);
        self.nf_cache.write().expect("cache lock").insert(key, result.clone());
        result
    }

    /// `τ_c · x^a τ_π e(j)` in normal form.
    fn tau_times_basis(&self, c: usize, mono: &Monomial, pi: &Perm, j: usize) -> Nf {
        let f = Poly::monomial(mono.clone(), Rational::one());
        let inner = pi.act(&self.seqs[j]);
        let mut out = Nf::new();
        Self::add_nf(&mut out, &self.tau_times_perm(c, pi, j), &f.swap(c), &Rational::one());
        if inner[c] == inner[c + 1] {
            let dd = f.divided_difference(c);
            let mut unit = Nf::new();
            unit.insert((vec![0; self.d], pi.clone()), Rational::one());
            Self::add_nf(&mut out, &unit, &dd, &-Rational::one());
        }
        out
    }

    /// `τ_c · τ_π e(j)` in normal form.
    fn tau_times_perm(&self, c: usize, pi: &Perm, j: usize) -> Arc<Nf> {
        let key = (c, pi.clone(), j);
        if let Some(hit) = self.tau_cache.read().expect("cache lock").get(&key) {
            return hit.clone();
        }
        let cw = pi.canonical_word();
        let mut out = Nf::new();
        let one = Poly::one(self.d);
        if !pi.is_left_descent(c) {
            let mut word = vec![c];
            word.extend_from_slice(&cw);
            let (can, corr) = self.canonicalize(&word, j);
            out.insert((vec![0; self.d], Perm::from_word(self.d, &can)), Rational::one());
            for (k, w) in corr {
                Self::add_nf(&mut out, &self.nf_word(&w, j), &one, &rat(k));
            }
        } else {
            let (w1, corr) = self.bring_to_front(&cw, c, j);
            let r = &w1[1..];
            let q = self.q_poly(&self.idem_after(r, j), c);
            if !q.is_zero() {
                Self::add_nf(&mut out, &self.nf_word(r, j), &q, &Rational::one());
            }
            for (k, w) in corr {
                let mut full = vec![c];
                full.extend(w);
                Self::add_nf(&mut out, &self.nf_word(&full, j), &one, &rat(k));
            }
        }
        let out = Arc::new(out);
        self.tau_cache.write().expect("cache lock").insert(key, out.clone());
        out
    }

    /// `τ_w · f e(i) = Σ g · τ_{w′} e(i)`, with `w′` running over subwords
    /// of `w` and `i` the idempotent to the right of `f`.
    fn push_poly_left(&self, word: &[usize], f: &Poly, idem: &[usize]) -> BTreeMap<Vec<usize>, Poly> {
        let mut states: BTreeMap<Vec<usize>, (Poly, Vec<usize>)> = BTreeMap::new();
        states.insert(Vec::new(), (f.clone(), idem.to_vec()));
        for &c in word.iter().rev() {
            let mut next: BTreeMap<Vec<usize>, (Poly, Vec<usize>)> = BTreeMap::new();
            for (kept, (g, right)) in states {
                let mut k2 = vec![c];
                k2.extend_from_slice(&kept);
                let mut swapped = right.clone();
                swapped.swap(c, c + 1);
                merge_state(&mut next, k2, g.swap(c), swapped);
                if right[c] == right[c + 1] {
                    let dd = g.divided_difference(c).scale(&-Rational::one());
                    merge_state(&mut next, kept, dd, right);
                }
            }
            states = next;
        }
        states
            .into_iter()
            .filter(|(_, (g, _))| !g.is_zero())
            .map(|(k, (g, _))| (k, g))
            .collect()
    }

    // public algebra operations ------------------------------------------

    /// Product in normal form.
    pub fn multiply(&self, u: &KlrElement, v: &KlrElement) -> Result<KlrElement> {
        if u.beta != self.beta || v.beta != self.beta {
            let other = if u.beta != self.beta { &u.beta } else { &v.beta };
            return Err(Error::BetaMismatch(self.beta.clone(), other.clone()));
        }
        let mut out = self.zero();
        // group v by left idempotent so each u-term only meets matching terms
        let mut by_left: HashMap<Vec<usize>, Vec<(&KlrWord, &Rational)>> = HashMap::new();
        for (w, c) in &v.terms {
            by_left.entry(w.left_idem()).or_default().push((w, c));
        }
        for (a, ca) in &u.terms {
            let Some(matches) = by_left.get(&a.idem) else { continue };
            let sigma_word = a.perm.canonical_word();
            for (b, cb) in matches {
                let xb = Poly::monomial(b.mono.clone(), Rational::one());
                let j = self.seq_id(&b.idem);
                let pi_word = b.perm.canonical_word();
                for (kept, g) in self.push_poly_left(&sigma_word, &xb, &a.idem) {
                    let left = g.mul_monomial(&a.mono);
                    let mut full = kept;
                    full.extend_from_slice(&pi_word);
                    let nf = self.nf_word(&full, j);
                    let coef = ca * *cb;
                    for ((m, p), c) in nf.iter() {
                        for (lm, lc) in left.terms() {
                            out.add_term(
                                KlrWord { idem: b.idem.clone(), perm: p.clone(), mono: mono_mul(lm, m) },
                                c * lc * &coef,
                            );
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn multiply_all(&self, factors: &[KlrElement]) -> Result<KlrElement> {
        let mut acc = self.one();
        for f in factors {
            acc = self.multiply(&acc, f)?;
        }
        Ok(acc)
    }

    /// `deg τ_σ e(j) = Σ −a_{i_k i_{k+1}}` along the canonical word.
    pub fn perm_degree(&self, perm: &Perm, idem: &[usize]) -> i64 {
        let d = self.datum();
        let mut right = idem.to_vec();
        let mut deg = 0;
        for &k in perm.canonical_word().iter().rev() {
            deg -= d.cartan_entry(right[k], right[k + 1]);
            right.swap(k, k + 1);
        }
        deg
    }

    pub fn word_degree(&self, w: &KlrWord) -> i64 {
        2 * w.mono.iter().map(|&e| i64::from(e)).sum::<i64>() + self.perm_degree(&w.perm, &w.idem)
    }

    pub fn degree(&self, u: &KlrElement) -> Degree {
        let mut it = u.terms.keys().map(|w| self.word_degree(w));
        match it.next() {
            None => Degree::Zero,
            Some(d) => {
                if it.all(|e| e == d) {
                    Degree::Homogeneous(d)
                } else {
                    Degree::Inhomogeneous
                }
            }
        }
    }

    /// Every PBW word of degree `k`.
    pub fn pbw_basis(&self, k: i64) -> Vec<KlrWord> {
        let mut out = Vec::new();
        for s in &self.seqs {
            for p in Perm::all(self.d) {
                let rest = k - self.perm_degree(&p, s);
                if rest < 0 || rest % 2 != 0 {
                    continue;
                }
                for m in super::poly::monomials_of_degree(self.d, (rest / 2) as u32) {
                    out.push(KlrWord { idem: s.clone(), perm: p.clone(), mono: m });
                }
            }
        }
        out.sort();
        out
    }

    /// `τ_{σ} · x^a e(j)`: the right-handed PBW element.
    pub fn right_pbw(&self, word: &KlrWord) -> KlrElement {
        let j = self.seq_id(&word.idem);
        let f = Poly::monomial(word.mono.clone(), Rational::one());
        let mut out = self.zero();
        for (kept, g) in self.push_poly_left(&word.perm.canonical_word(), &f, &word.idem) {
            let nf = self.nf_word(&kept, j);
            for ((m, p), c) in nf.iter() {
                for (lm, lc) in g.terms() {
                    out.add_term(
                        KlrWord { idem: word.idem.clone(), perm: p.clone(), mono: mono_mul(lm, m) },
                        c * lc,
                    );
                }
            }
        }
        out
    }

    /// The anti-involution fixing every `e(i)`, `x_k`, `τ_k` and reversing
    /// products.
    pub fn anti_involution(&self, u: &KlrElement) -> Result<KlrElement> {
        let mut out = self.zero();
        for (w, c) in &u.terms {
            // x^a τ_{k_1} ⋯ τ_{k_m} e(j) ↦ e(j) τ_{k_m} ⋯ τ_{k_1} x^a
            let mut rev = w.perm.canonical_word();
            rev.reverse();
            let e = self.idempotent(&w.idem)?;
            let left_seq = w.left_idem();
            let taus = self.tau_word(&rev, &left_seq)?;
            let x = self.poly_idem(&Poly::monomial(w.mono.clone(), Rational::one()), &left_seq)?;
            let t = self.multiply(&self.multiply(&e, &taus)?, &x)?;
            out = out.add_scaled(&t, c);
        }
        Ok(out)
    }

    /// Whether `u` commutes with every `e(i)`, `x_k` and `τ_k`.
    pub fn is_central(&self, u: &KlrElement) -> Result<bool> {
        let mut gens = Vec::new();
        for s in &self.seqs {
            gens.push(self.idempotent(s)?);
        }
        for k in 0..self.d {
            gens.push(self.x(k)?);
        }
        for k in 0..self.d.saturating_sub(1) {
            gens.push(self.tau(k)?);
        }
        for g in gens {
            if self.multiply(&g, u)? != self.multiply(u, &g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    // dumps ---------------------------------------------------------------

    /// One line per term, in canonical order.
    pub fn dump_text(&self, u: &KlrElement) -> String {
        if u.is_zero() {
            return "0\n".into();
        }
        let mut s = String::new();
        for (w, c) in &u.terms {
            let mut parts = vec![c.to_string()];
            let m = fmt_monomial(&w.mono);
            if !m.is_empty() {
                parts.push(m);
            }
            let word = w.perm.canonical_word();
            if !word.is_empty() {
                let t: Vec<String> = word.iter().map(|k| format!("t{}", k + 1)).collect();
                parts.push(t.join("*"));
            }
            let e: Vec<String> = w.idem.iter().map(|i| (i + 1).to_string()).collect();
            parts.push(format!("e({})", e.join(",")));
            let _ = writeln!(s, "{}", parts.join(" * "));
        }
        s
    }

    pub fn dump_json(&self, u: &KlrElement) -> KlrElementJson {
        KlrElementJson {
            beta: u.beta.clone(),
            degree: self.degree(u),
            terms: u
                .terms
                .iter()
                .map(|(w, c)| KlrTermJson {
                    coeff: c.to_string(),
                    mono: w.mono.clone(),
                    word: w.perm.canonical_word().iter().map(|k| k + 1).collect(),
                    idem: w.idem.iter().map(|i| i + 1).collect(),
                })
                .collect(),
        }
    }
}

fn merge_state(
    states: &mut BTreeMap<Vec<usize>, (Poly, Vec<usize>)>,
    kept: Vec<usize>,
    g: Poly,
    right: Vec<usize>,
) {
    if g.is_zero() {
        return;
    }
    match states.get_mut(&kept) {
        Some((h, _)) => *h = h.add(&g),
        None => {
            states.insert(kept, (g, right));
        }
    }
}

/// Distinct arrangements of the multiset `{i^{β_i}}`, sorted.
pub fn sequences(beta: &[i64]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let d: i64 = beta.iter().sum();
    let mut rest = beta.to_vec();
    let mut cur = Vec::with_capacity(d as usize);
    fn rec(rest: &mut Vec<i64>, cur: &mut Vec<usize>, d: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for i in 0..rest.len() {
            if rest[i] > 0 {
                rest[i] -= 1;
                cur.push(i);
                rec(rest, cur, d, out);
                cur.pop();
                rest[i] += 1;
            }
        }
    }
    rec(&mut rest, &mut cur, d as usize, &mut out);
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KlrTermJson {
    pub coeff: String,
    pub mono: Vec<u32>,
    pub word: Vec<usize>,
    pub idem: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KlrElementJson {
    pub beta: Vec<i64>,
    pub degree: Degree,
    pub terms: Vec<KlrTermJson>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(label: &str, orientation: &str, beta: &[i64]) -> KlrAlgebra {
        let q = OrientedQuiver::parse(CartanDatum::parse(label).unwrap(), orientation).unwrap();
        KlrAlgebra::new(&q, beta).unwrap()
    }

    #[test]
    fn tau_square_a2() {
        let h = alg("A2", "1>2", &[1, 1]);
        let e12 = h.idempotent(&[0, 1]).unwrap();
        let t = h.tau(0).unwrap();
        let lhs = h.multiply_all(&[t.clone(), t, e12.clone()]).unwrap();
        let rhs = h.multiply(&h.x(1).unwrap().sub(&h.x(0).unwrap()), &e12).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(h.dump_text(&lhs), "1 * x2 * e(1,2)\n-1 * x1 * e(1,2)\n");
    }

    #[test]
    fn nil_hecke_commutation() {
        let h = alg("A1", "", &[2]);
        let e = h.idempotent(&[0, 0]).unwrap();
        let lhs = h.multiply_all(&[h.tau(0).unwrap(), h.x(1).unwrap(), e.clone()]).unwrap();
        let rhs = h
            .multiply_all(&[h.x(0).unwrap(), h.tau(0).unwrap(), e.clone()])
            .unwrap()
            .add(&e);
        assert_eq!(lhs, rhs);
        let sq = h.multiply(&h.tau(0).unwrap(), &h.tau(0).unwrap()).unwrap();
        assert!(sq.is_zero());
    }

    #[test]
    fn orthogonal_idempotents() {
        let h = alg("A2", "1>2", &[1, 1]);
        let a = h.idempotent(&[0, 1]).unwrap();
        let b = h.idempotent(&[1, 0]).unwrap();
        assert!(h.multiply(&a, &b).unwrap().is_zero());
        assert_eq!(h.multiply(&a, &a).unwrap(), a);
        assert!(h.idempotent(&[0, 0]).is_err());
    }

    #[test]
    fn degrees() {
        let h = alg("A1", "", &[2]);
        assert_eq!(h.degree(&h.x(0).unwrap()), Degree::Homogeneous(2));
        assert_eq!(h.degree(&h.tau(0).unwrap()), Degree::Homogeneous(-2));
        assert_eq!(h.degree(&h.one()), Degree::Homogeneous(0));
        assert_eq!(h.degree(&h.zero()), Degree::Zero);
        assert_eq!(h.degree(&h.one().add(&h.x(0).unwrap())), Degree::Inhomogeneous);
        let h = alg("A2", "1>2", &[1, 1]);
        assert_eq!(h.degree(&h.tau(0).unwrap()), Degree::Homogeneous(1));
    }

    #[test]
    fn braid_relation_sign() {
        // i = (1, 2, 1) with 1 → 2: (τ2τ1τ2 − τ1τ2τ1) e(i) = −e(i)
        let h = alg("A2", "1>2", &[2, 1]);
        let i = [0, 1, 0];
        let a = h.tau_word(&[1, 0, 1], &i).unwrap();
        let b = h.tau_word(&[0, 1, 0], &i).unwrap();
        assert_eq!(a.sub(&b), h.idempotent(&i).unwrap().scale(&rat(-1)));
        let h = alg("A2", "2>1", &[2, 1]);
        let a = h.tau_word(&[1, 0, 1], &i).unwrap();
        let b = h.tau_word(&[0, 1, 0], &i).unwrap();
        assert_eq!(a.sub(&b), h.idempotent(&i).unwrap());
    }

    #[test]
    fn beta_mismatch() {
        let h = alg("A2", "1>2", &[1, 1]);
        let g = alg("A2", "1>2", &[2, 0]);
        assert!(matches!(h.multiply(&h.one(), &g.one()), Err(Error::BetaMismatch(..))));
    }

    #[test]
    fn sequence_enumeration() {
        assert_eq!(sequences(&[1, 1]), vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(sequences(&[2, 1]).len(), 3);
        assert_eq!(sequences(&[0, 0]), vec![Vec::<usize>::new()]);
    }
}
