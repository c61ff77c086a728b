use super::rep::{euler_form, indecomposable, rep_space_dim, QuiverRep};
use crate::arq::ArQuiver;
use crate::error::{Error, Result};
use crate::lweight::{l_dominance_leq, LWeight};
use crate::quiver::OrientedQuiver;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

/// A Kostant partition `m` of `β`: multiplicities indexed by positive-root
/// index.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KostantPartition {
    mult: Vec<u32>,
    beta: Vec<i64>,
}

impl KostantPartition {
    /// Builds a partition from multiplicities, recomputing `β`.
    pub fn new(roots: &[Vec<i64>], mult: Vec<u32>) -> Result<Self> {
        if mult.len() != roots.len() {
            return Err(Error::DimensionMismatch { expected: roots.len(), got: mult.len() });
        }
        let n = roots.first().map_or(0, Vec::len);
        let mut beta = vec![0; n];
        for (r, &m) in mult.iter().enumerate() {
            for (b, a) in beta.iter_mut().zip(&roots[r]) {
                *b += i64::from(m) * a;
            }
        }
        Ok(Self { mult, beta })
    }

    /// From `(root, multiplicity)` pairs in α-coordinates.
    pub fn from_pairs(roots: &[Vec<i64>], pairs: &[(Vec<i64>, u32)]) -> Result<Self> {
        let mut mult = vec![0; roots.len()];
        for (alpha, m) in pairs {
            let r = roots
                .iter()
                .position(|x| x == alpha)
                .ok_or_else(|| Error::NotPositiveRoot(alpha.clone()))?;
            mult[r] += m;
        }
        Self::new(roots, mult)
    }

    pub fn mult(&self) -> &[u32] {
        &self.mult
    }

    pub fn multiplicity(&self, r: usize) -> u32 {
        self.mult[r]
    }

    pub fn beta(&self) -> &[i64] {
        &self.beta
    }

    /// Number of summands `Σ m_α`.
    pub fn parts(&self) -> u32 {
        self.mult.iter().sum()
    }

    /// Sorted `(root, multiplicity)` pairs with nonzero multiplicity.
    pub fn pairs(&self, roots: &[Vec<i64>]) -> Vec<(Vec<i64>, u32)> {
        let mut v: Vec<(Vec<i64>, u32)> = self
            .mult
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(r, &m)| (roots[r].clone(), m))
            .collect();
        v.sort();
        v
    }

    pub fn to_json(&self, roots: &[Vec<i64>]) -> KostantPartitionJson {
        KostantPartitionJson { beta: self.beta.clone(), parts: self.pairs(roots) }
    }

    pub fn label(&self, roots: &[Vec<i64>]) -> String {
        let parts: Vec<String> = self
            .pairs(roots)
            .into_iter()
            .map(|(a, m)| {
                let c: Vec<String> = a.iter().map(ToString::to_string).collect();
                if m == 1 {
                    format!("[{}]", c.join(","))
                } else {
                    format!("{m}[{}]", c.join(","))
                }
            })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KostantPartitionJson {
    pub beta: Vec<i64>,
    pub parts: Vec<(Vec<i64>, u32)>,
}

/// `KP(β)`, sorted.
pub fn enumerate_kp(roots: &[Vec<i64>], beta: &[i64]) -> Result<Vec<KostantPartition>> {
    let n = roots.first().map_or(beta.len(), Vec::len);
    if beta.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: beta.len() });
    }
    if beta.iter().any(|&b| b < 0) {
        return Err(Error::NotInPositiveCone(beta.to_vec()));
    }
    let mut out = Vec::new();
    let mut mult = vec![0u32; roots.len()];
    fn rec(k: usize, rest: &mut [i64], roots: &[Vec<i64>], mult: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest.iter().all(|&b| b == 0) {
            out.push(mult.clone());
            return;
        }
        if k == roots.len() {
            return;
        }
        let max = roots[k]
            .iter()
            .zip(rest.iter())
            .filter(|(a, _)| **a > 0)
            .map(|(a, b)| b / a)
            .min()
            .unwrap_or(0);
        for c in (0..=max).rev() {
            for (r, a) in rest.iter_mut().zip(&roots[k]) {
                *r -= c * a;
            }
            mult[k] = c as u32;
            rec(k + 1, rest, roots, mult, out);
            for (r, a) in rest.iter_mut().zip(&roots[k]) {
                *r += c * a;
            }
        }
        mult[k] = 0;
    }
    rec(0, &mut beta.to_vec(), roots, &mut mult, &mut out);
    let mut kps: Vec<KostantPartition> = out
        .into_iter()
        .map(|m| KostantPartition { mult: m, beta: beta.to_vec() })
        .collect();
    kps.sort();
    Ok(kps)
}

/// The indecomposables `M(α)` of a quiver together with the table
/// `hom(M(α), M(γ))`. Built once and shared read-only.
#[derive(Debug, Clone)]
pub struct HomTable {
    quiver: OrientedQuiver,
    indecomposables: Vec<QuiverRep>,
    hom: Vec<Vec<u32>>,
}

impl HomTable {
    pub fn new(quiver: &OrientedQuiver) -> Result<Self> {
        let roots = quiver.datum().positive_roots().to_vec();
        let indecomposables: Vec<QuiverRep> = roots
            .iter()
            .map(|r| indecomposable(quiver, r))
            .collect::<Result<_>>()?;
        let hom: Vec<Vec<u32>> = (0..roots.len())
            .into_par_iter()
            .map(|a| {
                (0..roots.len())
                    .map(|b| indecomposables[a].hom_dim(&indecomposables[b]) as u32)
                    .collect()
            })
            .collect();
        Ok(Self { quiver: quiver.clone(), indecomposables, hom })
    }

    pub fn quiver(&self) -> &OrientedQuiver {
        &self.quiver
    }

    pub fn roots(&self) -> &[Vec<i64>] {
        self.quiver.datum().positive_roots()
    }

    pub fn indecomposable(&self, r: usize) -> &QuiverRep {
        &self.indecomposables[r]
    }

    /// `hom(M(α_a), M(α_b))` by root index.
    pub fn hom(&self, a: usize, b: usize) -> u32 {
        self.hom[a][b]
    }

    /// `ext¹(M(α_a), M(α_b))` via the Euler form.
    pub fn ext1(&self, a: usize, b: usize) -> i64 {
        i64::from(self.hom[a][b]) - euler_form(&self.quiver, &self.roots()[a], &self.roots()[b])
    }

    /// `M(m) = ⊕ M(α)^{⊕ m_α}` as explicit matrices.
    pub fn direct_sum(&self, m: &KostantPartition) -> QuiverRep {
        let mut out = QuiverRep::zero(&self.quiver);
        for (r, &k) in m.mult().iter().enumerate() {
            for _ in 0..k {
                out = out.direct_sum(&self.indecomposables[r]);
            }
        }
        out
    }

    /// `(hom(M(γ), M(m)))_γ`, additive in `m`.
    pub fn hom_vector(&self, m: &KostantPartition) -> Vec<u64> {
        (0..self.hom.len())
            .map(|g| {
                m.mult()
                    .iter()
                    .enumerate()
                    .map(|(r, &k)| u64::from(k) * u64::from(self.hom[g][r]))
                    .sum()
            })
            .collect()
    }

    /// `hom(M(m), M(m′))` from the table.
    pub fn hom_between(&self, m: &KostantPartition, mp: &KostantPartition) -> u64 {
        let mut total = 0u64;
        for (a, &x) in m.mult().iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (b, &y) in mp.mult().iter().enumerate() {
                total += u64::from(x) * u64::from(y) * u64::from(self.hom[a][b]);
            }
        }
        total
    }

    pub fn ext1_between(&self, m: &KostantPartition, mp: &KostantPartition) -> i64 {
        self.hom_between(m, mp) as i64 - euler_form(&self.quiver, m.beta(), mp.beta())
    }

    /// Degeneration order: `m ≤ m′` iff `O_{m′} ⊂ closure(O_m)`, decided by
    /// `hom(X, M(m)) ≤ hom(X, M(m′))` for every indecomposable `X`.
    pub fn kp_leq(&self, m: &KostantPartition, mp: &KostantPartition) -> Result<bool> {
        if m.beta() != mp.beta() {
            return Err(Error::BetaMismatch(m.beta().to_vec(), mp.beta().to_vec()));
        }
        Ok(self
            .hom_vector(m)
            .iter()
            .zip(self.hom_vector(mp))
            .all(|(a, b)| *a <= b))
    }

    /// `dim O_m = dim G_β − dim Aut(M(m))`.
    pub fn orbit_dim(&self, m: &KostantPartition) -> i64 {
        let g: i64 = m.beta().iter().map(|b| b * b).sum();
        g - self.hom_between(m, m) as i64
    }

    pub fn rep_space_dim(&self, beta: &[i64]) -> i64 {
        rep_space_dim(&self.quiver, beta)
    }
}

/// `(KP(β), ≤)` with its comparability matrix.
#[derive(Debug, Clone)]
pub struct KpPoset {
    pub beta: Vec<i64>,
    pub elements: Vec<KostantPartition>,
    /// `leq[a][b]` iff `elements[a] ≤ elements[b]`.
    pub leq: Vec<Vec<bool>>,
}

impl KpPoset {
    pub fn new(table: &HomTable, beta: &[i64]) -> Result<Self> {
        let elements = enumerate_kp(table.roots(), beta)?;
        let hv: Vec<Vec<u64>> = elements.iter().map(|m| table.hom_vector(m)).collect();
        let leq = hv
            .iter()
            .map(|a| hv.iter().map(|b| a.iter().zip(b).all(|(x, y)| x <= y)).collect())
            .collect();
        Ok(Self { beta: beta.to_vec(), elements, leq })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Index of `m`.
    pub fn position(&self, m: &KostantPartition) -> Option<usize> {
        self.elements.binary_search(m).ok()
    }

    /// Cover relations `a ⋖ b`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a == b || !self.leq[a][b] {
                    continue;
                }
                let between = (0..n).any(|c| c != a && c != b && self.leq[a][c] && self.leq[c][b]);
                if !between {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Elements below every other element.
    pub fn minima(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&a| (0..self.len()).all(|b| self.leq[a][b]))
            .collect()
    }

    pub fn is_partial_order(&self) -> bool {
        let n = self.len();
        (0..n).all(|a| self.leq[a][a])
            && (0..n).all(|a| (0..n).all(|b| a == b || !(self.leq[a][b] && self.leq[b][a])))
            && (0..n).all(|a| {
                (0..n).all(|b| !self.leq[a][b] || (0..n).all(|c| !self.leq[b][c] || self.leq[a][c]))
            })
    }

    /// Hasse diagram as DOT; nodes labeled by partitions and orbit dimensions.
    pub fn to_dot(&self, table: &HomTable) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "digraph KP {{");
        let beta: Vec<String> = self.beta.iter().map(ToString::to_string).collect();
        let _ = writeln!(s, "  label=\"KP([{}])\";", beta.join(","));
        for (k, m) in self.elements.iter().enumerate() {
            let _ = writeln!(
                s,
                "  m{k} [label=\"{}\\ndim O = {}\"];",
                m.label(table.roots()),
                table.orbit_dim(m)
            );
        }
        for (a, b) in self.covers() {
            let _ = writeln!(s, "  m{a} -> m{b};");
        }
        s.push_str("}\n");
        s
    }
}

/// `f(m) = Σ m_α ϖ_{φ(α)}`.
pub fn f_bijection(ar: &ArQuiver, m: &KostantPartition) -> LWeight {
    let mut w = LWeight::zero();
    for (r, &k) in m.mult().iter().enumerate() {
        let v = ar.phi_index(r);
        w.add_term(v.i, v.p, i64::from(k));
    }
    w
}

/// Inverse of [`f_bijection`] on `lP⁺_Q`.
pub fn f_inverse(ar: &ArQuiver, lambda: &LWeight) -> Result<KostantPartition> {
    let roots = ar.datum().positive_roots();
    let mut mult = vec![0u32; roots.len()];
    for (i, p, c) in lambda.terms() {
        let r = ar
            .root_at(crate::arq::ArVertex::new(i, p))
            .ok_or(Error::OutsideArQuiver { i, p })?;
        if c < 0 {
            return Err(Error::NotInPositiveCone(vec![c]));
        }
        mult[r] = c as u32;
    }
    KostantPartition::new(roots, mult)
}

/// How `f` relates `(KP(β), ≤)` to `(lP⁺_{Q,β}, ≤)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct OrderReport {
    pub elements: usize,
    pub comparable_pairs: usize,
    /// Pairs `m ≤ m′` with `f(m) ≰ f(m′)`.
    pub forward_failures: Vec<(usize, usize)>,
    /// Pairs with `f(m) ≤ f(m′)` but `m ≰ m′`.
    pub converse_failures: Vec<(usize, usize)>,
}

impl OrderReport {
    pub fn preserves(&self) -> bool {
        self.forward_failures.is_empty()
    }

    pub fn reflects(&self) -> bool {
        self.converse_failures.is_empty()
    }
}

pub fn f_order_report(ar: &ArQuiver, poset: &KpPoset) -> OrderReport {
    let d = ar.datum();
    let images: Vec<LWeight> = poset.elements.iter().map(|m| f_bijection(ar, m)).collect();
    let mut rep = OrderReport { elements: poset.len(), ..Default::default() };
    for a in 0..poset.len() {
        for b in 0..poset.len() {
            let kp = poset.leq[a][b];
            let lw = l_dominance_leq(d, &images[a], &images[b]).is_some();
            if kp {
                rep.comparable_pairs += 1;
            }
            if kp && !lw {
                rep.forward_failures.push((a, b));
            }
            if lw && !kp {
                rep.converse_failures.push((a, b));
            }
        }
    }
    rep
}
