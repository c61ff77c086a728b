//! ℓ-weights `Σ c_{i,p} ϖ_{i,p}` with integer spectral exponent `p`, the
//! ℓ-roots `α_{i,p}`, and the ℓ-dominance order.

use crate::arq::{ArQuiver, ArVertex};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rootsys::{CartanDatum, WeightVector};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// Finite-support integer map on `I × ℤ`. Zero coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<[i64; 3]>", try_from = "Vec<[i64; 3]>")]
pub struct LWeight {
    coeffs: BTreeMap<(usize, i64), i64>,
}

/// Coefficients in the ℓ-root basis `α_{i,p}`. Same storage as [`LWeight`].
pub type LRootCombination = LWeight;

impl LWeight {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `ϖ_{i,p}`.
    pub fn fundamental(i: usize, p: i64) -> Self {
        let mut w = Self::zero();
        w.add_term(i, p, 1);
        w
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (usize, i64, i64)>) -> Self {
        let mut w = Self::zero();
        for (i, p, c) in terms {
            w.add_term(i, p, c);
        }
        w
    }

    pub fn add_term(&mut self, i: usize, p: i64, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.coeffs.entry((i, p)).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coeffs.remove(&(i, p));
        }
    }

    pub fn coeff(&self, i: usize, p: i64) -> i64 {
        self.coeffs.get(&(i, p)).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `(i, p, c)` in increasing `(i, p)` order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, i64, i64)> + '_ {
        self.coeffs.iter().map(|(&(i, p), &c)| (i, p, c))
    }

    pub fn support(&self) -> impl Iterator<Item = ArVertex> + '_ {
        self.coeffs.keys().map(|&(i, p)| ArVertex::new(i, p))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|&c| c > 0)
    }

    pub fn add(&self, other: &LWeight) -> LWeight {
        self.add_scaled(other, 1)
    }

    pub fn sub(&self, other: &LWeight) -> LWeight {
        self.add_scaled(other, -1)
    }

    pub fn add_scaled(&self, other: &LWeight, k: i64) -> LWeight {
        let mut out = self.clone();
        for (i, p, c) in other.terms() {
            out.add_term(i, p, k * c);
        }
        out
    }

    fn min_entry(&self) -> Option<(usize, i64, i64)> {
        self.terms().min_by_key(|&(i, p, _)| (p, i))
    }

    fn max_p(&self) -> Option<i64> {
        self.coeffs.keys().map(|&(_, p)| p).max()
    }
}

impl From<LWeight> for Vec<[i64; 3]> {
    fn from(w: LWeight) -> Self {
        w.terms().map(|(i, p, c)| [i as i64 + 1, p, c]).collect()
    }
}

impl TryFrom<Vec<[i64; 3]>> for LWeight {
    type Error = Error;
    fn try_from(v: Vec<[i64; 3]>) -> Result<Self> {
        let mut w = LWeight::zero();
        for [i, p, c] in v {
            if i < 1 {
                return Err(Error::IndexOutOfRange(format!("l-weight vertex {i}")));
            }
            w.add_term((i - 1) as usize, p, c);
        }
        Ok(w)
    }
}

impl fmt::Display for LWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (i, p, c)) in self.terms().enumerate() {
            let sign = if c < 0 { "-" } else if k > 0 { "+" } else { "" };
            let mag = c.abs();
            if mag == 1 {
                write!(f, "{sign}w[{},{p}]", i + 1)?;
            } else {
                write!(f, "{sign}{mag}w[{},{p}]", i + 1)?;
            }
        }
        Ok(())
    }
}

/// `α_{i,p} = ϖ_{i,p+1} + ϖ_{i,p−1} − Σ_{j∼i} ϖ_{j,p}`.
pub fn l_root(datum: &CartanDatum, i: usize, p: i64) -> LWeight {
    let mut w = LWeight::zero();
    w.add_term(i, p + 1, 1);
    w.add_term(i, p - 1, 1);
    for j in datum.neighbors(i) {
        w.add_term(j, p, -1);
    }
    w
}

/// Expands an ℓ-root combination into the `ϖ` basis.
pub fn expand(datum: &CartanDatum, nu: &LRootCombination) -> LWeight {
    let mut out = LWeight::zero();
    for (i, p, c) in nu.terms() {
        out = out.add_scaled(&l_root(datum, i, p), c);
    }
    out
}

/// `cl : ϖ_{i,p} ↦ ϖ_i`.
pub fn cl(datum: &CartanDatum, lambda: &LWeight) -> WeightVector {
    let mut coords = vec![0; datum.rank()];
    for (i, _, c) in lambda.terms() {
        coords[i] += c;
    }
    WeightVector::omega(coords)
}

/// `deg : ϖ_{φ(α)} ↦ α`, α-coordinates. Defined on `lP_Q` only.
pub fn deg(ar: &ArQuiver, lambda: &LWeight) -> Result<Vec<i64>> {
    let d = ar.datum();
    let mut out = vec![0; d.rank()];
    for (i, p, c) in lambda.terms() {
        let r = ar
            .root_at(ArVertex::new(i, p))
            .ok_or(Error::OutsideArQuiver { i, p })?;
        for (o, a) in out.iter_mut().zip(&d.positive_roots()[r]) {
            *o += c * a;
        }
    }
    Ok(out)
}

/// Unique integer expansion `λ̂ = Σ n_{i,p} α_{i,p}`, if `λ̂ ∈ lQ`.
///
/// Each `α_{i,p}` is the only ℓ-root whose lowest entry sits at `(i, p−1)`,
/// so the expansion is read off by sweeping upward in `p`.
pub fn l_root_expand(datum: &CartanDatum, lambda: &LWeight) -> Option<LRootCombination> {
    let mut residual = lambda.clone();
    let mut nu = LRootCombination::zero();
    let top = lambda.max_p()?;
    while let Some((i, p, c)) = residual.min_entry() {
        // the highest entry of any nonzero combination lies strictly above
        // its highest ℓ-root index
        if p + 1 > top - 1 {
            return None;
        }
        nu.add_term(i, p + 1, c);
        residual = residual.add_scaled(&l_root(datum, i, p + 1), -c);
    }
    Some(nu)
}

/// ℓ-dominance: `µ̂ ≤ λ̂` iff `λ̂ − µ̂ ∈ lQ⁺`. Returns the witnessing
/// combination, or `None` when the two are incomparable in this direction.
pub fn l_dominance_leq(datum: &CartanDatum, mu: &LWeight, lambda: &LWeight) -> Option<LRootCombination> {
    let diff = lambda.sub(mu);
    if diff.is_zero() {
        return Some(LRootCombination::zero());
    }
    let nu = l_root_expand(datum, &diff)?;
    nu.is_nonnegative().then_some(nu)
}

/// Membership in `lP_Q`: support inside `Î_Q`.
pub fn in_lp_q(ar: &ArQuiver, lambda: &LWeight) -> bool {
    lambda.support().all(|v| ar.contains(v))
}

/// Membership in `lQ_Q`: support inside `Ĵ_Q`.
pub fn in_lq_q(ar: &ArQuiver, nu: &LRootCombination) -> bool {
    let j: BTreeSet<ArVertex> = ar.j_hat_q().into_iter().collect();
    nu.support().all(|v| j.contains(&v))
}

/// Outcome of comparing `lQ_Q` with `lP_Q ∩ lQ` on the window spanned by `Î_Q`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WindowReport {
    pub p_min: i64,
    pub p_max: i64,
    pub j_hat_q: usize,
    pub kernel_rank: usize,
    /// Every `α_{i,p}` with `(i,p) ∈ Ĵ_Q` lies in `lP_Q`.
    pub roots_in_lp_q: bool,
    pub ok: bool,
}

/// Checks `lQ_Q = lP_Q ∩ lQ`.
///
/// Any `ν̂` with `ν̂ ∈ lP_Q` has its ℓ-root support in `[p_min+1, p_max−1]`,
/// so it suffices to work with the finitely many `α_{i,p}` in that range.
/// `lP_Q ∩ lQ` is then the integer kernel of the projection onto the
/// coordinates outside `Î_Q`; integer kernels are saturated, as is the
/// coordinate lattice on `Ĵ_Q`, so equality follows from containment plus
/// equal rank.
pub fn lrootq_window_check(ar: &ArQuiver) -> WindowReport {
    let d = ar.datum();
    let (p_min, p_max) = ar.p_range();
    let j = ar.j_hat_q();
    let roots_in_lp_q = j.iter().all(|v| in_lp_q(ar, &l_root(d, v.i, v.p)));
    let cols: Vec<ArVertex> = (p_min + 1..p_max)
        .flat_map(|p| (0..d.rank()).map(move |i| ArVertex::new(i, p)))
        .collect();
    let rows: Vec<ArVertex> = (p_min..=p_max)
        .flat_map(|p| (0..d.rank()).map(move |i| ArVertex::new(i, p)))
        .filter(|v| !ar.contains(*v))
        .collect();
    let row_pos: BTreeMap<ArVertex, usize> = rows.iter().enumerate().map(|(k, &v)| (v, k)).collect();
    let mut m = Matrix::zeros(rows.len(), cols.len());
    for (c, v) in cols.iter().enumerate() {
        for (i, p, coeff) in l_root(d, v.i, v.p).terms() {
            if let Some(&r) = row_pos.get(&ArVertex::new(i, p)) {
                m[(r, c)] = crate::linalg::rat(coeff);
            }
        }
    }
    let kernel_rank = cols.len() - m.rank();
    WindowReport {
        p_min,
        p_max,
        j_hat_q: j.len(),
        kernel_rank,
        roots_in_lp_q,
        ok: roots_in_lp_q && kernel_rank == j.len(),
    }
}

/// `(−)* : ϖ_{i,p} ↦ ϖ_{i*, p−h}`.
pub fn dual_lweight(datum: &CartanDatum, lambda: &LWeight) -> LWeight {
    let star = datum.bar_involution_table();
    let h = datum.coxeter_number() as i64;
    LWeight::from_terms(lambda.terms().map(|(i, p, c)| (star[i], p - h, c)))
}

/// `*(−) : ϖ_{i,p} ↦ ϖ_{i*, p+h}`, inverse to [`dual_lweight`].
pub fn dual_lweight_inverse(datum: &CartanDatum, lambda: &LWeight) -> LWeight {
    let star = datum.bar_involution_table();
    let h = datum.coxeter_number() as i64;
    LWeight::from_terms(lambda.terms().map(|(i, p, c)| (star[i], p + h, c)))
}

/// `lP⁺_{Q,β}`: nonnegative ℓ-weights supported on `Î_Q` with `deg = β`,
/// in a canonical order.
pub fn enumerate_lp_plus(ar: &ArQuiver, beta: &[i64]) -> Result<Vec<LWeight>> {
    let d = ar.datum();
    if beta.len() != d.rank() {
        return Err(Error::DimensionMismatch { expected: d.rank(), got: beta.len() });
    }
    if beta.iter().any(|&b| b < 0) {
        return Err(Error::NotInPositiveCone(beta.to_vec()));
    }
    let verts: Vec<(ArVertex, &Vec<i64>)> = ar
        .vertices()
        .iter()
        .map(|&v| (v, &d.positive_roots()[ar.root_at(v).expect("vertex of Gamma_Q")]))
        .collect();
    let mut out = Vec::new();
    let mut current = LWeight::zero();
    fn rec(
        k: usize,
        rest: &mut Vec<i64>,
        verts: &[(ArVertex, &Vec<i64>)],
        current: &mut LWeight,
        out: &mut Vec<LWeight>,
    ) {
        if rest.iter().all(|&b| b == 0) {
            out.push(current.clone());
            return;
        }
        if k == verts.len() {
            return;
        }
        let (v, dim) = verts[k];
        let max = dim
            .iter()
            .zip(rest.iter())
            .filter(|(a, _)| **a > 0)
            .map(|(a, b)| b / a)
            .min()
            .unwrap_or(0);
        for c in (0..=max).rev() {
            for (r, a) in rest.iter_mut().zip(dim) {
                *r -= c * a;
            }
            current.add_term(v.i, v.p, c);
            rec(k + 1, rest, verts, current, out);
            current.add_term(v.i, v.p, -c);
            for (r, a) in rest.iter_mut().zip(dim) {
                *r += c * a;
            }
        }
    }
    rec(0, &mut beta.to_vec(), &verts, &mut current, &mut out);
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::OrientedQuiver;

    fn a2() -> ArQuiver {
        let q = OrientedQuiver::parse(CartanDatum::parse("A2").unwrap(), "1>2").unwrap();
        ArQuiver::new(&q, &q.height_function()).unwrap()
    }

    #[test]
    fn l_root_examples() {
        let d = CartanDatum::parse("A2").unwrap();
        assert_eq!(
            l_root(&d, 0, 0),
            LWeight::from_terms([(0, 1, 1), (0, -1, 1), (1, 0, -1)])
        );
        let d1 = CartanDatum::parse("A1").unwrap();
        assert_eq!(l_root(&d1, 0, 0), LWeight::from_terms([(0, 1, 1), (0, -1, 1)]));
        let c = cl(&d, &l_root(&d, 1, 7));
        assert_eq!(d.to_alpha(&c).unwrap().coords, vec![0, 1]);
    }

    #[test]
    fn deg_examples() {
        let g = a2();
        assert_eq!(deg(&g, &LWeight::fundamental(1, 0)).unwrap(), vec![1, 1]);
        assert_eq!(deg(&g, &LWeight::zero()).unwrap(), vec![0, 0]);
        assert_eq!(deg(&g, &l_root(g.datum(), 0, 0)).unwrap(), vec![0, 0]);
        assert!(deg(&g, &LWeight::fundamental(1, 2)).is_err());
    }

    #[test]
    fn dominance_examples() {
        let d = CartanDatum::parse("A2").unwrap();
        let lam = LWeight::from_terms([(0, 1, 1), (0, -1, 1)]);
        assert_eq!(l_dominance_leq(&d, &lam, &lam), Some(LWeight::zero()));
        let mu = LWeight::fundamental(1, 0);
        assert_eq!(l_dominance_leq(&d, &mu, &lam), Some(LWeight::fundamental(0, 0)));
        assert_eq!(l_dominance_leq(&d, &lam, &mu), None);
        let a = LWeight::fundamental(0, 1);
        let b = LWeight::fundamental(0, -1);
        assert_eq!(l_dominance_leq(&d, &a, &b), None);
        assert_eq!(l_dominance_leq(&d, &b, &a), None);
    }

    #[test]
    fn window_and_j_hat() {
        let g = a2();
        let rep = lrootq_window_check(&g);
        assert!(rep.ok, "{rep:?}");
        assert_eq!(rep.j_hat_q, 1);
        assert!(in_lq_q(&g, &LWeight::fundamental(0, 0)));
        assert!(!in_lq_q(&g, &LWeight::fundamental(1, 1)));
    }

    #[test]
    fn duality_round_trip() {
        let d = CartanDatum::parse("E6").unwrap();
        let w = LWeight::from_terms([(0, 3, 2), (2, -1, -1), (5, 0, 4)]);
        let star = dual_lweight(&d, &w);
        assert_eq!(star.coeff(5, 3 - 12), 2);
        assert_eq!(dual_lweight_inverse(&d, &star), w);
    }

    #[test]
    fn json_is_sorted_triples() {
        let w = LWeight::from_terms([(1, 0, 1), (0, 1, 2)]);
        let s = serde_json::to_string(&w).unwrap();
        assert_eq!(s, "[[1,1,2],[2,0,1]]");
        let back: LWeight = serde_json::from_str(&s).unwrap();
        assert_eq!(back, w);
        assert!(serde_json::from_str::<LWeight>("[[0,1,1]]").is_err());
    }

    #[test]
    fn lp_plus_matches_partition_count() {
        let g = a2();
        assert_eq!(enumerate_lp_plus(&g, &[1, 1]).unwrap().len(), 2);
        assert_eq!(enumerate_lp_plus(&g, &[2, 2]).unwrap().len(), 3);
        assert_eq!(enumerate_lp_plus(&g, &[0, 0]).unwrap(), vec![LWeight::zero()]);
    }
}
