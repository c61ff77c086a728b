//! The repetition quiver, the bijection `φ : R⁺ × ℤ → Î` and the
//! Auslander–Reiten quiver `Γ_Q` as a finite full subquiver.
//!
//! `φ` is seeded by `φ(γ_i, 0) = (i, ξ_i)` and propagated along Coxeter
//! orbits: one step of `τ` moves `p` down by 2, and whenever the orbit
//! leaves `R⁺` the sign is dropped and `k` moves by one. The `k = 0` slice is
//! tabulated once at construction.

use crate::error::{Error, Result};
use crate::quiver::{HeightFunction, OrientedQuiver};
use crate::rootsys::{CartanDatum, WeylElement};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

/// A vertex `(i, p)` of `I × ℤ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArVertex {
    pub i: usize,
    pub p: i64,
}

impl ArVertex {
    pub fn new(i: usize, p: i64) -> Self {
        Self { i, p }
    }

    /// `(i, p) ↦ (i, p − 2·steps)`.
    pub fn translate(self, steps: i64) -> Self {
        Self { i: self.i, p: self.p - 2 * steps }
    }
}

/// `γ_i`: the sum of `α_j` over all `j` with a path `j ⇝ i` in `Q`.
pub fn gamma_i(q: &OrientedQuiver, i: usize) -> Vec<i64> {
    let n = q.rank();
    let mut reach = vec![false; n];
    reach[i] = true;
    let mut stack = vec![i];
    while let Some(v) = stack.pop() {
        for &(a, b) in q.arrows() {
            if b == v && !reach[a] {
                reach[a] = true;
                stack.push(a);
            }
        }
    }
    reach.into_iter().map(i64::from).collect()
}

/// Path query in the (infinite) repetition quiver `Q̂`, evaluated lazily
/// layer by layer.
pub fn repetition_has_path(datum: &CartanDatum, from: ArVertex, to: ArVertex) -> bool {
    if from == to {
        return true;
    }
    if to.p <= from.p {
        return false;
    }
    let n = datum.rank();
    let mut layer = vec![false; n];
    layer[from.i] = true;
    for _ in from.p..to.p {
        let mut next = vec![false; n];
        for v in (0..n).filter(|&v| layer[v]) {
            for w in datum.neighbors(v) {
                next[w] = true;
            }
        }
        layer = next;
    }
    layer[to.i]
}

/// `Γ_Q` with its `φ` table.
#[derive(Debug, Clone)]
pub struct ArQuiver {
    quiver: OrientedQuiver,
    height: HeightFunction,
    tau: WeylElement,
    tau_inv: WeylElement,
    /// `φ(α, 0)` indexed by positive-root index.
    table: Vec<ArVertex>,
    inverse: HashMap<ArVertex, usize>,
    /// Vertices sorted by `(p, i)`.
    vertices: Vec<ArVertex>,
    arrows: Vec<(ArVertex, ArVertex)>,
    /// `reach[a][b]`: path from `vertices[a]` to `vertices[b]`.
    reach: Vec<Vec<bool>>,
}

impl ArQuiver {
    pub fn new(quiver: &OrientedQuiver, height: &HeightFunction) -> Result<Self> {
        quiver.check_height(height)?;
        let d = quiver.datum();
        let n = d.rank();
        let big_n = d.num_positive_roots();
        let tau = quiver.coxeter_perm();
        let tau_inv = tau.inverse();
        let mut table: Vec<Option<ArVertex>> = vec![None; big_n];
        let mut this = Self {
            quiver: quiver.clone(),
            height: height.clone(),
            tau,
            tau_inv,
            table: Vec::new(),
            inverse: HashMap::new(),
            vertices: Vec::new(),
            arrows: Vec::new(),
            reach: Vec::new(),
        };
        for i in 0..n {
            let seed = d
                .root_index(&gamma_i(quiver, i))
                .ok_or_else(|| Error::Internal(format!("gamma_{} is not a root", i + 1)))?;
            let start = ArVertex::new(i, height.xi[i]);
            for forward in [true, false] {
                let (mut r, mut k, mut v) = (seed, 0i64, start);
                while k == 0 {
                    if let Some(prev) = table[r] {
                        if prev != v {
                            return Err(Error::Internal(format!(
                                "phi assigns two vertices to root {:?}",
                                d.root_coords(r)
                            )));
                        }
                    }
                    table[r] = Some(v);
                    (r, k) = if forward { this.step_forward(r, k) } else { this.step_backward(r, k) };
                    v = v.translate(if forward { 1 } else { -1 });
                }
            }
        }
        let table: Vec<ArVertex> = table
            .into_iter()
            .enumerate()
            .map(|(r, v)| v.ok_or_else(|| Error::Internal(format!("phi misses root {:?}", d.root_coords(r)))))
            .collect::<Result<_>>()?;
        let inverse: HashMap<ArVertex, usize> = table.iter().enumerate().map(|(r, &v)| (v, r)).collect();
        if inverse.len() != big_n {
            return Err(Error::Internal("phi is not injective on R+ x {0}".into()));
        }
        let mut vertices = table.clone();
        vertices.sort_by_key(|v| (v.p, v.i));
        let mut arrows = Vec::new();
        for &v in &vertices {
            for j in d.neighbors(v.i) {
                let w = ArVertex::new(j, v.p + 1);
                if inverse.contains_key(&w) {
                    arrows.push((v, w));
                }
            }
        }
        let pos: HashMap<ArVertex, usize> = vertices.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        let m = vertices.len();
        let mut reach = vec![vec![false; m]; m];
        // arrows increase p, so a reverse sweep over the (p, i)-sorted list
        // sees every successor before its predecessors
        for a in (0..m).rev() {
            reach[a][a] = true;
            let succ: Vec<usize> = arrows
                .iter()
                .filter(|(s, _)| *s == vertices[a])
                .map(|(_, t)| pos[t])
                .collect();
            for b in succ {
                for c in 0..m {
                    if reach[b][c] {
                        reach[a][c] = true;
                    }
                }
            }
        }
        this.table = table;
        this.inverse = inverse;
        this.vertices = vertices;
        this.arrows = arrows;
        this.reach = reach;
        Ok(this)
    }

    pub fn quiver(&self) -> &OrientedQuiver {
        &self.quiver
    }

    pub fn height(&self) -> &HeightFunction {
        &self.height
    }

    pub fn datum(&self) -> &CartanDatum {
        self.quiver.datum()
    }

    fn step_forward(&self, r: usize, k: i64) -> (usize, i64) {
        let d = self.quiver.datum();
        let t = self.tau.apply_index(r);
        if d.is_positive_index(t) {
            (t, k)
        } else {
            (d.negate_index(t), k - 1)
        }
    }

    fn step_backward(&self, r: usize, k: i64) -> (usize, i64) {
        let d = self.quiver.datum();
        let t = self.tau_inv.apply_index(r);
        if d.is_positive_index(t) {
            (t, k)
        } else {
            (d.negate_index(t), k + 1)
        }
    }

    /// `φ(α, 0)` by positive-root index.
    pub fn phi_index(&self, r: usize) -> ArVertex {
        self.table[r]
    }

    /// `φ(α, k)`. For `k ≠ 0` the pair may lie on the chain of any seed
    /// `γ_i`, so every chain is walked in the direction of `k`.
    pub fn phi(&self, alpha: &[i64], k: i64) -> Result<ArVertex> {
        let d = self.datum();
        let r = d
            .root_index(alpha)
            .ok_or_else(|| Error::NotPositiveRoot(alpha.to_vec()))?;
        if k == 0 {
            return Ok(self.table[r]);
        }
        let bound = (k.unsigned_abs() as usize + 1) * 2 * (d.num_positive_roots() + d.rank());
        for i in 0..d.rank() {
            let seed = d.root_index(&gamma_i(&self.quiver, i)).expect("gamma_i is a root");
            let (mut cur, mut kk, mut v) = (seed, 0i64, ArVertex::new(i, self.height.xi[i]));
            for _ in 0..bound {
                if cur == r && kk == k {
                    return Ok(v);
                }
                if (k < 0 && kk < k) || (k > 0 && kk > k) {
                    break;
                }
                if k < 0 {
                    (cur, kk) = self.step_forward(cur, kk);
                    v = v.translate(1);
                } else {
                    (cur, kk) = self.step_backward(cur, kk);
                    v = v.translate(-1);
                }
            }
        }
        Err(Error::Internal(format!("phi({alpha:?}, {k}) not reached from any seed")))
    }

    /// `φ⁻¹(i, p)` as `(root, k)`.
    pub fn phi_inverse(&self, v: ArVertex) -> Result<(Vec<i64>, i64)> {
        let d = self.datum();
        d.check_vertex(v.i)?;
        let xi = self.height.xi[v.i];
        if (v.p - xi).rem_euclid(2) != 0 {
            return Err(Error::Parity { i: v.i, p: v.p });
        }
        if let Some(&r) = self.inverse.get(&v) {
            return Ok((d.root_coords(r), 0));
        }
        let seed = d.root_index(&gamma_i(&self.quiver, v.i)).expect("gamma_i is a root");
        let steps = (v.p - xi) / 2;
        let (mut r, mut k) = (seed, 0i64);
        for _ in 0..steps.unsigned_abs() {
            (r, k) = if steps < 0 { self.step_forward(r, k) } else { self.step_backward(r, k) };
        }
        Ok((d.root_coords(r), k))
    }

    /// Positive-root index of a vertex of `Γ_Q`.
    pub fn root_at(&self, v: ArVertex) -> Option<usize> {
        self.inverse.get(&v).copied()
    }

    pub fn contains(&self, v: ArVertex) -> bool {
        self.inverse.contains_key(&v)
    }

    /// `Î_Q`, sorted by `(p, i)`.
    pub fn vertices(&self) -> &[ArVertex] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[(ArVertex, ArVertex)] {
        &self.arrows
    }

    /// Whether `(i, p)` lies in `Î`.
    pub fn in_i_hat(&self, v: ArVertex) -> bool {
        (v.p - self.height.xi[v.i]).rem_euclid(2) == 0
    }

    /// `Ĵ_Q = {(i, p) : (i, p±1) ∈ Î_Q}`, sorted.
    pub fn j_hat_q(&self) -> Vec<ArVertex> {
        let mut out: BTreeSet<ArVertex> = BTreeSet::new();
        for &v in &self.vertices {
            let up = ArVertex::new(v.i, v.p + 2);
            if self.contains(up) {
                out.insert(ArVertex::new(v.i, v.p + 1));
            }
        }
        out.into_iter().collect()
    }

    /// Directed reachability inside `Γ_Q`. Vertices outside `Γ_Q` are never
    /// reachable (except trivially from themselves).
    pub fn has_path(&self, from: ArVertex, to: ArVertex) -> bool {
        if from == to {
            return true;
        }
        let (Some(a), Some(b)) = (self.position(from), self.position(to)) else {
            return false;
        };
        self.reach[a][b]
    }

    fn position(&self, v: ArVertex) -> Option<usize> {
        self.vertices
            .binary_search_by_key(&(v.p, v.i), |w| (w.p, w.i))
            .ok()
    }

    /// Window `[min p, max p]` spanned by `Î_Q`.
    pub fn p_range(&self) -> (i64, i64) {
        let lo = self.vertices.first().map_or(0, |v| v.p);
        let hi = self.vertices.last().map_or(0, |v| v.p);
        (lo, hi)
    }

    /// For each `(i, p) ∈ Ĵ_Q`, the defect
    /// `dim(i,p−1) + dim(i,p+1) − Σ_{j∼i} dim(j,p)`, which vanishes on every
    /// mesh. Also reports a missing middle vertex as an error.
    pub fn mesh_defects(&self) -> Result<Vec<(ArVertex, Vec<i64>)>> {
        let d = self.datum();
        let n = d.rank();
        let mut out = Vec::new();
        for v in self.j_hat_q() {
            let lo = self.root_at(ArVertex::new(v.i, v.p - 1)).expect("in J_Q");
            let hi = self.root_at(ArVertex::new(v.i, v.p + 1)).expect("in J_Q");
            let mut defect: Vec<i64> = (0..n)
                .map(|c| d.positive_roots()[lo][c] + d.positive_roots()[hi][c])
                .collect();
            for j in d.neighbors(v.i) {
                let mid = self
                    .root_at(ArVertex::new(j, v.p))
                    .ok_or(Error::OutsideArQuiver { i: j, p: v.p })?;
                for c in 0..n {
                    defect[c] -= d.positive_roots()[mid][c];
                }
            }
            out.push((v, defect));
        }
        Ok(out)
    }

    pub fn to_dot(&self) -> String {
        let d = self.datum();
        let mut s = String::new();
        let _ = writeln!(s, "digraph GammaQ {{");
        let _ = writeln!(s, "  rankdir=LR;");
        let _ = writeln!(s, "  label=\"AR quiver {} {}\";", d.kind(), self.quiver.orientation_string());
        for &v in &self.vertices {
            let r = self.inverse[&v];
            let dim: Vec<String> = d.positive_roots()[r].iter().map(ToString::to_string).collect();
            let _ = writeln!(
                s,
                "  \"{}_{}\" [label=\"({}, {})\\n[{}]\"];",
                v.i + 1,
                v.p,
                v.i + 1,
                v.p,
                dim.join(",")
            );
        }
        for (a, b) in &self.arrows {
            let _ = writeln!(s, "  \"{}_{}\" -> \"{}_{}\";", a.i + 1, a.p, b.i + 1, b.p);
        }
        s.push_str("}\n");
        s
    }

    /// JSON rows `{root, vertex: [i, p]}` (1-based `i`), sorted by root index.
    pub fn phi_table_json(&self) -> Vec<PhiEntry> {
        let d = self.datum();
        self.table
            .iter()
            .enumerate()
            .map(|(r, v)| PhiEntry { root: d.root_coords(r), vertex: (v.i + 1, v.p) })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiEntry {
    pub root: Vec<i64>,
    pub vertex: (usize, i64),
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ar(label: &str, orientation: &str) -> ArQuiver {
        let q = OrientedQuiver::parse(CartanDatum::parse(label).unwrap(), orientation).unwrap();
        ArQuiver::new(&q, &q.height_function()).unwrap()
    }

    #[test]
    fn shift_by_k_is_nakayama() {
        let a = ar("A2", "1>2");
        assert_eq!(a.phi(&[1, 0], -1).unwrap(), ArVertex::new(1, -2));
        for (label, orientation) in [("A3", "1>2,3>2"), ("D4", "1>2,3>2,4>2"), ("A4", "2>1,2>3,4>3")] {
            let a = ar(label, orientation);
            let d = a.datum();
            let star = d.bar_involution_table();
            let h = d.coxeter_number() as i64;
            for r in 0..d.num_positive_roots() {
                let alpha = d.root_coords(r);
                for k in -2..2 {
                    let v = a.phi(&alpha, k).unwrap();
                    let w = a.phi(&alpha, k + 1).unwrap();
                    assert_eq!(w, ArVertex::new(star[v.i], v.p + h), "{label} {alpha:?} {k}");
                }
            }
        }
    }

    #[test]
    fn gamma_examples() {
        let d = CartanDatum::parse("A2").unwrap();
        let q = OrientedQuiver::parse(d, "1>2").unwrap();
        assert_eq!(gamma_i(&q, 0), vec![1, 0]);
        assert_eq!(gamma_i(&q, 1), vec![1, 1]);
        let q = OrientedQuiver::parse(CartanDatum::parse("A3").unwrap(), "1>2,2>3").unwrap();
        assert_eq!(gamma_i(&q, 2), vec![1, 1, 1]);
        let q = OrientedQuiver::parse(CartanDatum::parse("A1").unwrap(), "").unwrap();
        assert_eq!(gamma_i(&q, 0), vec![1]);
    }

    #[test]
    fn phi_examples_a2() {
        let g = ar("A2", "1>2");
        assert_eq!(g.height().xi, vec![1, 0]);
        assert_eq!(g.phi(&[1, 0], 0).unwrap(), ArVertex::new(0, 1));
        assert_eq!(g.phi(&[1, 1], 0).unwrap(), ArVertex::new(1, 0));
        assert_eq!(g.phi(&[0, 1], 0).unwrap(), ArVertex::new(0, -1));
        assert!(g.phi(&[1, -1], 0).is_err());
        assert_eq!(g.phi_inverse(ArVertex::new(1, 0)).unwrap(), (vec![1, 1], 0));
        assert!(matches!(g.phi_inverse(ArVertex::new(1, 1)), Err(Error::Parity { .. })));
    }

    #[test]
    fn phi_round_trips_off_the_slice() {
        let g = ar("D4", "1>2,3>2,2>4");
        let d = g.datum().clone();
        for r in d.positive_roots() {
            for k in -3..=3 {
                let v = g.phi(r, k).unwrap();
                assert!(g.in_i_hat(v));
                assert_eq!(g.phi_inverse(v).unwrap(), (r.clone(), k));
            }
        }
    }

    #[test]
    fn ar_quiver_a2() {
        let g = ar("A2", "1>2");
        let vs: Vec<_> = g.vertices().to_vec();
        assert_eq!(vs, vec![ArVertex::new(0, -1), ArVertex::new(1, 0), ArVertex::new(0, 1)]);
        assert_eq!(
            g.arrows(),
            &[
                (ArVertex::new(0, -1), ArVertex::new(1, 0)),
                (ArVertex::new(1, 0), ArVertex::new(0, 1))
            ]
        );
        assert_eq!(g.j_hat_q(), vec![ArVertex::new(0, 0)]);
        assert!(g.has_path(ArVertex::new(0, -1), ArVertex::new(0, 1)));
        assert!(!g.has_path(ArVertex::new(0, 1), ArVertex::new(0, -1)));
        assert!(g.has_path(ArVertex::new(1, 0), ArVertex::new(1, 0)));
    }

    #[test]
    fn ar_quiver_a1() {
        let g = ar("A1", "");
        assert_eq!(g.vertices().len(), 1);
        assert!(g.arrows().is_empty());
        assert!(g.j_hat_q().is_empty());
    }

    #[test]
    fn translate_matches_tau() {
        let g = ar("A2", "1>2");
        let v = g.phi(&[1, 0], 0).unwrap();
        // τ(α1) = α2 ∈ R⁺
        assert_eq!(v.translate(1), g.phi(&[0, 1], 0).unwrap());
    }

    #[test]
    fn repetition_paths() {
        let d = CartanDatum::parse("A3").unwrap();
        let v = ArVertex::new(0, 0);
        assert!(repetition_has_path(&d, v, ArVertex::new(2, 2)));
        assert!(!repetition_has_path(&d, v, ArVertex::new(2, 0)));
        assert!(!repetition_has_path(&d, v, ArVertex::new(0, -2)));
        assert!(repetition_has_path(&d, v, ArVertex::new(0, 4)));
        let a1 = CartanDatum::parse("A1").unwrap();
        assert!(!repetition_has_path(&a1, v, ArVertex::new(0, 2)));
    }

    #[test]
    fn mesh_a3() {
        let g = ar("A3", "1>2,3>2");
        for (_, defect) in g.mesh_defects().unwrap() {
            assert!(defect.iter().all(|&c| c == 0));
        }
        assert_eq!(g.j_hat_q().len(), 6 - 3);
    }

    #[test]
    fn dot_mentions_dimension_vectors() {
        let dot = ar("A2", "1>2").to_dot();
        assert!(dot.contains("(2, 0)\\n[1,1]"));
    }
}
