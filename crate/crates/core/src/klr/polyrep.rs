//! A faithful polynomial representation of `H_Q(β)` on
//! `⊕_i ℚ[x_1, …, x_d] e(i)`, used as an independent oracle for the
//! rewriting engine.
//!
//! `x_k` multiplies and `e(i)` projects. On `f e(i)`, `τ_k` acts by
//! `(s_k f − f)/(x_k − x_{k+1}) e(i)` when `i_k = i_{k+1}`, and otherwise by
//! `R · s_k f · e(s_k i)` with `R = x_{k+1} − x_k` when `i_k ← i_{k+1}` and
//! `R = 1` otherwise.

use super::algebra::{KlrAlgebra, KlrElement};
use super::poly::{monomials_of_degree, Poly};
use crate::error::{Error, Result};
use crate::linalg::{rat, Rational};
use num_traits::One;
use std::collections::BTreeMap;

/// A vector of `⊕_i ℚ[x] e(i)`, keyed by sequence. Zero components are
/// dropped.
pub type PolyVec = BTreeMap<Vec<usize>, Poly>;

pub struct PolyRep<'a> {
    alg: &'a KlrAlgebra,
}

fn add_component(v: &mut PolyVec, seq: Vec<usize>, f: Poly) {
    if f.is_zero() {
        return;
    }
    let sum = match v.remove(&seq) {
        Some(g) => g.add(&f),
        None => f,
    };
    if !sum.is_zero() {
        v.insert(seq, sum);
    }
}

pub fn vec_sub(a: &PolyVec, b: &PolyVec) -> PolyVec {
    let mut out = a.clone();
    for (s, f) in b {
        add_component(&mut out, s.clone(), f.scale(&-Rational::one()));
    }
    out
}

impl<'a> PolyRep<'a> {
    /// Builds the representation and checks every defining relation on all
    /// monomials of degree at most 2 in every component.
    pub fn new(alg: &'a KlrAlgebra) -> Result<Self> {
        let rep = Self { alg };
        rep.check_relations(2)?;
        Ok(rep)
    }

    pub fn algebra(&self) -> &KlrAlgebra {
        self.alg
    }

    pub fn tau(&self, k: usize, v: &PolyVec) -> PolyVec {
        let q = self.alg.quiver();
        let d = self.alg.d();
        let mut out = PolyVec::new();
        for (i, f) in v {
            if i[k] == i[k + 1] {
                add_component(&mut out, i.clone(), f.divided_difference(k).scale(&-Rational::one()));
            } else {
                let mut s = i.clone();
                s.swap(k, k + 1);
                let g = f.swap(k);
                let g = if q.has_arrow(i[k + 1], i[k]) {
                    Poly::var(d, k + 1).sub(&Poly::var(d, k)).mul(&g)
                } else {
                    g
                };
                add_component(&mut out, s, g);
            }
        }
        out
    }

    pub fn x(&self, k: usize, v: &PolyVec) -> PolyVec {
        let x = Poly::var(self.alg.d(), k);
        v.iter().map(|(s, f)| (s.clone(), x.mul(f))).collect()
    }

    pub fn e(&self, seq: &[usize], v: &PolyVec) -> PolyVec {
        v.iter().filter(|(s, _)| s.as_slice() == seq).map(|(s, f)| (s.clone(), f.clone())).collect()
    }

    /// Action of an arbitrary element.
    pub fn apply(&self, u: &KlrElement, v: &PolyVec) -> PolyVec {
        let mut out = PolyVec::new();
        for (w, c) in u.terms() {
            let Some(f) = v.get(&w.idem) else { continue };
            let mut cur: PolyVec = PolyVec::new();
            cur.insert(w.idem.clone(), f.clone());
            for &k in w.perm.canonical_word().iter().rev() {
                cur = self.tau(k, &cur);
            }
            for (s, g) in cur {
                add_component(&mut out, s, g.mul_monomial(&w.mono).scale(c));
            }
        }
        out
    }

    /// `f e(i)` for every sequence `i` and every monomial `f` of degree
    /// at most `max_deg`.
    pub fn test_vectors(&self, max_deg: u32) -> Vec<PolyVec> {
        let d = self.alg.d();
        let mut out = Vec::new();
        for s in self.alg.sequences() {
            for deg in 0..=max_deg {
                for m in monomials_of_degree(d, deg) {
                    let mut v = PolyVec::new();
                    v.insert(s.clone(), Poly::monomial(m, Rational::one()));
                    out.push(v);
                }
            }
        }
        out
    }

    fn check_relations(&self, max_deg: u32) -> Result<()> {
        let d = self.alg.d();
        let q = self.alg.quiver();
        let fail = |what: String| Err(Error::RelationViolated(what));
        for v in self.test_vectors(max_deg) {
            let (i, f) = v.iter().next().map(|(s, f)| (s.clone(), f.clone())).expect("one component");
            for k in 0..d.saturating_sub(1) {
                // τ_k² e(i) = Q e(i)
                let lhs = self.tau(k, &self.tau(k, &v));
                let qpoly = if i[k] == i[k + 1] {
                    Poly::zero(d)
                } else if q.has_arrow(i[k], i[k + 1]) {
                    Poly::var(d, k + 1).sub(&Poly::var(d, k))
                } else if q.has_arrow(i[k + 1], i[k]) {
                    Poly::var(d, k).sub(&Poly::var(d, k + 1))
                } else {
                    Poly::one(d)
                };
                let mut rhs = PolyVec::new();
                add_component(&mut rhs, i.clone(), qpoly.mul(&f));
                if lhs != rhs {
                    return fail(format!("tau_{}^2 on e({:?})", k + 1, i));
                }
                // (τ_k x_l − x_{s_k l} τ_k) e(i)
                for l in 0..d {
                    let sl = if l == k { k + 1 } else if l == k + 1 { k } else { l };
                    let lhs = vec_sub(&self.tau(k, &self.x(l, &v)), &self.x(sl, &self.tau(k, &v)));
                    let mut rhs = PolyVec::new();
                    if i[k] == i[k + 1] && (l == k || l == k + 1) {
                        let sign = if l == k { -1 } else { 1 };
                        add_component(&mut rhs, i.clone(), f.scale(&rat(sign)));
                    }
                    if lhs != rhs {
                        return fail(format!("tau_{} x_{} on e({:?})", k + 1, l + 1, i));
                    }
                }
                for l in k + 2..d.saturating_sub(1) {
                    let a = self.tau(k, &self.tau(l, &v));
                    let b = self.tau(l, &self.tau(k, &v));
                    if a != b {
                        return fail(format!("tau_{} tau_{} commutation", k + 1, l + 1));
                    }
                }
                if k + 2 < d {
                    let a = self.tau(k + 1, &self.tau(k, &self.tau(k + 1, &v)));
                    let b = self.tau(k, &self.tau(k + 1, &self.tau(k, &v)));
                    let eps = if i[k] != i[k + 2] {
                        0
                    } else if q.has_arrow(i[k + 1], i[k]) {
                        1
                    } else if q.has_arrow(i[k], i[k + 1]) {
                        -1
                    } else {
                        0
                    };
                    let mut rhs = PolyVec::new();
                    add_component(&mut rhs, i.clone(), f.scale(&rat(eps)));
                    if vec_sub(&a, &b) != rhs {
                        return fail(format!("braid at {} on e({:?})", k + 1, i));
                    }
                }
            }
        }
        Ok(())
    }

    /// Whether `apply(uv) = apply(u) ∘ apply(v)` on all test vectors.
    pub fn agrees_on_product(&self, u: &KlrElement, v: &KlrElement, uv: &KlrElement, max_deg: u32) -> bool {
        self.test_vectors(max_deg)
            .iter()
            .all(|t| self.apply(uv, t) == self.apply(u, &self.apply(v, t)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::OrientedQuiver;
    use crate::rootsys::CartanDatum;

    #[test]
    fn relations_hold_in_small_cases() {
        for (label, orientation, beta) in [
            ("A2", "1>2", vec![1, 1]),
            ("A2", "2>1", vec![2, 1]),
            ("A3", "1>2,3>2", vec![1, 2, 1]),
            ("A1", "", vec![3]),
        ] {
            let q = OrientedQuiver::parse(CartanDatum::parse(label).unwrap(), orientation).unwrap();
            let h = KlrAlgebra::new(&q, &beta).unwrap();
            assert!(PolyRep::new(&h).is_ok(), "{label} {orientation} {beta:?}");
        }
    }

    #[test]
    fn products_agree_with_engine() {
        let q = OrientedQuiver::parse(CartanDatum::parse("A2").unwrap(), "1>2").unwrap();
        let h = KlrAlgebra::new(&q, &[2, 1]).unwrap();
        let rep = PolyRep::new(&h).unwrap();
        let u = h.multiply(&h.tau(0).unwrap(), &h.x(2).unwrap()).unwrap();
        let v = h.multiply(&h.tau(1).unwrap(), &h.tau(0).unwrap()).unwrap();
        let uv = h.multiply(&u, &v).unwrap();
        assert!(rep.agrees_on_product(&u, &v, &uv, 2));
    }
}
