//! Reflection at a sink: `s_i(Q)`, the new height function, `s_i` on
//! Kostant partitions, and compatibility of the bijections `f`, `f′`.

use crate::arq::ArQuiver;
use crate::error::{Error, Result};
use crate::lweight::LWeight;
use crate::quiver::{HeightFunction, OrientedQuiver};
use crate::repmod::{enumerate_kp, f_bijection, HomTable, KostantPartition, KostantPartitionJson, KpPoset};
use crate::rootsys::CartanDatum;
use serde::Serialize;

/// `ξ′_i = ξ_i + 2`, `ξ′_j = ξ_j` otherwise.
pub fn reflected_height(q: &OrientedQuiver, xi: &HeightFunction, i: usize) -> Result<HeightFunction> {
    q.datum().check_vertex(i)?;
    if !q.is_sink(i) {
        return Err(Error::NotSink(i));
    }
    q.check_height(xi)?;
    let mut out = xi.clone();
    out.xi[i] += 2;
    Ok(out)
}

/// `s_i(α)` in α-coordinates.
pub fn reflect_root(d: &CartanDatum, i: usize, alpha: &[i64]) -> Vec<i64> {
    let pairing: i64 = (0..d.rank()).map(|j| alpha[j] * d.cartan_entry(j, i)).sum();
    let mut out = alpha.to_vec();
    out[i] -= pairing;
    out
}

/// `(s_i m)_α = m_{s_i α}`; defined when `m_{α_i} = 0`.
pub fn s_i_on_kp(d: &CartanDatum, m: &KostantPartition, i: usize) -> Result<KostantPartition> {
    d.check_vertex(i)?;
    let roots = d.positive_roots();
    let simple = d.root_index(&unit(d.rank(), i)).expect("simple root");
    if m.multiplicity(simple) != 0 {
        return Err(Error::UsesSimpleRoot(i));
    }
    let mut mult = vec![0u32; roots.len()];
    for (r, &k) in m.mult().iter().enumerate() {
        if k == 0 {
            continue;
        }
        let image = reflect_root(d, i, &roots[r]);
        let t = d.root_index(&image).ok_or_else(|| Error::NotPositiveRoot(image.clone()))?;
        mult[t] += k;
    }
    KostantPartition::new(roots, mult)
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Sink,
    Source,
}

/// `ᵢKP(β)` (sink side) or `ⁱKP(β)` (source side): partitions with
/// `m_{α_i} = 0`, in the canonical order.
pub fn truncated_kp(d: &CartanDatum, beta: &[i64], i: usize, _side: Side) -> Result<Vec<KostantPartition>> {
    d.check_vertex(i)?;
    let simple = d.root_index(&unit(d.rank(), i)).expect("simple root");
    Ok(enumerate_kp(d.positive_roots(), beta)?
        .into_iter()
        .filter(|m| m.multiplicity(simple) == 0)
        .collect())
}

/// Whether `subset` is closed downward in `poset`.
pub fn is_lower_set(poset: &KpPoset, subset: &[KostantPartition]) -> bool {
    let inside: Vec<bool> = poset.elements.iter().map(|m| subset.contains(m)).collect();
    (0..poset.len()).all(|b| !inside[b] || (0..poset.len()).all(|a| !poset.leq[a][b] || inside[a]))
}

/// `φ(α) = φ′(s_i α)` for every `α ≠ α_i`.
pub fn phi_compat(ar: &ArQuiver, ar_prime: &ArQuiver, i: usize) -> bool {
    let d = ar.datum();
    d.positive_roots().iter().enumerate().all(|(r, alpha)| {
        if *alpha == unit(d.rank(), i) {
            return true;
        }
        let image = reflect_root(d, i, alpha);
        match d.root_index(&image) {
            Some(t) => ar.phi_index(r) == ar_prime.phi_index(t),
            None => false,
        }
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FCompatEntry {
    pub partition: KostantPartitionJson,
    pub reflected: KostantPartitionJson,
    pub f: LWeight,
    pub f_prime: LWeight,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FCompatReport {
    pub vertex: usize,
    pub beta: Vec<i64>,
    pub beta_prime: Vec<i64>,
    pub entries: Vec<FCompatEntry>,
    /// `ᵢKP(β)` is a lower set of `(KP(β), ≤)`.
    pub lower_set: bool,
    /// `s_i` is an order isomorphism `ᵢKP(β) → ⁱKP(β′)`.
    pub order_isomorphism: bool,
}

impl FCompatReport {
    pub fn ok(&self) -> bool {
        self.entries.iter().all(|e| e.pass) && self.lower_set && self.order_isomorphism
    }
}

/// Precomputed data for both sides of a reflection at a sink.
pub struct ReflectionPair {
    pub vertex: usize,
    pub ar: ArQuiver,
    pub ar_prime: ArQuiver,
    pub table: HomTable,
    pub table_prime: HomTable,
}

impl ReflectionPair {
    pub fn new(q: &OrientedQuiver, xi: &HeightFunction, i: usize) -> Result<Self> {
        let xi_prime = reflected_height(q, xi, i)?;
        let q_prime = q.reflect(i);
        Ok(Self {
            vertex: i,
            ar: ArQuiver::new(q, xi)?,
            ar_prime: ArQuiver::new(&q_prime, &xi_prime)?,
            table: HomTable::new(q)?,
            table_prime: HomTable::new(&q_prime)?,
        })
    }

    /// Checks `f(m) = f′(s_i m)` for every `m ∈ ᵢKP(β)`, together with the
    /// lower-set and order-isomorphism properties.
    pub fn check_f_compat(&self, beta: &[i64]) -> Result<FCompatReport> {
        let d = self.ar.datum();
        let i = self.vertex;
        let beta_prime = reflect_root(d, i, beta);
        if beta_prime.iter().any(|&b| b < 0) {
            return Err(Error::NotInPositiveCone(beta_prime));
        }
        let roots = d.positive_roots();
        let sink_side = truncated_kp(d, beta, i, Side::Sink)?;
        let source_side = truncated_kp(d, &beta_prime, i, Side::Source)?;
        let mut entries = Vec::with_capacity(sink_side.len());
        let mut images = Vec::with_capacity(sink_side.len());
        for m in &sink_side {
            let sm = s_i_on_kp(d, m, i)?;
            let f = f_bijection(&self.ar, m);
            let f_prime = f_bijection(&self.ar_prime, &sm);
            entries.push(FCompatEntry {
                partition: m.to_json(roots),
                reflected: sm.to_json(roots),
                pass: f == f_prime,
                f,
                f_prime,
            });
            images.push(sm);
        }
        let poset = KpPoset::new(&self.table, beta)?;
        let lower_set = is_lower_set(&poset, &sink_side);
        let mut sorted_images = images.clone();
        sorted_images.sort();
        let mut order_isomorphism = sorted_images == source_side;
        if order_isomorphism {
            'outer: for (a, ma) in sink_side.iter().enumerate() {
                for (b, mb) in sink_side.iter().enumerate() {
                    let lhs = self.table.kp_leq(ma, mb)?;
                    let rhs = self.table_prime.kp_leq(&images[a], &images[b])?;
                    if lhs != rhs {
                        order_isomorphism = false;
                        break 'outer;
                    }
                }
            }
        }
        Ok(FCompatReport {
            vertex: i + 1,
            beta: beta.to_vec(),
            beta_prime,
            entries,
            lower_set,
            order_isomorphism,
        })
    }
}

/// One-shot form of [`ReflectionPair::check_f_compat`].
pub fn check_f_compat(q: &OrientedQuiver, xi: &HeightFunction, beta: &[i64], i: usize) -> Result<FCompatReport> {
    ReflectionPair::new(q, xi, i)?.check_f_compat(beta)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> (OrientedQuiver, HeightFunction) {
        let q = OrientedQuiver::parse(CartanDatum::parse("A2").unwrap(), "1>2").unwrap();
        let h = q.height_function();
        (q, h)
    }

    #[test]
    fn height_examples() {
        let (q, h) = a2();
        let h2 = reflected_height(&q, &h, 1).unwrap();
        assert_eq!(h2.xi, vec![1, 2]);
        assert!(q.reflect(1).check_height(&h2).is_ok());
        assert_eq!(reflected_height(&q, &h, 0), Err(Error::NotSink(0)));
    }

    #[test]
    fn kp_reflection_examples() {
        let d = CartanDatum::parse("A2").unwrap();
        let roots = d.positive_roots();
        let m = KostantPartition::from_pairs(roots, &[(vec![1, 1], 1)]).unwrap();
        let expect = KostantPartition::from_pairs(roots, &[(vec![1, 0], 1)]).unwrap();
        assert_eq!(s_i_on_kp(&d, &m, 1).unwrap(), expect);
        let empty = KostantPartition::new(roots, vec![0; 3]).unwrap();
        assert_eq!(s_i_on_kp(&d, &empty, 1).unwrap(), empty);
        let m = KostantPartition::from_pairs(roots, &[(vec![1, 0], 2)]).unwrap();
        let expect = KostantPartition::from_pairs(roots, &[(vec![1, 1], 2)]).unwrap();
        assert_eq!(s_i_on_kp(&d, &m, 1).unwrap(), expect);
        let bad = KostantPartition::from_pairs(roots, &[(vec![0, 1], 1)]).unwrap();
        assert_eq!(s_i_on_kp(&d, &bad, 1), Err(Error::UsesSimpleRoot(1)));
    }

    #[test]
    fn compat_a2() {
        let (q, h) = a2();
        let rep = check_f_compat(&q, &h, &[1, 1], 1).unwrap();
        assert!(rep.ok());
        assert_eq!(rep.entries.len(), 1);
        assert_eq!(rep.entries[0].f, LWeight::fundamental(1, 0));
        // β = α2: ᵢKP is empty, β′ = −α2 is outside the cone
        assert!(check_f_compat(&q, &h, &[0, 1], 1).is_err());
        let pair = ReflectionPair::new(&q, &h, 1).unwrap();
        assert!(phi_compat(&pair.ar, &pair.ar_prime, 1));
    }

    #[test]
    fn compat_a3_middle_sink() {
        let q = OrientedQuiver::parse(CartanDatum::parse("A3").unwrap(), "1>2,3>2").unwrap();
        let h = q.height_function();
        let rep = check_f_compat(&q, &h, &[1, 2, 1], 1).unwrap();
        assert_eq!(rep.beta_prime, vec![1, 0, 1]);
        assert_eq!(rep.entries.len(), 1);
        assert!(rep.ok());
    }
}
