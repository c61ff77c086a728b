//! Independent check of the degeneration order on small `E_β`.
//!
//! For each `m′` and each splitting `M(m′) = U ⊕ V`, every middle term
//! `E_C = [[U, C], [0, V]]` of an extension `0 → U → E_C → V → 0`
//! degenerates to `U ⊕ V` along `diag(t·1_U, 1_V)` as `t → 0`. The closure
//! order on a representation-finite quiver is generated by these
//! degenerations, so the reflexive-transitive closure of the relations found
//! here is the orbit-closure order. The cocycle `C` runs over all matrices
//! with entries in `{−1, 0, 1}`.

use super::kostant::{HomTable, KostantPartition, KpPoset};
use super::rep::QuiverRep;
use crate::error::{Error, Result};
use crate::linalg::{rat, Matrix};
use std::collections::{BTreeMap, HashMap};

/// `leq[a][b]` for `KP(β)` in the order of `poset.elements`, computed from
/// explicit degenerations.
pub fn orbit_closure_order(table: &HomTable, poset: &KpPoset) -> Result<Vec<Vec<bool>>> {
    let n = poset.len();
    let by_hom: HashMap<Vec<u64>, usize> = poset
        .elements
        .iter()
        .enumerate()
        .map(|(k, m)| (table.hom_vector(m), k))
        .collect();
    let mut rel = vec![vec![false; n]; n];
    for (b, mp) in poset.elements.iter().enumerate() {
        rel[b][b] = true;
        for (mu, mv) in splittings(mp, table.roots()) {
            let u = table.direct_sum(&mu);
            let v = table.direct_sum(&mv);
            for e in extensions(&u, &v) {
                let hv: Vec<u64> = (0..table.roots().len())
                    .map(|g| table.indecomposable(g).hom_dim(&e) as u64)
                    .collect();
                let a = *by_hom
                    .get(&hv)
                    .ok_or_else(|| Error::Internal(format!("unclassified middle term {hv:?}")))?;
                rel[a][b] = true;
            }
        }
    }
    for k in 0..n {
        for a in 0..n {
            if rel[a][k] {
                for b in 0..n {
                    if rel[k][b] {
                        rel[a][b] = true;
                    }
                }
            }
        }
    }
    Ok(rel)
}

/// All ways to write `m = m_U + m_V` with both parts nonzero.
fn splittings(m: &KostantPartition, roots: &[Vec<i64>]) -> Vec<(KostantPartition, KostantPartition)> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; m.mult().len()];
    fn rec(
        k: usize,
        m: &KostantPartition,
        roots: &[Vec<i64>],
        cur: &mut Vec<u32>,
        out: &mut Vec<(KostantPartition, KostantPartition)>,
    ) {
        if k == cur.len() {
            let total: u32 = cur.iter().sum();
            if total == 0 || total == m.parts() {
                return;
            }
            let rest: Vec<u32> = m.mult().iter().zip(cur.iter()).map(|(a, b)| a - b).collect();
            out.push((
                KostantPartition::new(roots, cur.clone()).expect("sized"),
                KostantPartition::new(roots, rest).expect("sized"),
            ));
            return;
        }
        for c in 0..=m.multiplicity(k) {
            cur[k] = c;
            rec(k + 1, m, roots, cur, out);
        }
        cur[k] = 0;
    }
    rec(0, m, roots, &mut cur, &mut out);
    out
}

/// Middle terms `[[U_a, C_a], [0, V_a]]` for every cocycle `C` with entries
/// in `{−1, 0, 1}`.
fn extensions(u: &QuiverRep, v: &QuiverRep) -> Vec<QuiverRep> {
    let q = u.quiver();
    let arrows: Vec<(usize, usize)> = q.arrows().iter().copied().collect();
    let slots: Vec<(usize, usize, usize)> = arrows
        .iter()
        .enumerate()
        .flat_map(|(k, &(i, j))| {
            (0..u.dims()[j]).flat_map(move |r| (0..v.dims()[i]).map(move |c| (k, r, c)))
        })
        .collect();
    let total = 3usize.pow(slots.len() as u32);
    let dims: Vec<usize> = u.dims().iter().zip(v.dims()).map(|(a, b)| a + b).collect();
    let mut out = Vec::with_capacity(total);
    for code in 0..total {
        let mut maps: BTreeMap<(usize, usize), Matrix> = BTreeMap::new();
        for &(i, j) in &arrows {
            let m = u.map(i, j).expect("arrow").direct_sum(v.map(i, j).expect("arrow"));
            maps.insert((i, j), m);
        }
        let mut c = code;
        for &(k, r, col) in &slots {
            let digit = (c % 3) as i64 - 1;
            c /= 3;
            let (i, j) = arrows[k];
            let m = maps.get_mut(&(i, j)).expect("arrow");
            m[(r, u.dims()[i] + col)] = rat(digit);
        }
        out.push(QuiverRep::new(q, dims.clone(), maps).expect("well-formed extension"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::OrientedQuiver;
    use crate::rootsys::CartanDatum;

    #[test]
    fn a2_line() {
        let q = OrientedQuiver::parse(CartanDatum::parse("A2").unwrap(), "1>2").unwrap();
        let t = HomTable::new(&q).unwrap();
        let p = KpPoset::new(&t, &[1, 1]).unwrap();
        assert_eq!(orbit_closure_order(&t, &p).unwrap(), p.leq);
    }

    #[test]
    fn a3_agrees_with_hom_order() {
        let q = OrientedQuiver::parse(CartanDatum::parse("A3").unwrap(), "1>2,3>2").unwrap();
        let t = HomTable::new(&q).unwrap();
        for beta in [[1, 1, 1], [1, 2, 1], [2, 1, 0], [1, 2, 0]] {
            let p = KpPoset::new(&t, &beta).unwrap();
            assert_eq!(orbit_closure_order(&t, &p).unwrap(), p.leq, "{beta:?}");
        }
    }
}
