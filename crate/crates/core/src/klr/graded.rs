//! Graded dimensions, parabolic induction and the multiplicity bookkeeping
//! for standard modules.

use super::algebra::{KlrAlgebra, KlrElement, KlrWord};
use super::perm::Perm;
use super::poly::{binomial, count_monomials};
use crate::error::{Error, Result};
use crate::linalg::Rational;
use num_traits::Zero;
use std::collections::HashMap;

/// Number of PBW words `x^a τ_σ e(j)` of degree `k`.
pub fn graded_dim_pbw(alg: &KlrAlgebra, k: i64) -> u64 {
    let d = alg.d();
    let perms = Perm::all(d);
    let mut total = 0;
    for s in alg.sequences() {
        for p in &perms {
            let rest = k - alg.perm_degree(p, s);
            if rest >= 0 && rest % 2 == 0 {
                total += count_monomials(d, (rest / 2) as u32);
            }
        }
    }
    total
}

/// Rank of the span of the products `τ_σ · x^a e(j)` of degree `k`, each
/// rewritten to normal form by the engine.
pub fn graded_dim_span(alg: &KlrAlgebra, k: i64) -> Result<u64> {
    let mut echelon = SparseEchelon::default();
    for w in alg.pbw_basis(k) {
        let taus = alg.basis(w.idem.clone(), w.perm.clone(), vec![0; alg.d()]);
        let x = alg.basis(w.idem.clone(), Perm::identity(alg.d()), w.mono.clone());
        let prod = alg.multiply(&taus, &x)?;
        echelon.insert(&prod);
    }
    Ok(echelon.rank() as u64)
}

/// Incremental row echelon form over sparse vectors. Pivots are the
/// largest words under `(ℓ(σ), σ, a, j)`, which makes the right-handed PBW
/// products triangular against the left-handed basis.
#[derive(Default)]
struct SparseEchelon {
    rows: HashMap<PivotKey, Vec<(KlrWord, Rational)>>,
}

type PivotKey = (usize, KlrWord);

fn pivot_key(w: &KlrWord) -> PivotKey {
    (w.perm.length(), w.clone())
}

impl SparseEchelon {
    fn insert(&mut self, v: &KlrElement) {
        let mut cur: std::collections::BTreeMap<PivotKey, Rational> =
            v.terms().iter().map(|(w, c)| (pivot_key(w), c.clone())).collect();
        loop {
            let Some((lead, c)) = cur.iter().next_back().map(|(k, c)| (k.clone(), c.clone())) else {
                return;
            };
            match self.rows.get(&lead) {
                None => {
                    let row = cur.into_iter().map(|(k, v)| (k.1, v / &c)).collect();
                    self.rows.insert(lead, row);
                    return;
                }
                Some(row) => {
                    for (w, rc) in row {
                        let key = pivot_key(w);
                        let e = cur.entry(key.clone()).or_insert_with(Rational::zero);
                        *e -= rc * &c;
                        if e.is_zero() {
                            cur.remove(&key);
                        }
                    }
                }
            }
        }
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }
}

/// `dim (M ∘ N) = binom(d + d′, d) · dim M · dim N`.
pub fn induct_dim(dim_m: u64, dim_n: u64, d: u64, d_prime: u64) -> u64 {
    binomial(d + d_prime, d) * dim_m * dim_n
}

/// One line of the multiplicity ledger for
/// `std(m)^{⊕ m_1! ⋯ m_r!} ≅ S(γ_1)^{∘m_1} ∘ ⋯ ∘ S(γ_r)^{∘m_r}`.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct StdhEntry {
    pub product_dim: u64,
    pub multiplicity: u64,
    pub std_dim: u64,
}

/// Dimension bookkeeping at one truncation level: `parts` lists
/// `(ht γ, m_γ, dim of the truncated S(γ))` in the convex order. Fails when
/// the product dimension is not divisible by `Π m!`.
pub fn stdh_ledger(parts: &[(u64, u64, u64)]) -> Result<StdhEntry> {
    let mut dim = 1u64;
    let mut height = 0u64;
    let mut multiplicity = 1u64;
    for &(ht, m, dim_s) in parts {
        for _ in 0..m {
            dim = induct_dim(dim, dim_s, height, ht);
            height += ht;
        }
        multiplicity *= (1..=m).product::<u64>();
    }
    if dim % multiplicity != 0 {
        return Err(Error::Internal(format!(
            "product dimension {dim} is not divisible by {multiplicity}"
        )));
    }
    Ok(StdhEntry { product_dim: dim, multiplicity, std_dim: dim / multiplicity })
}
