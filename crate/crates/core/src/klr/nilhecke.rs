//! The nil-Hecke algebra `NH_m = H(m α_i)` and its primitive idempotent.

use super::algebra::{KlrAlgebra, KlrElement};
use super::perm::Perm;
use super::poly::{count_monomials, Poly};
use super::polyrep::PolyRep;
use crate::error::{Error, Result};
use crate::linalg::Rational;
use num_traits::One;

fn single_vertex(alg: &KlrAlgebra) -> Result<usize> {
    let support: Vec<usize> = (0..alg.beta().len()).filter(|&i| alg.beta()[i] > 0).collect();
    match support.as_slice() {
        [i] => Ok(*i),
        _ => Err(Error::IndexOutOfRange(format!("nil-Hecke needs beta = m alpha_i, got {:?}", alg.beta()))),
    }
}

/// `e_m = τ_{w_0} x_2 x_3² ⋯ x_m^{m−1}`.
pub fn nilhecke_em(alg: &KlrAlgebra) -> Result<KlrElement> {
    let i = single_vertex(alg)?;
    let m = alg.d();
    let seq = vec![i; m];
    let w0 = Perm((0..m as u8).rev().collect());
    let taus = alg.tau_word(&w0.canonical_word(), &seq)?;
    let mono: Vec<u32> = (0..m as u32).collect();
    let x = alg.poly_idem(&Poly::monomial(mono, Rational::one()), &seq)?;
    alg.multiply(&taus, &x)
}

/// Outcome of the idempotency checks for `e_m`.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct NilHeckeReport {
    pub m: usize,
    /// `e_m · e_m = e_m` in normal form.
    pub engine_idempotent: bool,
    /// `ρ(e_m)∘ρ(e_m) = ρ(e_m)` on every test vector of the polynomial
    /// representation.
    pub polyrep_idempotent: bool,
    /// `ρ(e_m · e_m)` and `ρ(e_m)∘ρ(e_m)` agree monomial by monomial.
    pub engine_matches_polyrep: bool,
    pub terms: usize,
}

impl NilHeckeReport {
    pub fn ok(&self) -> bool {
        self.engine_idempotent && self.polyrep_idempotent && self.engine_matches_polyrep
    }
}

pub fn check_nilhecke(alg: &KlrAlgebra, max_test_degree: u32) -> Result<NilHeckeReport> {
    let e = nilhecke_em(alg)?;
    let sq = alg.multiply(&e, &e)?;
    let rep = PolyRep::new(alg)?;
    let vectors = rep.test_vectors(max_test_degree);
    let mut polyrep_idempotent = true;
    let mut matches = true;
    for v in &vectors {
        let once = rep.apply(&e, v);
        let twice = rep.apply(&e, &once);
        polyrep_idempotent &= twice == once;
        matches &= rep.apply(&sq, v) == twice;
    }
    Ok(NilHeckeReport {
        m: alg.d(),
        engine_idempotent: sq == e,
        polyrep_idempotent,
        engine_matches_polyrep: matches,
        terms: e.len(),
    })
}

/// Graded dimension of `Mat_{m!}(Sym_m)` in degree `k`, with the matrix
/// units graded by `2ℓ(u) − 2ℓ(w)` and `Sym_m` generated in degrees
/// `2, 4, …, 2m`.
pub fn matrix_algebra_dim(m: usize, k: i64) -> u64 {
    let lengths: Vec<i64> = Perm::all(m).iter().map(|p| p.length() as i64).collect();
    let mut total = 0u64;
    for &lu in &lengths {
        for &lw in &lengths {
            let rest = k - 2 * lu + 2 * lw;
            if rest >= 0 && rest % 2 == 0 {
                total += sym_dim(m, (rest / 2) as usize);
            }
        }
    }
    total
}

/// Dimension of symmetric polynomials in `m` variables of degree `n`:
/// partitions of `n` into parts of size at most `m`.
fn sym_dim(m: usize, n: usize) -> u64 {
    let mut ways = vec![0u64; n + 1];
    ways[0] = 1;
    for part in 1..=m {
        for t in part..=n {
            ways[t] += ways[t - part];
        }
    }
    ways[n]
}

/// PBW count of `NH_m` in degree `k`: monomials of degree
/// `(k + 2ℓ(w))/2`, summed over `w ∈ S_m`.
pub fn nilhecke_pbw_dim(m: usize, k: i64) -> u64 {
    Perm::all(m)
        .iter()
        .map(|p| {
            let rest = k + 2 * p.length() as i64;
            if rest >= 0 && rest % 2 == 0 {
                count_monomials(m, (rest / 2) as u32)
            } else {
                0
            }
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::OrientedQuiver;
    use crate::rootsys::CartanDatum;

    fn nh(m: i64) -> KlrAlgebra {
        let q = OrientedQuiver::parse(CartanDatum::parse("A1").unwrap(), "").unwrap();
        KlrAlgebra::new(&q, &[m]).unwrap()
    }

    #[test]
    fn small_idempotents() {
        let h = nh(1);
        assert_eq!(nilhecke_em(&h).unwrap(), h.one());
        let h = nh(2);
        let e = nilhecke_em(&h).unwrap();
        let expect = h.multiply(&h.tau(0).unwrap(), &h.x(1).unwrap()).unwrap();
        assert_eq!(e, expect);
        assert!(check_nilhecke(&h, 2).unwrap().ok());
        assert!(check_nilhecke(&nh(3), 2).unwrap().ok());
    }

    #[test]
    fn matrix_algebra_dimensions() {
        for m in 1..=3 {
            for k in -8..=8 {
                assert_eq!(matrix_algebra_dim(m, k), nilhecke_pbw_dim(m, k), "m={m} k={k}");
            }
        }
        assert_eq!(sym_dim(2, 4), 3);
    }

    #[test]
    fn rejects_mixed_beta() {
        let q = OrientedQuiver::parse(CartanDatum::parse("A2").unwrap(), "1>2").unwrap();
        let h = KlrAlgebra::new(&q, &[1, 1]).unwrap();
        assert!(nilhecke_em(&h).is_err());
    }
}
