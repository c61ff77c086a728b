use super::algebra::{KlrAlgebra, KlrElement, KlrWord};
use super::perm::Perm;
use super::poly::Poly;
use crate::error::{Error, Result};
use crate::linalg::Rational;
use num_bigint::BigInt;
use num_traits::One;

/// Embeds `f_1 ⊗ ⋯ ⊗ f_n ∈ ⊗_i ℚ[x_{i,1}, …, x_{i,d_i}]^{S_{d_i}}` into the
/// center as
/// `(1 / d_1! ⋯ d_n!) Σ_{σ ∈ S_d} σ(f_1 ⋯ f_n e(1^{d_1} ⋯ n^{d_n}))`.
///
/// `fs[i]` is a polynomial in `β_i` variables.
pub fn center_embed(alg: &KlrAlgebra, fs: &[Poly]) -> Result<KlrElement> {
    let beta = alg.beta();
    let d = alg.d();
    if fs.len() != beta.len() {
        return Err(Error::DimensionMismatch { expected: beta.len(), got: fs.len() });
    }
    let mut product = Poly::one(d);
    let mut offset = 0;
    let mut base = Vec::with_capacity(d);
    for (i, f) in fs.iter().enumerate() {
        let di = beta[i] as usize;
        if f.nvars() != di {
            return Err(Error::DimensionMismatch { expected: di, got: f.nvars() });
        }
        if !f.is_symmetric() {
            return Err(Error::NotSymmetric(format!("f_{} = {f}", i + 1)));
        }
        let shift: Vec<usize> = (0..di).map(|k| offset + k).collect();
        product = product.mul(&embed_vars(f, &shift, d));
        base.resize(base.len() + di, i);
        offset += di;
    }
    let denom: BigInt = beta
        .iter()
        .map(|&b| (1..=b).map(BigInt::from).product::<BigInt>())
        .product();
    let scale = Rational::new(BigInt::one(), denom);
    let mut out = alg.zero();
    for sigma in Perm::all(d) {
        let seq = sigma.act(&base);
        let g = product.permute_vars(&sigma.positions());
        for (m, c) in g.terms() {
            out.add_term(
                KlrWord { idem: seq.clone(), perm: Perm::identity(d), mono: m.clone() },
                c * &scale,
            );
        }
    }
    Ok(out)
}

/// Re-indexes a polynomial in `k` variables into `d` variables via
/// `x_t ↦ x_{targets[t]}`.
fn embed_vars(f: &Poly, targets: &[usize], d: usize) -> Poly {
    let mut out = Poly::zero(d);
    for (m, c) in f.terms() {
        let mut n = vec![0; d];
        for (t, &e) in m.iter().enumerate() {
            n[targets[t]] += e;
        }
        out.add_term(n, c.clone());
    }
    out
}

/// `(e_{r_1}, …, e_{r_n})`: elementary symmetric inputs, one per vertex.
pub fn elementary_inputs(beta: &[i64], degrees: &[usize]) -> Vec<Poly> {
    beta.iter()
        .zip(degrees)
        .map(|(&b, &r)| Poly::elementary(b as usize, r.min(b as usize)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::OrientedQuiver;
    use crate::rootsys::CartanDatum;

    fn alg(beta: &[i64]) -> KlrAlgebra {
        let q = OrientedQuiver::parse(CartanDatum::parse("A2").unwrap(), "1>2").unwrap();
        KlrAlgebra::new(&q, beta).unwrap()
    }

    #[test]
    fn unit_and_power_sums() {
        let h = alg(&[2, 1]);
        assert!(h.is_central(&h.one()).unwrap());
        let total = (0..3).fold(h.zero(), |acc, k| acc.add(&h.x(k).unwrap()));
        assert!(h.is_central(&total).unwrap());
        assert!(!h.is_central(&h.x(0).unwrap()).unwrap());
    }

    #[test]
    fn constants_embed_to_unit() {
        let h = alg(&[2, 1]);
        let fs = vec![Poly::one(2), Poly::one(1)];
        assert_eq!(center_embed(&h, &fs).unwrap(), h.one());
    }

    #[test]
    fn elementary_images_are_central() {
        let h = alg(&[2, 1]);
        for r in [[1, 0], [2, 0], [0, 1], [1, 1], [2, 1]] {
            let z = center_embed(&h, &elementary_inputs(&[2, 1], &r)).unwrap();
            assert!(h.is_central(&z).unwrap(), "{r:?}");
        }
    }

    #[test]
    fn rejects_non_symmetric() {
        let h = alg(&[2, 0]);
        let fs = vec![Poly::var(2, 0), Poly::one(0)];
        assert!(matches!(center_embed(&h, &fs), Err(Error::NotSymmetric(_))));
    }
}
