use crate::error::{Error, Result};
use crate::linalg::{rat, Matrix, Rational};
use crate::quiver::OrientedQuiver;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// A finite-dimensional representation of an oriented quiver over `ℚ`.
/// The matrix attached to an arrow `i → j` has shape `dims[j] × dims[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuiverRep {
    quiver: OrientedQuiver,
    dims: Vec<usize>,
    maps: BTreeMap<(usize, usize), Matrix>,
}

impl QuiverRep {
    pub fn new(quiver: &OrientedQuiver, dims: Vec<usize>, maps: BTreeMap<(usize, usize), Matrix>) -> Result<Self> {
        if dims.len() != quiver.rank() {
            return Err(Error::DimensionMismatch { expected: quiver.rank(), got: dims.len() });
        }
        for &(i, j) in quiver.arrows() {
            let m = maps
                .get(&(i, j))
                .ok_or_else(|| Error::BadOrientation(format!("no matrix for arrow {}>{}", i + 1, j + 1)))?;
            if m.rows() != dims[j] || m.cols() != dims[i] {
                return Err(Error::DimensionMismatch { expected: dims[j] * dims[i], got: m.rows() * m.cols() });
            }
        }
        if maps.len() != quiver.arrows().len() {
            return Err(Error::BadOrientation("matrix attached to a non-arrow".into()));
        }
        Ok(Self { quiver: quiver.clone(), dims, maps })
    }

    pub fn zero(quiver: &OrientedQuiver) -> Self {
        Self::with_zero_maps(quiver, vec![0; quiver.rank()])
    }

    fn with_zero_maps(quiver: &OrientedQuiver, dims: Vec<usize>) -> Self {
        let maps = quiver
            .arrows()
            .iter()
            .map(|&(i, j)| ((i, j), Matrix::zeros(dims[j], dims[i])))
            .collect();
        Self { quiver: quiver.clone(), dims, maps }
    }

    /// The simple module `S(i)`.
    pub fn simple(quiver: &OrientedQuiver, i: usize) -> Self {
        let mut dims = vec![0; quiver.rank()];
        dims[i] = 1;
        Self::with_zero_maps(quiver, dims)
    }

    pub fn quiver(&self) -> &OrientedQuiver {
        &self.quiver
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_vector(&self) -> Vec<i64> {
        self.dims.iter().map(|&d| d as i64).collect()
    }

    pub fn map(&self, i: usize, j: usize) -> Option<&Matrix> {
        self.maps.get(&(i, j))
    }

    pub fn maps(&self) -> &BTreeMap<(usize, usize), Matrix> {
        &self.maps
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn direct_sum(&self, other: &QuiverRep) -> QuiverRep {
        let dims = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let maps = self
            .maps
            .iter()
            .map(|(&k, m)| (k, m.direct_sum(&other.maps[&k])))
            .collect();
        QuiverRep { quiver: self.quiver.clone(), dims, maps }
    }

    /// BGP reflection functor `S⁺_k` at a sink `k`. The result is a
    /// representation of `s_k(Q)`, with the new space at `k` the kernel of
    /// `⊕_{i→k} V_i → V_k`.
    pub fn reflect_at_sink(&self, k: usize) -> Result<QuiverRep> {
        if !self.quiver.is_sink(k) {
            return Err(Error::NotSink(k));
        }
        let incoming: Vec<usize> = self
            .quiver
            .arrows()
            .iter()
            .filter(|&&(_, j)| j == k)
            .map(|&(i, _)| i)
            .collect();
        let total: usize = incoming.iter().map(|&i| self.dims[i]).sum();
        let mut a = Matrix::zeros(self.dims[k], total);
        let mut offset = 0;
        for &i in &incoming {
            let m = &self.maps[&(i, k)];
            for r in 0..m.rows() {
                for c in 0..m.cols() {
                    a[(r, offset + c)] = m[(r, c)].clone();
                }
            }
            offset += self.dims[i];
        }
        let kernel = a.nullspace();
        let new_dim = kernel.len();
        let reflected = self.quiver.reflect(k);
        let mut dims = self.dims.clone();
        dims[k] = new_dim;
        let mut maps = BTreeMap::new();
        for &(i, j) in reflected.arrows() {
            if i == k {
                // projection of the kernel onto the summand V_j
                let start: usize = incoming
                    .iter()
                    .take_while(|&&x| x != j)
                    .map(|&x| self.dims[x])
                    .sum();
                let mut m = Matrix::zeros(self.dims[j], new_dim);
                for (c, v) in kernel.iter().enumerate() {
                    for r in 0..self.dims[j] {
                        m[(r, c)] = v[start + r].clone();
                    }
                }
                maps.insert((i, j), m);
            } else {
                maps.insert((i, j), self.maps[&(i, j)].clone());
            }
        }
        QuiverRep::new(&reflected, dims, maps)
    }

    /// Rows of the linear map `⊕_i Hom(M_i, N_i) → ⊕_{i→j} Hom(M_i, N_j)`,
    /// `(f_i) ↦ (f_j M_a − N_a f_i)`, whose kernel is `Hom(M, N)` and whose
    /// cokernel is `Ext¹(M, N)`.
    fn intertwiner_system(&self, other: &QuiverRep) -> (Matrix, usize, usize) {
        let n = self.dims.len();
        let mut var_offset = vec![0; n + 1];
        for i in 0..n {
            var_offset[i + 1] = var_offset[i] + other.dims[i] * self.dims[i];
        }
        let vars = var_offset[n];
        // f_i is other.dims[i] × self.dims[i], variable index (r, c) ↦ off + r*cols + c
        let var = |i: usize, r: usize, c: usize| var_offset[i] + r * self.dims[i] + c;
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        for &(i, j) in self.quiver.arrows() {
            let ma = &self.maps[&(i, j)];
            let na = &other.maps[&(i, j)];
            // entry (r, c) of f_j M_a − N_a f_i, with r < n_j, c < m_i
            for r in 0..other.dims[j] {
                for c in 0..self.dims[i] {
                    let mut row = vec![Rational::zero(); vars];
                    for t in 0..self.dims[j] {
                        if !ma[(t, c)].is_zero() {
                            row[var(j, r, t)] += &ma[(t, c)];
                        }
                    }
                    for t in 0..other.dims[i] {
                        if !na[(r, t)].is_zero() {
                            row[var(i, t, c)] -= &na[(r, t)];
                        }
                    }
                    rows.push(row);
                }
            }
        }
        let eqs = rows.len();
        let m = if eqs == 0 { Matrix::zeros(0, vars) } else { Matrix::from_rows(rows) };
        (m, vars, eqs)
    }

    /// `dim Hom(self, other)`.
    pub fn hom_dim(&self, other: &QuiverRep) -> usize {
        let (m, vars, _) = self.intertwiner_system(other);
        vars - m.rank()
    }

    /// `dim Ext¹(self, other)` from the Euler form.
    pub fn ext1_dim(&self, other: &QuiverRep) -> i64 {
        self.hom_dim(other) as i64 - euler_form(&self.quiver, &self.dim_vector(), &other.dim_vector())
    }

    /// `dim Ext¹(self, other)` as the cokernel of the intertwiner map.
    pub fn ext1_dim_cokernel(&self, other: &QuiverRep) -> usize {
        let (m, _, eqs) = self.intertwiner_system(other);
        eqs - m.rank()
    }

    /// Whether the family `f = (f_i)` is a morphism `self → other`.
    pub fn is_morphism(&self, other: &QuiverRep, f: &[Matrix]) -> bool {
        self.quiver.arrows().iter().all(|&(i, j)| {
            f[j].mul(&self.maps[&(i, j)]) == other.maps[&(i, j)].mul(&f[i])
        })
    }

    /// Whether every matrix entry is `0` or `±1`.
    pub fn has_unit_entries(&self) -> bool {
        self.maps.values().all(|m| m.max_abs() <= Rational::one())
    }
}

/// `⟨a, b⟩ = Σ_i a_i b_i − Σ_{i→j} a_i b_j`.
pub fn euler_form(quiver: &OrientedQuiver, a: &[i64], b: &[i64]) -> i64 {
    let diag: i64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
    let off: i64 = quiver.arrows().iter().map(|&(i, j)| a[i] * b[j]).sum();
    diag - off
}

/// `dim E_β = Σ_{i→j} β_i β_j`.
pub fn rep_space_dim(quiver: &OrientedQuiver, beta: &[i64]) -> i64 {
    quiver.arrows().iter().map(|&(i, j)| beta[i] * beta[j]).sum()
}

/// `M(α)`: starting from the simple `S(i_t)` on the quiver where the
/// adapted source-peeling sequence produces `α`, reflect back at the
/// earlier letters, which are sinks at that point.
pub fn indecomposable(quiver: &OrientedQuiver, alpha: &[i64]) -> Result<QuiverRep> {
    let d = quiver.datum();
    if d.root_index(alpha).is_none() {
        return Err(Error::NotPositiveRoot(alpha.to_vec()));
    }
    let (word, gammas) = quiver.adapted_w0()?;
    let t = gammas
        .iter()
        .position(|g| g.as_slice() == alpha)
        .ok_or_else(|| Error::Internal(format!("{alpha:?} missing from the adapted sequence")))?;
    let mut quivers = vec![quiver.clone()];
    for &i in &word.letters[..t] {
        let next = quivers.last().expect("nonempty").reflect(i);
        quivers.push(next);
    }
    let mut rep = QuiverRep::simple(&quivers[t], word.letters[t]);
    for s in (0..t).rev() {
        rep = rep.reflect_at_sink(word.letters[s])?;
    }
    if rep.dim_vector() != alpha || rep.quiver() != quiver {
        return Err(Error::Internal(format!("BGP construction of M({alpha:?}) went astray")));
    }
    Ok(rep)
}

/// Identity family on a representation, for morphism checks.
pub fn identity_family(rep: &QuiverRep) -> Vec<Matrix> {
    rep.dims().iter().map(|&d| Matrix::identity(d)).collect()
}

/// A family of scalar multiples `c·id`.
pub fn scalar_family(rep: &QuiverRep, c: i64) -> Vec<Matrix> {
    rep.dims()
        .iter()
        .map(|&d| {
            let mut m = Matrix::identity(d);
            for k in 0..d {
                m[(k, k)] = rat(c);
            }
            m
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::CartanDatum;

    fn q(label: &str, orientation: &str) -> OrientedQuiver {
        OrientedQuiver::parse(CartanDatum::parse(label).unwrap(), orientation).unwrap()
    }

    #[test]
    fn simples_are_indecomposable() {
        let q = q("A3", "1>2,3>2");
        for i in 0..3 {
            let mut a = vec![0; 3];
            a[i] = 1;
            let m = indecomposable(&q, &a).unwrap();
            assert_eq!(m, QuiverRep::simple(&q, i));
        }
    }

    #[test]
    fn a2_examples() {
        let q = q("A2", "1>2");
        let m12 = indecomposable(&q, &[1, 1]).unwrap();
        assert_eq!(m12.dims(), &[1, 1]);
        assert_eq!(m12.map(0, 1).unwrap(), &Matrix::from_i64(1, 1, &[1]));
        let m2 = indecomposable(&q, &[0, 1]).unwrap();
        assert_eq!(m2.hom_dim(&m12), 1);
        assert_eq!(m12.hom_dim(&m2), 0);
        assert_eq!(m12.hom_dim(&m12), 1);
        assert!(m12.is_morphism(&m12, &identity_family(&m12)));
    }

    #[test]
    fn every_indecomposable_is_a_brick() {
        for (label, orientation) in [("A3", "1>2,2>3"), ("D4", "1>2,3>2,4>2"), ("A4", "2>1,2>3,4>3")] {
            let q = q(label, orientation);
            for r in q.datum().positive_roots().to_vec() {
                let m = indecomposable(&q, &r).unwrap();
                assert_eq!(m.hom_dim(&m), 1, "{label} {r:?}");
                assert_eq!(m.ext1_dim(&m), 0);
                assert_eq!(m.ext1_dim_cokernel(&m), 0);
                assert!(m.has_unit_entries());
            }
        }
    }

    #[test]
    fn reflect_requires_sink() {
        let q = q("A2", "1>2");
        assert_eq!(QuiverRep::simple(&q, 0).reflect_at_sink(0), Err(Error::NotSink(0)));
    }

    #[test]
    fn direct_sum_adds_homs() {
        let q = q("A2", "1>2");
        let a = indecomposable(&q, &[1, 0]).unwrap();
        let b = indecomposable(&q, &[0, 1]).unwrap();
        let s = a.direct_sum(&b);
        assert_eq!(s.hom_dim(&s), 2);
        assert_eq!(s.ext1_dim(&s), 1);
        assert_eq!(s.ext1_dim_cokernel(&s), 1);
        assert!(s.is_morphism(&s, &scalar_family(&s, 3)));
    }
}
