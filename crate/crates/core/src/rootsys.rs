//! Simply-laced root systems: Cartan data, roots, weights and the Weyl group.
//!
//! Vertices are `0..n` internally. Text and JSON surfaces shift to the
//! 1-based labels used in Dynkin diagrams (Bourbaki numbering).
//!
//! Weyl group elements are stored as permutations of the finite root set
//! `R`; index `k < N` is the `k`-th positive root and `N + k` its negative.

use crate::error::{Error, Result};
use crate::linalg::{rat, Matrix, Rational};
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

/// The ADE label of a connected simply-laced Dynkin diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DynkinType {
    A(usize),
    D(usize),
    E(usize),
}

impl DynkinType {
    pub fn rank(self) -> usize {
        match self {
            DynkinType::A(n) | DynkinType::D(n) | DynkinType::E(n) => n,
        }
    }

    /// Every ADE type up to the given rank, in a fixed order.
    pub fn all_up_to_rank(max: usize) -> Vec<DynkinType> {
        let mut out = Vec::new();
        for n in 1..=max {
            out.push(DynkinType::A(n));
            if n >= 4 {
                out.push(DynkinType::D(n));
            }
            if (6..=8).contains(&n) {
                out.push(DynkinType::E(n));
            }
        }
        out
    }

    /// Bourbaki edge list (0-based).
    fn edges(self) -> Result<Vec<(usize, usize)>> {
        match self {
            DynkinType::A(n) if n >= 1 => Ok((1..n).map(|i| (i - 1, i)).collect()),
            DynkinType::D(n) if n >= 4 => {
                let mut e: Vec<_> = (1..n - 2).map(|i| (i - 1, i)).collect();
                e.push((n - 3, n - 2));
                e.push((n - 3, n - 1));
                Ok(e)
            }
            DynkinType::E(n) if (6..=8).contains(&n) => {
                // 1-3-4-5-6(-7-8) with 2 attached to 4
                let mut e = vec![(0, 2), (2, 3), (3, 4), (1, 3)];
                for k in 5..n {
                    e.push((k - 1, k));
                }
                Ok(e)
            }
            other => Err(Error::UnknownType(other.to_string())),
        }
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DynkinType::A(n) => write!(f, "A{n}"),
            DynkinType::D(n) => write!(f, "D{n}"),
            DynkinType::E(n) => write!(f, "E{n}"),
        }
    }
}

impl FromStr for DynkinType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let bad = || Error::UnknownType(s.to_string());
        let mut chars = t.chars();
        let letter = chars.next().ok_or_else(bad)?.to_ascii_uppercase();
        let rest = chars.as_str().trim_start_matches('_');
        let n: usize = rest.parse().map_err(|_| bad())?;
        let ty = match letter {
            'A' if n >= 1 => DynkinType::A(n),
            'D' if n >= 4 => DynkinType::D(n),
            'E' if (6..=8).contains(&n) => DynkinType::E(n),
            _ => return Err(bad()),
        };
        Ok(ty)
    }
}

/// Which basis a [`WeightVector`] is expressed in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    /// Fundamental weights `ϖ_i`.
    Omega,
    /// Simple roots `α_i`.
    Alpha,
}

/// An element of the weight lattice with an explicit basis tag.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightVector {
    pub basis: Basis,
    pub coords: Vec<i64>,
}

impl WeightVector {
    pub fn alpha(coords: Vec<i64>) -> Self {
        Self { basis: Basis::Alpha, coords }
    }

    pub fn omega(coords: Vec<i64>) -> Self {
        Self { basis: Basis::Omega, coords }
    }

    pub fn zero(basis: Basis, n: usize) -> Self {
        Self { basis, coords: vec![0; n] }
    }

    pub fn simple_root(n: usize, i: usize) -> Self {
        let mut c = vec![0; n];
        c[i] = 1;
        Self::alpha(c)
    }

    pub fn fundamental(n: usize, i: usize) -> Self {
        let mut c = vec![0; n];
        c[i] = 1;
        Self::omega(c)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn height(&self) -> i64 {
        debug_assert_eq!(self.basis, Basis::Alpha);
        self.coords.iter().sum()
    }
}

/// A word in the simple reflections.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeylWord {
    pub letters: Vec<usize>,
}

impl WeylWord {
    pub fn new(letters: Vec<usize>) -> Self {
        Self { letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

/// A Weyl group element as a permutation of the root set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    perm: Vec<u32>,
}

impl WeylElement {
    /// Image of root index `r`.
    pub fn apply_index(&self, r: usize) -> usize {
        self.perm[r] as usize
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        WeylElement {
            perm: other.perm.iter().map(|&r| self.perm[r as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> WeylElement {
        let mut inv = vec![0u32; self.perm.len()];
        for (r, &img) in self.perm.iter().enumerate() {
            inv[img as usize] = r as u32;
        }
        WeylElement { perm: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(r, &img)| r == img as usize)
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.perm
    }
}

struct Inner {
    kind: DynkinType,
    n: usize,
    adjacency: Vec<Vec<bool>>,
    cartan: Vec<Vec<i64>>,
    positive: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
    reflections: Vec<WeylElement>,
    inverse_cartan: Matrix,
}

/// An ADE Cartan datum together with its (precomputed) positive roots.
///
/// Cheap to clone; the root data is shared.
#[derive(Clone)]
pub struct CartanDatum(Arc<Inner>);

impl fmt::Debug for CartanDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CartanDatum({})", self.0.kind)
    }
}

impl PartialEq for CartanDatum {
    fn eq(&self, other: &Self) -> bool {
        self.0.kind == other.0.kind && self.0.adjacency == other.0.adjacency
    }
}

impl Eq for CartanDatum {}

impl CartanDatum {
    /// Standard (Bourbaki-labelled) datum of the given type.
    pub fn new(kind: DynkinType) -> Result<Self> {
        let n = kind.rank();
        let mut adj = vec![vec![false; n]; n];
        for (a, b) in kind.edges()? {
            adj[a][b] = true;
            adj[b][a] = true;
        }
        Self::build(kind, adj)
    }

    pub fn parse(label: &str) -> Result<Self> {
        Self::new(label.parse()?)
    }

    /// Datum from an arbitrary labelled graph; rejects anything that is not
    /// a connected ADE tree.
    pub fn from_adjacency(adjacency: Vec<Vec<bool>>) -> Result<Self> {
        let kind = classify(&adjacency)?;
        Self::build(kind, adjacency)
    }

    fn build(kind: DynkinType, adjacency: Vec<Vec<bool>>) -> Result<Self> {
        let n = adjacency.len();
        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            2
                        } else if adjacency[i][j] {
                            -1
                        } else {
                            0
                        }
                    })
                    .collect()
            })
            .collect();
        let flat: Vec<i64> = cartan.iter().flatten().copied().collect();
        let cm = Matrix::from_i64(n, n, &flat);
        let mut aug = Matrix::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug[(r, c)] = cm[(r, c)].clone();
            }
            aug[(r, n + r)] = rat(1);
        }
        aug.rref_in_place();
        let mut inverse_cartan = Matrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inverse_cartan[(r, c)] = aug[(r, n + c)].clone();
            }
        }

        let positive = enumerate_positive_roots(&cartan);
        let index: HashMap<Vec<i64>, usize> = positive
            .iter()
            .enumerate()
            .map(|(k, r)| (r.clone(), k))
            .collect();
        let big_n = positive.len();
        let lookup = |v: &Vec<i64>| -> usize {
            if let Some(&k) = index.get(v) {
                k
            } else {
                let neg: Vec<i64> = v.iter().map(|c| -c).collect();
                big_n + index[&neg]
            }
        };
        let reflections = (0..n)
            .map(|i| {
                let perm = (0..2 * big_n)
                    .map(|r| {
                        let v = if r < big_n {
                            positive[r].clone()
                        } else {
                            positive[r - big_n].iter().map(|c| -c).collect()
                        };
                        lookup(&reflect_alpha(&cartan, i, &v)) as u32
                    })
                    .collect();
                WeylElement { perm }
            })
            .collect();
        Ok(CartanDatum(Arc::new(Inner {
            kind,
            n,
            adjacency,
            cartan,
            positive,
            index,
            reflections,
            inverse_cartan,
        })))
    }

    pub fn kind(&self) -> DynkinType {
        self.0.kind
    }

    pub fn rank(&self) -> usize {
        self.0.n
    }

    pub fn adjacency(&self) -> &[Vec<bool>] {
        &self.0.adjacency
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.0.adjacency[i][j]
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.0.n).filter(move |&j| self.0.adjacency[i][j])
    }

    /// Unordered edges `(i, j)` with `i < j`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.0.n;
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.0.adjacency[i][j] {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.0.cartan
    }

    pub fn cartan_entry(&self, i: usize, j: usize) -> i64 {
        self.0.cartan[i][j]
    }

    pub fn check_vertex(&self, i: usize) -> Result<()> {
        if i < self.0.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: i, rank: self.0.n })
        }
    }

    /// Positive roots in α-coordinates, ordered by height and then
    /// reverse-lexicographically, so that index `i < n` is `α_i`.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.0.positive
    }

    pub fn num_positive_roots(&self) -> usize {
        self.0.positive.len()
    }

    pub fn root_index(&self, alpha: &[i64]) -> Option<usize> {
        self.0.index.get(alpha).copied()
    }

    /// Index of `alpha` in the full root set (negatives offset by `N`).
    pub fn signed_root_index(&self, alpha: &[i64]) -> Option<usize> {
        if let Some(k) = self.root_index(alpha) {
            return Some(k);
        }
        let neg: Vec<i64> = alpha.iter().map(|c| -c).collect();
        self.root_index(&neg).map(|k| k + self.num_positive_roots())
    }

    /// α-coordinates of a signed root index.
    pub fn root_coords(&self, r: usize) -> Vec<i64> {
        let big_n = self.num_positive_roots();
        if r < big_n {
            self.0.positive[r].clone()
        } else {
            self.0.positive[r - big_n].iter().map(|c| -c).collect()
        }
    }

    pub fn is_positive_index(&self, r: usize) -> bool {
        r < self.num_positive_roots()
    }

    /// `r ↦ -r` on signed root indices.
    pub fn negate_index(&self, r: usize) -> usize {
        let big_n = self.num_positive_roots();
        if r < big_n {
            r + big_n
        } else {
            r - big_n
        }
    }

    pub fn reflection(&self, i: usize) -> &WeylElement {
        &self.0.reflections[i]
    }

    pub fn identity_element(&self) -> WeylElement {
        WeylElement {
            perm: (0..2 * self.num_positive_roots() as u32).collect(),
        }
    }

    /// `s_{l_1} ∘ s_{l_2} ∘ ⋯` as a root permutation.
    pub fn element_from_word(&self, word: &[usize]) -> WeylElement {
        word.iter().fold(self.identity_element(), |acc, &i| {
            acc.compose(self.reflection(i))
        })
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self, w: &WeylElement) -> usize {
        let big_n = self.num_positive_roots();
        (0..big_n).filter(|&r| w.apply_index(r) >= big_n).count()
    }

    pub fn is_reduced(&self, word: &WeylWord) -> bool {
        self.length(&self.element_from_word(&word.letters)) == word.len()
    }

    /// Applies `w` to an α-basis vector by linearity over the simple roots.
    pub fn apply_element(&self, w: &WeylElement, alpha_coords: &[i64]) -> Vec<i64> {
        let n = self.rank();
        let mut out = vec![0; n];
        for (i, &c) in alpha_coords.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let img = self.root_coords(w.apply_index(i));
            for j in 0..n {
                out[j] += c * img[j];
            }
        }
        out
    }

    /// `λ(h_i)`.
    pub fn pairing(&self, i: usize, w: &WeightVector) -> i64 {
        match w.basis {
            Basis::Omega => w.coords[i],
            Basis::Alpha => (0..self.rank()).map(|j| w.coords[j] * self.0.cartan[j][i]).sum(),
        }
    }

    /// `s_i(λ) = λ − λ(h_i) α_i`, in the basis of the input.
    pub fn simple_reflection(&self, i: usize, w: &WeightVector) -> Result<WeightVector> {
        self.check_vertex(i)?;
        if w.coords.len() != self.rank() {
            return Err(Error::DimensionMismatch { expected: self.rank(), got: w.coords.len() });
        }
        let c = self.pairing(i, w);
        let mut coords = w.coords.clone();
        match w.basis {
            Basis::Alpha => coords[i] -= c,
            Basis::Omega => {
                for (j, x) in coords.iter_mut().enumerate() {
                    *x -= c * self.0.cartan[i][j];
                }
            }
        }
        Ok(WeightVector { basis: w.basis, coords })
    }

    pub fn to_omega(&self, w: &WeightVector) -> WeightVector {
        match w.basis {
            Basis::Omega => w.clone(),
            Basis::Alpha => {
                let n = self.rank();
                let coords = (0..n)
                    .map(|j| (0..n).map(|i| w.coords[i] * self.0.cartan[i][j]).sum())
                    .collect();
                WeightVector::omega(coords)
            }
        }
    }

    /// Rational α-coordinates of any weight.
    pub fn alpha_coords_rational(&self, w: &WeightVector) -> Vec<Rational> {
        match w.basis {
            Basis::Alpha => w.coords.iter().map(|&c| rat(c)).collect(),
            Basis::Omega => {
                // ϖ_j = Σ_i (A^{-1})_{ji} α_i
                let n = self.rank();
                (0..n)
                    .map(|i| {
                        (0..n).fold(Rational::zero(), |acc, j| {
                            acc + &self.0.inverse_cartan[(j, i)] * rat(w.coords[j])
                        })
                    })
                    .collect()
            }
        }
    }

    /// α-basis form when the weight lies in the root lattice.
    pub fn to_alpha(&self, w: &WeightVector) -> Option<WeightVector> {
        let q = self.alpha_coords_rational(w);
        if q.iter().all(|x| x.is_integer()) {
            Some(WeightVector::alpha(
                q.iter().map(|x| i64::try_from(x.to_integer()).expect("small")).collect(),
            ))
        } else {
            None
        }
    }

    /// `λ ≤ µ` iff `µ − λ ∈ 𝒬⁺`.
    pub fn dominance_leq(&self, lambda: &WeightVector, mu: &WeightVector) -> bool {
        let a = self.alpha_coords_rational(lambda);
        let b = self.alpha_coords_rational(mu);
        a.iter()
            .zip(&b)
            .all(|(x, y)| {
                let d = y - x;
                d.is_integer() && !d.is_negative()
            })
    }

    /// A reduced word for the longest element `w_0`, built greedily.
    pub fn longest_element(&self) -> WeylWord {
        let big_n = self.num_positive_roots();
        let mut w = self.identity_element();
        let mut letters = Vec::new();
        // w s_i is longer iff w(α_i) > 0
        while let Some(i) = (0..self.rank()).find(|&i| w.apply_index(i) < big_n) {
            w = w.compose(self.reflection(i));
            letters.push(i);
        }
        WeylWord::new(letters)
    }

    pub fn longest_element_perm(&self) -> WeylElement {
        self.element_from_word(&self.longest_element().letters)
    }

    /// Order of the Coxeter element `s_1 s_2 ⋯ s_n` on the root set.
    pub fn coxeter_number(&self) -> usize {
        let word: Vec<usize> = (0..self.rank()).collect();
        element_order(&self.element_from_word(&word))
    }

    /// `i ↦ i*` with `α_{i*} = −w_0 α_i`.
    pub fn bar_involution(&self, i: usize) -> usize {
        let w0 = self.longest_element_perm();
        let img = self.negate_index(w0.apply_index(i));
        debug_assert!(img < self.rank(), "−w_0 must permute simple roots");
        img
    }

    pub fn bar_involution_table(&self) -> Vec<usize> {
        let w0 = self.longest_element_perm();
        (0..self.rank())
            .map(|i| self.negate_index(w0.apply_index(i)))
            .collect()
    }
}

pub fn element_order(w: &WeylElement) -> usize {
    let mut cur = w.clone();
    let mut k = 1;
    while !cur.is_identity() {
        cur = cur.compose(w);
        k += 1;
    }
    k
}

fn reflect_alpha(cartan: &[Vec<i64>], i: usize, v: &[i64]) -> Vec<i64> {
    let c: i64 = (0..v.len()).map(|j| v[j] * cartan[j][i]).sum();
    let mut out = v.to_vec();
    out[i] -= c;
    out
}

/// Breadth-first closure of the simple roots under all simple reflections,
/// restricted to `𝒬⁺`.
fn enumerate_positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue = VecDeque::new();
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(v) = queue.pop_front() {
        for i in 0..n {
            let w = reflect_alpha(cartan, i, &v);
            if w.iter().all(|&c| c >= 0) && !w.iter().all(|&c| c == 0) && seen.insert(w.clone()) {
                queue.push_back(w);
            }
        }
    }
    let mut roots: Vec<Vec<i64>> = seen.into_iter().collect();
    roots.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    roots
}

fn classify(adj: &[Vec<bool>]) -> Result<DynkinType> {
    let n = adj.len();
    if n == 0 {
        return Err(Error::NotAde("empty graph".into()));
    }
    for (i, row) in adj.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NotAde("adjacency matrix is not square".into()));
        }
        if row[i] {
            return Err(Error::NotAde(format!("self-loop at vertex {}", i + 1)));
        }
        for j in 0..n {
            if adj[i][j] != adj[j][i] {
                return Err(Error::NotAde("adjacency matrix is not symmetric".into()));
            }
        }
    }
    let edges: usize = adj.iter().flatten().filter(|&&b| b).count() / 2;
    if edges != n - 1 {
        return Err(Error::NotAde("graph is not a tree".into()));
    }
    // connected + n-1 edges => tree
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for w in 0..n {
            if adj[v][w] && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(Error::NotAde("graph is not connected".into()));
    }
    let degree = |v: usize| adj[v].iter().filter(|&&b| b).count();
    let branch: Vec<usize> = (0..n).filter(|&v| degree(v) >= 3).collect();
    match branch.as_slice() {
        [] => Ok(DynkinType::A(n)),
        [c] if degree(*c) == 3 => {
            let mut arms: Vec<usize> = (0..n)
                .filter(|&w| adj[*c][w])
                .map(|start| {
                    let (mut prev, mut cur, mut len) = (*c, start, 1);
                    loop {
                        let next = (0..n).find(|&x| adj[cur][x] && x != prev);
                        match next {
                            Some(x) => {
                                prev = cur;
                                cur = x;
                                len += 1;
                            }
                            None => break len,
                        }
                    }
                })
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, k] => Ok(DynkinType::D(k + 3)),
                [1, 2, 2] => Ok(DynkinType::E(6)),
                [1, 2, 3] => Ok(DynkinType::E(7)),
                [1, 2, 4] => Ok(DynkinType::E(8)),
                _ => Err(Error::NotAde(format!("branch arms {arms:?} are not of type D/E"))),
            }
        }
        _ => Err(Error::NotAde("more than one branch point or a vertex of degree > 3".into())),
    }
}

/// JSON form of a Cartan datum (1-based labels are implicit in row order).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CartanDatumJson {
    #[serde(rename = "type")]
    pub type_label: String,
    pub n: usize,
    pub adjacency: Vec<Vec<u8>>,
    pub cartan: Vec<Vec<i64>>,
}

impl From<&CartanDatum> for CartanDatumJson {
    fn from(d: &CartanDatum) -> Self {
        Self {
            type_label: d.kind().to_string(),
            n: d.rank(),
            adjacency: d
                .adjacency()
                .iter()
                .map(|r| r.iter().map(|&b| u8::from(b)).collect())
                .collect(),
            cartan: d.cartan_matrix().to_vec(),
        }
    }
}

impl TryFrom<CartanDatumJson> for CartanDatum {
    type Error = Error;
    fn try_from(j: CartanDatumJson) -> Result<Self> {
        let adj: Vec<Vec<bool>> = j.adjacency.iter().map(|r| r.iter().map(|&b| b != 0).collect()).collect();
        if adj.len() != j.n {
            return Err(Error::DimensionMismatch { expected: j.n, got: adj.len() });
        }
        let d = CartanDatum::from_adjacency(adj)?;
        if d.cartan_matrix() != j.cartan.as_slice() {
            return Err(Error::NotAde("cartan matrix disagrees with adjacency".into()));
        }
        Ok(d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(label: &str) -> CartanDatum {
        CartanDatum::parse(label).unwrap()
    }

    #[test]
    fn cartan_examples() {
        assert_eq!(d("A2").cartan_matrix(), &[vec![2, -1], vec![-1, 2]]);
        assert_eq!(d("A1").cartan_matrix(), &[vec![2]]);
        assert_eq!(d("D4").cartan_matrix()[1], vec![-1, 2, -1, -1]);
    }

    #[test]
    fn rejects_non_ade() {
        // a 4-cycle
        let mut adj = vec![vec![false; 4]; 4];
        for (a, b) in [(0, 1), (1, 2), (2, 3), (3, 0)] {
            adj[a][b] = true;
            adj[b][a] = true;
        }
        assert!(matches!(CartanDatum::from_adjacency(adj), Err(Error::NotAde(_))));
        // star with four arms (affine D4)
        let mut adj = vec![vec![false; 5]; 5];
        for k in 1..5 {
            adj[0][k] = true;
            adj[k][0] = true;
        }
        assert!(CartanDatum::from_adjacency(adj).is_err());
        assert!("E9".parse::<DynkinType>().is_err());
        assert!("D3".parse::<DynkinType>().is_err());
    }

    #[test]
    fn classifies_relabelled_e6() {
        let e6 = d("E6");
        // reverse the labels
        let n = 6;
        let adj: Vec<Vec<bool>> = (0..n)
            .map(|i| (0..n).map(|j| e6.adjacent(n - 1 - i, n - 1 - j)).collect())
            .collect();
        assert_eq!(CartanDatum::from_adjacency(adj).unwrap().kind(), DynkinType::E(6));
    }

    #[test]
    fn reflection_examples() {
        let a2 = d("A2");
        let a1 = WeightVector::alpha(vec![1, 0]);
        assert_eq!(a2.simple_reflection(0, &a1).unwrap(), WeightVector::alpha(vec![-1, 0]));
        assert_eq!(a2.simple_reflection(1, &a1).unwrap(), WeightVector::alpha(vec![1, 1]));
        let w1 = WeightVector::fundamental(2, 0);
        assert_eq!(a2.simple_reflection(1, &w1).unwrap(), w1);
        assert!(a2.simple_reflection(2, &w1).is_err());
    }

    #[test]
    fn root_counts() {
        assert_eq!(d("A2").positive_roots(), &[vec![1, 0], vec![0, 1], vec![1, 1]]);
        assert_eq!(d("A1").positive_roots(), &[vec![1]]);
        for (label, count) in [("D4", 12), ("E6", 36), ("E7", 63), ("E8", 120), ("A5", 15)] {
            let dt = d(label);
            assert_eq!(dt.num_positive_roots(), count, "{label}");
            assert_eq!(2 * count, dt.rank() * dt.coxeter_number(), "{label}");
        }
    }

    #[test]
    fn longest_element_and_star() {
        let a2 = d("A2");
        assert_eq!(a2.bar_involution(0), 1);
        assert_eq!(a2.coxeter_number(), 3);
        let d4 = d("D4");
        assert!((0..4).all(|i| d4.bar_involution(i) == i));
        let w0 = d4.longest_element_perm();
        // w_0 = -id in D4
        let big_n = d4.num_positive_roots();
        assert!((0..2 * big_n).all(|r| w0.apply_index(r) == d4.negate_index(r)));
        let e6 = d("E6");
        let star = e6.bar_involution_table();
        assert_eq!(star, vec![5, 1, 4, 3, 2, 0]);
    }

    #[test]
    fn dominance_examples() {
        let a2 = d("A2");
        let l = WeightVector::omega(vec![1, 0]);
        assert!(a2.dominance_leq(&l, &l));
        assert!(a2.dominance_leq(&WeightVector::alpha(vec![0, 0]), &WeightVector::alpha(vec![1, 1])));
        let (x, y) = (WeightVector::alpha(vec![1, 0]), WeightVector::alpha(vec![0, 1]));
        assert!(!a2.dominance_leq(&x, &y) && !a2.dominance_leq(&y, &x));
        // ϖ_1 and ϖ_2 differ by a non-root-lattice vector
        assert!(!a2.dominance_leq(&WeightVector::fundamental(2, 0), &WeightVector::fundamental(2, 1)));
    }

    #[test]
    fn basis_round_trip() {
        let e7 = d("E7");
        for r in e7.positive_roots() {
            let w = WeightVector::alpha(r.clone());
            assert_eq!(e7.to_alpha(&e7.to_omega(&w)).unwrap(), w);
        }
        assert!(e7.to_alpha(&WeightVector::fundamental(7, 1)).is_none());
    }

    #[test]
    fn json_round_trip() {
        let dt = d("D5");
        let j = serde_json::to_string(&CartanDatumJson::from(&dt)).unwrap();
        let back: CartanDatumJson = serde_json::from_str(&j).unwrap();
        assert_eq!(CartanDatum::try_from(back).unwrap(), dt);
    }
}
