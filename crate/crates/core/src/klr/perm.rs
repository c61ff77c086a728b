//! Permutations of `{0, …, d−1}` and their reduced words.
//!
//! A permutation `σ` is stored as the sequence `σ·(0, 1, …, d−1)` under the
//! place action `s_k·(…, a, b, …) = (…, b, a, …)`. Left multiplication by
//! `s_k` swaps entries `k, k+1`; `σ·i` for a sequence `i` is
//! `(i[σ[0]], i[σ[1]], …)`.

use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Perm(pub Vec<u8>);

impl Perm {
    pub fn identity(d: usize) -> Self {
        Perm((0..d as u8).collect())
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(k, &v)| k == v as usize)
    }

    pub fn from_word(d: usize, word: &[usize]) -> Self {
        let mut p = Self::identity(d);
        for &k in word.iter().rev() {
            p.0.swap(k, k + 1);
        }
        p
    }

    /// `s_k σ`.
    pub fn left_mul(&self, k: usize) -> Self {
        let mut p = self.clone();
        p.0.swap(k, k + 1);
        p
    }

    /// Number of inversions, which is the Coxeter length.
    pub fn length(&self) -> usize {
        let v = &self.0;
        let mut n = 0;
        for a in 0..v.len() {
            for b in a + 1..v.len() {
                if v[a] > v[b] {
                    n += 1;
                }
            }
        }
        n
    }

    /// `ℓ(s_k σ) < ℓ(σ)`.
    pub fn is_left_descent(&self, k: usize) -> bool {
        self.0[k] > self.0[k + 1]
    }

    /// Lexicographically smallest reduced word: peel off the smallest left
    /// descent each time.
    pub fn canonical_word(&self) -> Vec<usize> {
        let mut p = self.clone();
        let mut word = Vec::with_capacity(self.length());
        while let Some(k) = (0..p.size().saturating_sub(1)).find(|&k| p.is_left_descent(k)) {
            word.push(k);
            p.0.swap(k, k + 1);
        }
        word
    }

    /// `σ·i`.
    pub fn act<T: Clone>(&self, seq: &[T]) -> Vec<T> {
        self.0.iter().map(|&k| seq[k as usize].clone()).collect()
    }

    /// The map on positions `k ↦ σ(k)`, so that `σ·i` carries entry `k` of
    /// `i` to place `σ(k)`.
    pub fn positions(&self) -> Vec<usize> {
        let mut out = vec![0; self.size()];
        for (place, &k) in self.0.iter().enumerate() {
            out[k as usize] = place;
        }
        out
    }

    pub fn all(d: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<u8> = (0..d as u8).collect();
        permute(&mut cur, 0, &mut out);
        out.sort();
        out
    }
}

fn permute(cur: &mut Vec<u8>, k: usize, out: &mut Vec<Perm>) {
    if k == cur.len() {
        out.push(Perm(cur.clone()));
        return;
    }
    for t in k..cur.len() {
        cur.swap(k, t);
        permute(cur, k + 1, out);
        cur.swap(k, t);
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.0.iter().map(|k| (k + 1).to_string()).collect();
        write!(f, "[{}]", v.join(" "))
    }
}

pub fn is_reduced(d: usize, word: &[usize]) -> bool {
    Perm::from_word(d, word).length() == word.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words_and_lengths() {
        let p = Perm::from_word(3, &[0, 1, 0]);
        assert_eq!(p, Perm(vec![2, 1, 0]));
        assert_eq!(p.length(), 3);
        assert_eq!(p.canonical_word(), vec![0, 1, 0]);
        assert_eq!(Perm::from_word(3, &[1, 0, 1]), p);
        assert!(!is_reduced(3, &[0, 0]));
        assert_eq!(Perm::all(4).len(), 24);
        for q in Perm::all(4) {
            assert_eq!(Perm::from_word(4, &q.canonical_word()), q);
            assert_eq!(q.canonical_word().len(), q.length());
        }
    }

    #[test]
    fn action_matches_swaps() {
        let seq = vec!['a', 'b', 'c'];
        assert_eq!(Perm::from_word(3, &[0]).act(&seq), vec!['b', 'a', 'c']);
        let p = Perm::from_word(3, &[0, 1]);
        assert_eq!(p.act(&seq), vec!['c', 'a', 'b']);
        let pos = p.positions();
        for k in 0..3 {
            assert_eq!(p.act(&seq)[pos[k]], seq[k]);
        }
    }
}
