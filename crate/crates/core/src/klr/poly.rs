//! Sparse multivariate polynomials over `ℚ` in a fixed number of variables.

use crate::linalg::{rat, Rational};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

pub type Monomial = Vec<u32>;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(vec![0; nvars], Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn monomial(mono: Monomial, c: Rational) -> Self {
        let nvars = mono.len();
        let mut p = Self::zero(nvars);
        p.add_term(mono, c);
        p
    }

    /// The variable `x_k` (0-based).
    pub fn var(nvars: usize, k: usize) -> Self {
        let mut m = vec![0; nvars];
        m[k] = 1;
        Self::monomial(m, Rational::one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }

    pub fn add_term(&mut self, mono: Monomial, c: Rational) {
        debug_assert_eq!(mono.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, k: &Rational) -> Poly {
        if k.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect() }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(mono_mul(a, b), ca * cb);
            }
        }
        out
    }

    pub fn mul_monomial(&self, mono: &[u32]) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (mono_mul(m, mono), c.clone())).collect(),
        }
    }

    /// `s_k f`: exchange `x_k` and `x_{k+1}`.
    pub fn swap(&self, k: usize) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut m = m.clone();
                    m.swap(k, k + 1);
                    (m, c.clone())
                })
                .collect(),
        }
    }

    /// Substitution `x_k ↦ x_{σ(k)}`.
    pub fn permute_vars(&self, sigma: &[usize]) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut n = vec![0; self.nvars];
            for (k, &e) in m.iter().enumerate() {
                n[sigma[k]] += e;
            }
            out.add_term(n, c.clone());
        }
        out
    }

    /// Divided difference `∂_k f = (f − s_k f)/(x_k − x_{k+1})`.
    pub fn divided_difference(&self, k: usize) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            let (a, b) = (m[k], m[k + 1]);
            if a == b {
                continue;
            }
            let (lo, hi, sign) = if a > b { (b, a, c.clone()) } else { (a, b, -c.clone()) };
            // x_k^hi x_{k+1}^lo − x_k^lo x_{k+1}^hi = (x_k − x_{k+1}) Σ_t x_k^{hi−1−t+lo}·x_{k+1}^{lo+t}
            for t in 0..(hi - lo) {
                let mut n = m.clone();
                n[k] = hi - 1 - t;
                n[k + 1] = lo + t;
                out.add_term(n, sign.clone());
            }
        }
        out
    }

    /// Total degree of the highest term; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(|m| m.iter().sum::<u32>());
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    /// Invariance under every permutation of the variables in `block`.
    pub fn is_symmetric_in(&self, block: std::ops::Range<usize>) -> bool {
        if block.len() < 2 {
            return true;
        }
        block.clone().take(block.len() - 1).all(|k| self.swap(k) == *self)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_symmetric_in(0..self.nvars)
    }

    /// Elementary symmetric polynomial `e_r(x_1, …, x_n)`.
    pub fn elementary(nvars: usize, r: usize) -> Poly {
        let mut out = Poly::zero(nvars);
        for subset in 0u64..(1 << nvars) {
            if subset.count_ones() as usize == r {
                let m = (0..nvars).map(|k| ((subset >> k) & 1) as u32).collect();
                out.add_term(m, Rational::one());
            }
        }
        out
    }

    pub fn eval_i64(&self, point: &[i64]) -> Rational {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (k, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    v *= rat(point[k]);
                }
            }
            total += v;
        }
        total
    }
}

pub fn mono_mul(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// All monomials in `nvars` variables of total degree `deg`, in
/// lexicographic order.
pub fn monomials_of_degree(nvars: usize, deg: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0; nvars];
    fn rec(k: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if k + 1 == cur.len() {
            cur[k] = left;
            out.push(cur.clone());
            return;
        }
        for e in (0..=left).rev() {
            cur[k] = e;
            rec(k + 1, left - e, cur, out);
        }
    }
    if nvars == 0 {
        if deg == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(0, deg, &mut cur, &mut out);
    out
}

/// `binom(n + k − 1, k − 1)`: monomials of degree `n` in `k` variables.
pub fn count_monomials(nvars: usize, deg: u32) -> u64 {
    if nvars == 0 {
        return u64::from(deg == 0);
    }
    binomial(u64::from(deg) + nvars as u64 - 1, nvars as u64 - 1)
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, t| acc * (n - t) / (t + 1))
}

pub fn fmt_monomial(m: &[u32]) -> String {
    let parts: Vec<String> = m
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(k, &e)| if e == 1 { format!("x{}", k + 1) } else { format!("x{}^{e}", k + 1) })
        .collect();
    parts.join("*")
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c < &Rational::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            let sign = if neg { "-" } else if k > 0 { "+" } else { "" };
            let mono = fmt_monomial(m);
            match (mono.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{sign}{mag}")?,
                (false, true) => write!(f, "{sign}{mono}")?,
                (false, false) => write!(f, "{sign}{mag}*{mono}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divided_difference_basics() {
        let x1 = Poly::var(2, 0);
        let x2 = Poly::var(2, 1);
        assert_eq!(x1.divided_difference(0), Poly::one(2));
        assert_eq!(x2.divided_difference(0), Poly::one(2).scale(&rat(-1)));
        let sym = x1.mul(&x2);
        assert!(sym.divided_difference(0).is_zero());
        let cube = x1.mul(&x1).mul(&x1);
        // (x1³ − x2³)/(x1 − x2) = x1² + x1x2 + x2²
        assert_eq!(cube.divided_difference(0).terms().len(), 3);
    }

    #[test]
    fn leibniz_rule() {
        let f = Poly::var(3, 0).mul(&Poly::var(3, 2)).add(&Poly::var(3, 1));
        let g = Poly::var(3, 0).mul(&Poly::var(3, 0));
        let lhs = f.mul(&g).divided_difference(0);
        let rhs = f.divided_difference(0).mul(&g).add(&f.swap(0).mul(&g.divided_difference(0)));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials_of_degree(3, 2).len() as u64, count_monomials(3, 2));
        assert_eq!(count_monomials(4, 10), 286);
        assert_eq!(monomials_of_degree(0, 0), vec![Vec::<u32>::new()]);
        assert_eq!(count_monomials(0, 1), 0);
    }

    #[test]
    fn elementary_is_symmetric() {
        for r in 0..=4 {
            assert!(Poly::elementary(4, r).is_symmetric());
        }
        assert!(!Poly::var(2, 0).is_symmetric());
        assert_eq!(Poly::var(2, 0).add(&Poly::var(2, 1)).to_string(), "x2+x1");
    }
}
