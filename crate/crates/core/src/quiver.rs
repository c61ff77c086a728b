//! Orientations of Dynkin diagrams, height functions and adapted words.

use crate::error::{Error, Result};
use crate::rootsys::{CartanDatum, WeylElement, WeylWord};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt::Write as _;

/// A Dynkin quiver: a Cartan datum with one arrow per edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedQuiver {
    datum: CartanDatum,
    arrows: BTreeSet<(usize, usize)>,
}

/// Integer labels with `ξ_j = ξ_i − 1` along every arrow `i → j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HeightFunction {
    pub xi: Vec<i64>,
}

impl OrientedQuiver {
    pub fn new(datum: CartanDatum, arrows: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let arrows: BTreeSet<(usize, usize)> = arrows.into_iter().collect();
        let n = datum.rank();
        for &(a, b) in &arrows {
            if a >= n || b >= n {
                return Err(Error::BadOrientation(format!("arrow {}>{} out of range", a + 1, b + 1)));
            }
            if !datum.adjacent(a, b) {
                return Err(Error::BadOrientation(format!("{}>{} is not an edge", a + 1, b + 1)));
            }
            if arrows.contains(&(b, a)) {
                return Err(Error::BadOrientation(format!("edge {}-{} oriented twice", a + 1, b + 1)));
            }
        }
        for (a, b) in datum.edges() {
            if !arrows.contains(&(a, b)) && !arrows.contains(&(b, a)) {
                return Err(Error::BadOrientation(format!("edge {}-{} has no arrow", a + 1, b + 1)));
            }
        }
        Ok(Self { datum, arrows })
    }

    /// Every edge oriented from the smaller to the larger label.
    pub fn standard(datum: CartanDatum) -> Self {
        let arrows = datum.edges();
        Self { datum, arrows: arrows.into_iter().collect() }
    }

    /// All `2^{n-1}` orientations, in a fixed order.
    pub fn all_orientations(datum: &CartanDatum) -> Vec<Self> {
        let edges = datum.edges();
        (0..1u64 << edges.len())
            .map(|mask| {
                let arrows = edges
                    .iter()
                    .enumerate()
                    .map(|(k, &(a, b))| if mask >> k & 1 == 0 { (a, b) } else { (b, a) })
                    .collect();
                Self { datum: datum.clone(), arrows }
            })
            .collect()
    }

    /// Parses `"1>2,3>2"` (1-based). An empty string is only valid for `A1`.
    pub fn parse(datum: CartanDatum, orientation: &str) -> Result<Self> {
        let mut arrows = Vec::new();
        for part in orientation.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (a, b) = if let Some((a, b)) = part.split_once('>') {
                (a, b)
            } else if let Some((b, a)) = part.split_once('<') {
                (a, b)
            } else {
                return Err(Error::BadOrientation(format!("cannot parse arrow `{part}`")));
            };
            let parse = |s: &str| -> Result<usize> {
                let v: usize = s
                    .trim()
                    .parse()
                    .map_err(|_| Error::BadOrientation(format!("bad vertex `{s}`")))?;
                if v == 0 {
                    return Err(Error::BadOrientation("vertices are 1-based".into()));
                }
                Ok(v - 1)
            };
            arrows.push((parse(a)?, parse(b)?));
        }
        Self::new(datum, arrows)
    }

    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    pub fn arrows(&self) -> &BTreeSet<(usize, usize)> {
        &self.arrows
    }

    pub fn has_arrow(&self, from: usize, to: usize) -> bool {
        self.arrows.contains(&(from, to))
    }

    /// Vertices with no incoming arrow.
    pub fn sources(&self) -> Vec<usize> {
        (0..self.rank())
            .filter(|&i| !self.arrows.iter().any(|&(_, b)| b == i))
            .collect()
    }

    /// Vertices with no outgoing arrow.
    pub fn sinks(&self) -> Vec<usize> {
        (0..self.rank())
            .filter(|&i| !self.arrows.iter().any(|&(a, _)| a == i))
            .collect()
    }

    pub fn is_source(&self, i: usize) -> bool {
        !self.arrows.iter().any(|&(_, b)| b == i)
    }

    pub fn is_sink(&self, i: usize) -> bool {
        !self.arrows.iter().any(|&(a, _)| a == i)
    }

    /// `s_i(Q)`: every arrow incident to `i` reversed.
    pub fn reflect(&self, i: usize) -> Self {
        let arrows = self
            .arrows
            .iter()
            .map(|&(a, b)| if a == i || b == i { (b, a) } else { (a, b) })
            .collect();
        Self { datum: self.datum.clone(), arrows }
    }

    /// A numbering with `a < b` whenever `i_a → i_b`; ties broken by the
    /// smallest label.
    pub fn adapted_numbering(&self) -> Vec<usize> {
        let n = self.rank();
        let mut indeg = vec![0usize; n];
        for &(_, b) in &self.arrows {
            indeg[b] += 1;
        }
        let mut ready: BTreeSet<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = ready.pop_first() {
            order.push(v);
            for &(a, b) in &self.arrows {
                if a == v {
                    indeg[b] -= 1;
                    if indeg[b] == 0 {
                        ready.insert(b);
                    }
                }
            }
        }
        debug_assert_eq!(order.len(), n, "Dynkin quivers are acyclic");
        order
    }

    /// Every topological order of the quiver (used to check that the
    /// Coxeter element does not depend on the choice).
    pub fn all_adapted_numberings(&self) -> Vec<Vec<usize>> {
        fn rec(q: &OrientedQuiver, placed: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            let n = q.rank();
            if placed.len() == n {
                out.push(placed.clone());
                return;
            }
            for v in 0..n {
                if placed.contains(&v) {
                    continue;
                }
                let ok = q.arrows.iter().all(|&(a, b)| b != v || placed.contains(&a));
                if ok {
                    placed.push(v);
                    rec(q, placed, out);
                    placed.pop();
                }
            }
        }
        let mut out = Vec::new();
        rec(self, &mut Vec::new(), &mut out);
        out
    }

    pub fn coxeter_element(&self) -> WeylWord {
        WeylWord::new(self.adapted_numbering())
    }

    pub fn coxeter_perm(&self) -> WeylElement {
        self.datum.element_from_word(&self.adapted_numbering())
    }

    /// Reduced word for `w_0` adapted to `Q` by source peeling: at each step
    /// the smallest source whose root `γ_k = s_{i_1} ⋯ s_{i_{k−1}}(α_{i_k})`
    /// is still positive.
    pub fn adapted_w0(&self) -> Result<(WeylWord, Vec<Vec<i64>>)> {
        let d = &self.datum;
        let big_n = d.num_positive_roots();
        let mut q = self.clone();
        let mut prefix = d.identity_element();
        let mut letters = Vec::with_capacity(big_n);
        let mut gammas = Vec::with_capacity(big_n);
        for _ in 0..big_n {
            let i = q
                .sources()
                .into_iter()
                .find(|&i| prefix.apply_index(i) < big_n)
                .ok_or_else(|| {
                    Error::Internal(format!("no admissible source at step {}", letters.len() + 1))
                })?;
            gammas.push(d.root_coords(prefix.apply_index(i)));
            letters.push(i);
            prefix = prefix.compose(d.reflection(i));
            q = q.reflect(i);
        }
        Ok((WeylWord::new(letters), gammas))
    }

    /// Whether `word` is reduced and each letter is a source of the quiver
    /// reflected at all previous letters.
    pub fn is_adapted(&self, word: &WeylWord) -> bool {
        let mut q = self.clone();
        for &i in &word.letters {
            if i >= self.rank() || !q.is_source(i) {
                return false;
            }
            q = q.reflect(i);
        }
        self.datum.is_reduced(word)
    }

    /// Height function normalised to `min ξ = 0`.
    pub fn height_function(&self) -> HeightFunction {
        let n = self.rank();
        let mut xi: Vec<Option<i64>> = vec![None; n];
        xi[0] = Some(0);
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            let h = xi[v].expect("visited");
            for &(a, b) in &self.arrows {
                let (other, val) = if a == v {
                    (b, h - 1)
                } else if b == v {
                    (a, h + 1)
                } else {
                    continue;
                };
                if xi[other].is_none() {
                    xi[other] = Some(val);
                    stack.push(other);
                }
            }
        }
        let xi: Vec<i64> = xi.into_iter().map(|x| x.expect("connected")).collect();
        let m = *xi.iter().min().expect("nonempty");
        HeightFunction { xi: xi.into_iter().map(|x| x - m).collect() }
    }

    pub fn check_height(&self, h: &HeightFunction) -> Result<()> {
        if h.xi.len() != self.rank() {
            return Err(Error::BadHeight(format!("expected {} values, got {}", self.rank(), h.xi.len())));
        }
        for &(a, b) in &self.arrows {
            if h.xi[b] != h.xi[a] - 1 {
                return Err(Error::BadHeight(format!(
                    "arrow {}>{} needs xi_{} = xi_{} - 1",
                    a + 1,
                    b + 1,
                    b + 1,
                    a + 1
                )));
            }
        }
        Ok(())
    }

    /// `"1>2,3>2"`.
    pub fn orientation_string(&self) -> String {
        self.arrows
            .iter()
            .map(|&(a, b)| format!("{}>{}", a + 1, b + 1))
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn to_dot(&self, height: Option<&HeightFunction>) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "digraph Q {{");
        let _ = writeln!(s, "  label=\"{} {}\";", self.datum.kind(), self.orientation_string());
        for i in 0..self.rank() {
            match height {
                Some(h) => {
                    let _ = writeln!(s, "  v{} [label=\"{} (xi={})\"];", i + 1, i + 1, h.xi[i]);
                }
                None => {
                    let _ = writeln!(s, "  v{} [label=\"{}\"];", i + 1, i + 1);
                }
            }
        }
        for &(a, b) in &self.arrows {
            let _ = writeln!(s, "  v{} -> v{};", a + 1, b + 1);
        }
        s.push_str("}\n");
        s
    }
}

impl HeightFunction {
    pub fn parse(text: &str) -> Result<Self> {
        let xi = text
            .split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|_| Error::BadHeight(format!("bad entry `{t}`"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { xi })
    }
}

/// JSON form of a quiver with its height function (1-based arrows).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct QuiverJson {
    #[serde(rename = "type")]
    pub type_label: String,
    pub arrows: Vec<[usize; 2]>,
    pub height: Vec<i64>,
}

impl QuiverJson {
    pub fn new(q: &OrientedQuiver, h: &HeightFunction) -> Self {
        Self {
            type_label: q.datum().kind().to_string(),
            arrows: q.arrows().iter().map(|&(a, b)| [a + 1, b + 1]).collect(),
            height: h.xi.clone(),
        }
    }

    pub fn into_quiver(self) -> Result<(OrientedQuiver, HeightFunction)> {
        let d = CartanDatum::parse(&self.type_label)?;
        let arrows = self
            .arrows
            .iter()
            .map(|&[a, b]| {
                if a == 0 || b == 0 {
                    Err(Error::BadOrientation("vertices are 1-based".into()))
                } else {
                    Ok((a - 1, b - 1))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        let q = OrientedQuiver::new(d, arrows)?;
        let h = HeightFunction { xi: self.height };
        q.check_height(&h)?;
        Ok((q, h))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quiver(label: &str, orientation: &str) -> OrientedQuiver {
        OrientedQuiver::parse(CartanDatum::parse(label).unwrap(), orientation).unwrap()
    }

    #[test]
    fn sources_and_sinks() {
        let q = quiver("A2", "1>2");
        assert_eq!(q.sources(), vec![0]);
        assert_eq!(q.sinks(), vec![1]);
        let a1 = quiver("A1", "");
        assert_eq!(a1.sources(), vec![0]);
        assert_eq!(a1.sinks(), vec![0]);
        let d4 = quiver("D4", "1>2,3>2,4>2");
        assert_eq!(d4.sinks(), vec![1]);
    }

    #[test]
    fn reflection() {
        let q = quiver("A2", "1>2");
        assert_eq!(q.reflect(0), quiver("A2", "2>1"));
        assert_eq!(q.reflect(0).reflect(0), q);
        assert_eq!(quiver("A3", "1>2,3>2").reflect(1), quiver("A3", "2>1,2>3"));
    }

    #[test]
    fn rejects_bad_orientations() {
        let d = CartanDatum::parse("A3").unwrap();
        assert!(OrientedQuiver::parse(d.clone(), "1>2").is_err());
        assert!(OrientedQuiver::parse(d.clone(), "1>3,2>3").is_err());
        assert!(OrientedQuiver::parse(d.clone(), "1>2,2>1,2>3").is_err());
        assert!(OrientedQuiver::parse(d, "1-2,2>3").is_err());
    }

    #[test]
    fn coxeter_examples() {
        let q = quiver("A2", "1>2");
        assert_eq!(q.coxeter_element().letters, vec![0, 1]);
        let tau = q.coxeter_perm();
        // τ(α1) = α2
        assert_eq!(q.datum().root_coords(tau.apply_index(0)), vec![0, 1]);
    }

    #[test]
    fn adapted_w0_examples() {
        let (w, g) = quiver("A2", "1>2").adapted_w0().unwrap();
        assert_eq!(w.letters, vec![0, 1, 0]);
        assert_eq!(g, vec![vec![1, 0], vec![1, 1], vec![0, 1]]);
        let (w, g) = quiver("A1", "").adapted_w0().unwrap();
        assert_eq!((w.letters, g), (vec![0], vec![vec![1]]));
        let (w, _) = quiver("A3", "1>2,2>3").adapted_w0().unwrap();
        assert_eq!(w.len(), 6);
    }

    #[test]
    fn height_examples() {
        let q = quiver("A2", "1>2");
        assert_eq!(q.height_function().xi, vec![1, 0]);
        let q = quiver("D4", "2>1,2>3,4>2");
        let h = q.height_function();
        q.check_height(&h).unwrap();
        assert_eq!(*h.xi.iter().min().unwrap(), 0);
        assert!(q.check_height(&HeightFunction { xi: vec![0, 0, 0, 0] }).is_err());
    }

    #[test]
    fn json_round_trip() {
        let q = quiver("D5", "1>2,3>2,3>4,5>3");
        let h = q.height_function();
        let j = serde_json::to_string(&QuiverJson::new(&q, &h)).unwrap();
        let (q2, h2) = serde_json::from_str::<QuiverJson>(&j).unwrap().into_quiver().unwrap();
        assert_eq!((q2, h2), (q, h));
    }
}
