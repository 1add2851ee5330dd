//! Stallings foldings of finitely generated subgroups of free groups.

use std::collections::hash_map::DefaultHasher;
use std::collections::{BTreeMap, HashMap, VecDeque};
use std::hash::{Hash, Hasher};

use serde::Serialize;

use crate::algebra::ProjMat;
use crate::braid::FreeWord;
use crate::building::{eval_h_word, parse_h_word, A_IN_H, H_NAMES};
use crate::check::Check;
use crate::error::{Error, Result};

/// Folded core graph with base vertex `0`; edges `(u, label, v)` have positive labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoreGraph {
    pub alphabet: usize,
    pub vertices: usize,
    pub edges: Vec<(usize, i32, usize)>,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            let (lo, hi) = (a.min(b), a.max(b));
            self.0[hi] = lo;
        }
    }
}

pub fn fold(gens: &[FreeWord], alphabet: usize) -> Result<CoreGraph> {
    let mut n = 1;
    let mut edges: Vec<(usize, i32, usize)> = Vec::new();
    for w in gens {
        if w.max_symbol() as usize > alphabet {
            return Err(Error::InvalidParam(format!("word uses a letter beyond x{alphabet}")));
        }
        let len = w.len();
        let mut at = 0;
        for (k, &l) in w.letters().iter().enumerate() {
            let to = if k + 1 == len {
                0
            } else {
                n += 1;
                n - 1
            };
            if l > 0 {
                edges.push((at, l, to));
            } else {
                edges.push((to, -l, at));
            }
            at = to;
        }
    }
    let mut uf = UnionFind((0..n).collect());
    loop {
        let mut canon: Vec<(usize, i32, usize)> = edges.iter().map(|&(u, l, v)| (uf.find(u), l, uf.find(v))).collect();
        canon.sort_unstable();
        canon.dedup();
        edges = canon;
        let mut out: HashMap<(usize, i32), usize> = HashMap::new();
        let mut merged = false;
        for &(u, l, v) in &edges {
            for (key, target) in [((u, l), v), ((v, -l), u)] {
                match out.get(&key) {
                    Some(&w) if uf.find(w) != uf.find(target) => {
                        uf.union(w, target);
                        merged = true;
                    }
                    Some(_) => {}
                    None => {
                        out.insert(key, target);
                    }
                }
            }
        }
        if !merged {
            break;
        }
    }
    // trim hanging trees away from the base
    loop {
        let mut degree: HashMap<usize, usize> = HashMap::new();
        for &(u, _, v) in &edges {
            *degree.entry(u).or_default() += 1;
            *degree.entry(v).or_default() += 1;
        }
        let before = edges.len();
        edges.retain(|&(u, _, v)| !((u != 0 && degree[&u] == 1) || (v != 0 && degree[&v] == 1)));
        if edges.len() == before {
            break;
        }
    }
    Ok(relabel(alphabet, &edges))
}

/// Breadth-first renumbering from the base, visiting neighbours in label order.
fn relabel(alphabet: usize, edges: &[(usize, i32, usize)]) -> CoreGraph {
    let mut adj: HashMap<usize, BTreeMap<i32, usize>> = HashMap::new();
    for &(u, l, v) in edges {
        adj.entry(u).or_default().insert(l, v);
        adj.entry(v).or_default().insert(-l, u);
    }
    let mut label = HashMap::from([(0usize, 0usize)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(u) = queue.pop_front() {
        let mut keys: Vec<(i32, usize)> =
            adj.get(&u).map(|m| m.iter().map(|(&l, &v)| (l, v)).collect()).unwrap_or_default();
        keys.sort_by_key(|&(l, _)| (l.abs(), l < 0));
        for (_, v) in keys {
            if !label.contains_key(&v) {
                label.insert(v, label.len());
                queue.push_back(v);
            }
        }
    }
    let mut out: Vec<(usize, i32, usize)> = edges.iter().map(|&(u, l, v)| (label[&u], l, label[&v])).collect();
    out.sort_unstable();
    CoreGraph { alphabet, vertices: label.len(), edges: out }
}

impl CoreGraph {
    pub fn rank(&self) -> usize {
        (self.edges.len() + 1).saturating_sub(self.vertices)
    }

    pub fn is_folded(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.edges.iter().all(|&(u, l, v)| seen.insert((u, l)) && seen.insert((v, -l)))
    }

    pub fn contains(&self, w: &FreeWord) -> bool {
        let mut adj: HashMap<(usize, i32), usize> = HashMap::new();
        for &(u, l, v) in &self.edges {
            adj.insert((u, l), v);
            adj.insert((v, -l), u);
        }
        let mut at = 0;
        for &l in w.letters() {
            match adj.get(&(at, l)) {
                Some(&v) => at = v,
                None => return false,
            }
        }
        at == 0
    }

    pub fn canonical_hash(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.hash(&mut h);
        h.finish()
    }
}

impl Hash for CoreGraph {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.vertices.hash(state);
        self.edges.hash(state);
    }
}

pub fn rank(g: &CoreGraph) -> usize {
    g.rank()
}

pub fn membership(w: &FreeWord, g: &CoreGraph) -> bool {
    g.contains(w)
}

/// Image under `d1, d2 -> -2`, `g1..g4 -> 1`.
pub fn f_quotient_value(w: &FreeWord) -> i64 {
    w.letters().iter().map(|&l| if l.abs() <= 2 { -2 * l.signum() as i64 } else { l.signum() as i64 }).sum()
}

/// The nine words `l_j` in `d1, d2, g1..g4`.
pub const L_IN_H: [&str; 9] =
    ["d2 g1^2", "d1 g1^2", "g1 d1 g1", "g2^-1 g1", "g1 g2^-1", "g3^-1 g1", "g1 g3^-1", "g4^-1 g1", "g1 g4^-1"];

/// The nine generators `a_j` as words in `l1..l9`.
pub const A_IN_L: [&str; 9] = [
    "l2 L1 l2 L1 l2 L1 l9 l3 L8 L3",
    "l2 L1 L7 l1 L6 l2 L1 L5 l3 L4 l1 l2 l6 L1 l7 l2 l1^-2",
    "l2 L1 L7 l1 L6 l1 L2 L1",
    "l1 l2 L1 l8 L3 l9 l6 L1 l7 l2 l1^-2",
    "l1 l2 L1 l2 L1 l8 L3 l1 l3^-2 L1 l9 l1 L2 L1 l2 L1 L9 l3 L8 l1 l2",
    "l1 l2 L1 l8 L3 l1 l3^-2 L1 l9 l1 l2^-2 l6 L1 l7 l1 L2",
    "l1^2 L2 L7 l1 l6",
    "l1 l4 L3 l5 l1 l2 l1 L2",
    "l1^2 L2 l1 L2 l1 l2 L1 L9 l3 L8 l1 L2 L1",
];

pub fn a_l_words() -> Vec<FreeWord> {
    A_IN_L.iter().map(|s| FreeWord::parse(s, 'l').expect("valid literal")).collect()
}

/// Substitutes the `l_j` definitions into a word over `l1..l9`.
pub fn expand_l_word(w: &FreeWord) -> FreeWord {
    let images: Vec<FreeWord> = L_IN_H.iter().map(|s| parse_h_word(s).expect("valid literal")).collect();
    w.substitute(&images)
}

#[derive(Clone, Debug, Serialize)]
pub struct LConsistencyReport {
    pub checks: Vec<Check>,
}

impl LConsistencyReport {
    pub fn passes(&self) -> bool {
        crate::check::all_pass(&self.checks)
    }
}

/// For each `j`, the expanded `l`-word of `a_j` against its word in `d1, d2, g1..g4`, compared as projective matrices.
pub fn verify_l_consistency() -> Result<LConsistencyReport> {
    let mut checks = Vec::new();
    for (j, w) in a_l_words().iter().enumerate() {
        let lhs = ProjMat::from_laurent(&eval_h_word(&expand_l_word(w)))?;
        let rhs = ProjMat::from_laurent(&eval_h_word(&parse_h_word(A_IN_H[j])?))?;
        checks.push(Check::new(format!("a{}", j + 1), lhs == rhs));
    }
    Ok(LConsistencyReport { checks })
}

pub fn h_word_text(w: &FreeWord) -> String {
    crate::building::named_word_text(w, &H_NAMES)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(s: &str) -> FreeWord {
        FreeWord::parse(s, 'x').unwrap()
    }

    #[test]
    fn small_graphs() {
        let g = fold(&[x("x1")], 2).unwrap();
        assert_eq!((g.vertices, g.rank()), (1, 1));
        let g = fold(&[x("x1^2"), x("x1^3")], 1).unwrap();
        assert_eq!(g.rank(), 1);
        assert!(g.contains(&x("x1")));
        let g = fold(&[x("x1"), x("x2")], 2).unwrap();
        assert_eq!(g.rank(), 2);
        let g = fold(&[x("x1 x2 X1"), x("x1 x2^2 X1")], 2).unwrap();
        assert_eq!((g.rank(), g.vertices), (1, 2));
        assert!(g.is_folded());
        assert!(fold(&[x("x3")], 2).is_err());
    }

    #[test]
    fn rank_nine() {
        let a = a_l_words();
        let g = fold(&a, 9).unwrap();
        assert_eq!(g.rank(), 9);
        assert!(g.contains(&a[0].concat(&a[1])));
        assert!(g.contains(&a[4].inverse()));
    }

    #[test]
    fn quotient_values() {
        for s in A_IN_H {
            assert_eq!(f_quotient_value(&parse_h_word(s).unwrap()), 0, "{s}");
        }
        for s in L_IN_H {
            assert_eq!(f_quotient_value(&parse_h_word(s).unwrap()), 0, "{s}");
        }
        assert_eq!(f_quotient_value(&parse_h_word("g1").unwrap()), 1);
    }

    #[test]
    fn confluence() {
        let mut a = a_l_words();
        let h = fold(&a, 9).unwrap().canonical_hash();
        a.reverse();
        assert_eq!(fold(&a, 9).unwrap().canonical_hash(), h);
    }
}
