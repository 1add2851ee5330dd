use std::collections::{HashMap, HashSet};
use std::fmt::Write;

use rayon::prelude::*;
use serde::Serialize;

use super::gens::{unipotent_lift, BuildingGen};
use super::lattice::{adjacent, lattice_of, LatticeClass};
use crate::algebra::{Gaussian, LMat, Matrix, ProjMat};
use crate::error::{Error, Result};

#[derive(Clone, Debug, Serialize)]
pub struct ExploredVertex {
    pub word: String,
    pub distance: usize,
    pub vertex_type: u8,
}

#[derive(Clone, Debug, Serialize)]
pub struct SubcomplexReport {
    pub visited: usize,
    pub type_counts: [usize; 3],
    /// Indices into `vertices` of the neighbours of the identity lattice.
    pub link_of_identity: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
    pub triangles: usize,
    pub radius: usize,
    pub truncated: bool,
    pub vertices: Vec<ExploredVertex>,
}

impl SubcomplexReport {
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph subcomplex {\n");
        for (k, v) in self.vertices.iter().enumerate() {
            let _ = writeln!(out, "  v{k} [label=\"{}\\ntype {} dist {}\"];", v.word, v.vertex_type, v.distance);
        }
        for (a, b) in &self.edges {
            let _ = writeln!(out, "  v{a} -- v{b};");
        }
        out.push_str("}\n");
        out
    }
}

struct Node {
    element: LMat<Gaussian>,
    class: LatticeClass<Gaussian>,
    letters: Vec<(usize, i8)>,
    distance: usize,
}

fn word_text(letters: &[(usize, i8)], names: &[String]) -> String {
    if letters.is_empty() {
        return "1".into();
    }
    letters
        .iter()
        .map(|&(k, e)| if e > 0 { names[k].clone() } else { format!("{}^-1", names[k]) })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Breadth-first orbit of the identity lattice under words of length at most
/// `radius` in `gens` and their inverses, stopping after `max_vertices` classes.
pub fn explore(gens: &[BuildingGen], radius: usize, max_vertices: usize) -> Result<SubcomplexReport> {
    if radius == 0 {
        return Err(Error::InvalidParam("radius must be at least 1".into()));
    }
    let names: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
    let mut letters: Vec<(usize, i8, LMat<Gaussian>)> = Vec::new();
    for (k, g) in gens.iter().enumerate() {
        let m = unipotent_lift(g)?;
        letters.push((k, 1, m.clone()));
        letters.push((k, -1, m.adjugate()));
    }
    let id = Matrix::identity(3);
    let mut nodes = vec![Node { class: lattice_of(&id)?, element: id, letters: Vec::new(), distance: 0 }];
    let mut seen: HashSet<LatticeClass<Gaussian>> = HashSet::from([nodes[0].class.clone()]);
    let mut frontier = vec![0usize];
    let mut truncated = false;
    let mut reached = 0;
    'layers: for d in 1..=radius {
        let candidates: Vec<(usize, usize)> = frontier
            .iter()
            .flat_map(|&v| (0..letters.len()).map(move |l| (v, l)))
            .filter(|&(v, l)| {
                let last = nodes[v].letters.last();
                !matches!(last, Some(&(k, e)) if k == letters[l].0 && e == -letters[l].1)
            })
            .collect();
        let computed: Vec<Result<(LMat<Gaussian>, LatticeClass<Gaussian>)>> = candidates
            .par_iter()
            .map(|&(v, l)| {
                let prod = nodes[v].element.mul(&letters[l].2);
                let element = ProjMat::from_laurent(&prod)?.rep().clone();
                let class = lattice_of(&element)?;
                Ok((element, class))
            })
            .collect();
        let mut next = Vec::new();
        for (&(v, l), res) in candidates.iter().zip(computed) {
            let (element, class) = res?;
            if !seen.insert(class.clone()) {
                continue;
            }
            if nodes.len() >= max_vertices {
                truncated = true;
                break 'layers;
            }
            let mut word = nodes[v].letters.clone();
            word.push((letters[l].0, letters[l].1));
            nodes.push(Node { element, class, letters: word, distance: d });
            next.push(nodes.len() - 1);
        }
        reached = d;
        frontier = next;
        if frontier.is_empty() {
            break;
        }
    }
    let n = nodes.len();
    let edges: Vec<(usize, usize)> = (0..n)
        .into_par_iter()
        .flat_map_iter(|a| {
            let nodes = &nodes;
            (a + 1..n).filter(move |&b| adjacent(&nodes[a].class, &nodes[b].class)).map(move |b| (a, b))
        })
        .collect();
    let mut nbrs: HashMap<usize, HashSet<usize>> = HashMap::new();
    for &(a, b) in &edges {
        nbrs.entry(a).or_default().insert(b);
        nbrs.entry(b).or_default().insert(a);
    }
    let triangles = edges.iter().map(|&(a, b)| nbrs[&a].intersection(&nbrs[&b]).filter(|&&c| c > b).count()).sum();
    let mut type_counts = [0usize; 3];
    let vertices: Vec<ExploredVertex> = nodes
        .iter()
        .map(|v| {
            let t = v.class.vertex_type();
            type_counts[t as usize] += 1;
            ExploredVertex { word: word_text(&v.letters, &names), distance: v.distance, vertex_type: t }
        })
        .collect();
    let mut link_of_identity: Vec<usize> = nbrs.get(&0).map(|s| s.iter().copied().collect()).unwrap_or_default();
    link_of_identity.sort_unstable();
    Ok(SubcomplexReport {
        visited: n,
        type_counts,
        link_of_identity,
        edges,
        triangles,
        radius: reached,
        truncated,
        vertices,
    })
}

/// Classes of the explored vertices, recomputed from their words.
pub fn explored_classes(gens: &[BuildingGen], report: &SubcomplexReport) -> Result<Vec<LatticeClass<Gaussian>>> {
    let lifts: Vec<LMat<Gaussian>> = gens.iter().map(unipotent_lift).collect::<Result<_>>()?;
    let names: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
    report
        .vertices
        .iter()
        .map(|v| {
            let mut m = Matrix::identity(3);
            if v.word != "1" {
                for tok in v.word.split_whitespace() {
                    let (name, inv) = match tok.strip_suffix("^-1") {
                        Some(n) => (n, true),
                        None => (tok, false),
                    };
                    let k = names.iter().position(|x| x == name).ok_or_else(|| Error::Parse(tok.into()))?;
                    m = m.mul(&if inv { lifts[k].adjugate() } else { lifts[k].clone() });
                }
            }
            lattice_of(&m)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::building::{type_one_classes, Named};

    fn named(ns: &[Named]) -> Vec<BuildingGen> {
        ns.iter().map(|&n| BuildingGen::Named(n)).collect()
    }

    #[test]
    fn empty_generating_set() {
        let r = explore(&[], 3, 100).unwrap();
        assert_eq!(r.visited, 1);
        assert!(r.edges.is_empty());
    }

    #[test]
    fn line_of_d1() {
        let r = explore(&named(&[Named::D1]), 2, 100).unwrap();
        assert_eq!(r.visited, 5);
        let mut near: Vec<(usize, u8)> = r.vertices.iter().map(|v| (v.distance, v.vertex_type)).collect();
        near.sort();
        assert_eq!(near, vec![(0, 0), (1, 1), (1, 2), (2, 1), (2, 2)]);
        assert_eq!(r.edge_count(), 4);
        assert_eq!(r.triangles, 0);
    }

    #[test]
    fn budget_truncates() {
        let r = explore(&named(&Named::ALL), 2, 5).unwrap();
        assert!(r.truncated && r.visited == 5);
    }

    #[test]
    fn link_contains_expected_classes() {
        let gens = named(&Named::ALL);
        let r = explore(&gens, 2, 10_000).unwrap();
        let classes = explored_classes(&gens, &r).unwrap();
        let link: HashSet<_> = r.link_of_identity.iter().map(|&k| classes[k].clone()).collect();
        for c in type_one_classes().unwrap() {
            assert!(link.contains(&c));
        }
        let type1 = r.link_of_identity.iter().filter(|&&k| r.vertices[k].vertex_type == 1).count();
        assert_eq!(type1, 11);
        assert!(r.to_dot().contains("v0 --"));
    }
}
