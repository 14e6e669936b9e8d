//! Simple undirected graphs and the commuting graph of a group, with
//! connected components, clique-union detection, and the K5 planarity
//! rule for clique unions.

use crate::group::{FiniteGroup, GroupError};
use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

/// Undirected irreflexive graph on indexed vertices, bitset adjacency rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    rows: Vec<FixedBitSet>,
    /// Group-element indices behind the vertices, when the graph came from
    /// a commuting-graph construction.
    pub vertex_labels: Option<Vec<usize>>,
}

impl SimpleGraph {
    pub fn new(vertex_count: usize) -> Self {
        SimpleGraph {
            rows: vec![FixedBitSet::with_capacity(vertex_count); vertex_count],
            vertex_labels: None,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.rows.len()
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert_ne!(u, v, "irreflexive graph");
        self.rows[u].insert(v);
        self.rows[v].insert(u);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones(..)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.vertex_count())
            .map(|v| self.degree(v))
            .max()
            .unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.rows[v].ones()
    }

    /// A disjoint union of cliques: `count` copies of K_`size` per part.
    pub fn clique_union(parts: &[(usize, usize)]) -> SimpleGraph {
        let total: usize = parts.iter().map(|&(size, count)| size * count).sum();
        let mut g = SimpleGraph::new(total);
        let mut base = 0;
        for &(size, count) in parts {
            for _ in 0..count {
                for u in 0..size {
                    for v in (u + 1)..size {
                        g.add_edge(base + u, base + v);
                    }
                }
                base += size;
            }
        }
        g
    }

    /// Maximal connected vertex subsets, ordered by least contained vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = FixedBitSet::with_capacity(n);
        let mut comps = Vec::new();
        for start in 0..n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = vec![start];
            seen.insert(start);
            let mut head = 0;
            while head < comp.len() {
                let v = comp[head];
                head += 1;
                for u in self.neighbors(v) {
                    if !seen.contains(u) {
                        seen.insert(u);
                        comp.push(u);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Edge-list export, one `u v` line per edge, 0-based.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for u in 0..self.vertex_count() {
            for v in self.neighbors(u) {
                if u < v {
                    let _ = writeln!(out, "{u} {v}");
                }
            }
        }
        out
    }

    /// Adjacency-list export, one `u: n1 n2 ...` line per vertex.
    pub fn to_adjacency_list(&self) -> String {
        let mut out = String::new();
        for u in 0..self.vertex_count() {
            let neigh: Vec<String> = self.neighbors(u).map(|v| v.to_string()).collect();
            let _ = writeln!(out, "{u}: {}", neigh.join(" "));
        }
        out
    }
}

/// Multiset of clique sizes of a clique-union graph, distinct sizes sorted
/// descending.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueDecomposition {
    /// (size, count) pairs, distinct sizes, descending by size.
    pub parts: Vec<(usize, usize)>,
}

impl CliqueDecomposition {
    pub fn new(mut parts: Vec<(usize, usize)>) -> Self {
        parts.sort_unstable_by_key(|&(size, _)| std::cmp::Reverse(size));
        // merge duplicate sizes
        let mut merged: Vec<(usize, usize)> = Vec::new();
        for (size, count) in parts {
            assert!(size >= 1 && count >= 1, "parts must be positive");
            match merged.last_mut() {
                Some(last) if last.0 == size => last.1 += count,
                _ => merged.push((size, count)),
            }
        }
        CliqueDecomposition { parts: merged }
    }

    pub fn vertex_count(&self) -> usize {
        self.parts.iter().map(|&(s, c)| s * c).sum()
    }

    pub fn clique_count(&self) -> usize {
        self.parts.iter().map(|&(_, c)| c).sum()
    }

    /// Formats like `K_4 + 5K_3`.
    pub fn to_text(&self) -> String {
        self.parts
            .iter()
            .map(|&(s, c)| {
                if c == 1 {
                    format!("K_{s}")
                } else {
                    format!("{c}K_{s}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// The commuting graph: vertices are the non-central elements, edges join
/// distinct commuting pairs. Abelian input is rejected (the vertex set
/// would be empty).
pub fn commuting_graph(g: &FiniteGroup) -> Result<SimpleGraph, GroupError> {
    if g.is_abelian() {
        return Err(GroupError::AbelianInput("commuting_graph"));
    }
    let center = g.center();
    let verts: Vec<usize> = (0..g.order()).filter(|&x| !center.contains(x)).collect();
    let mut graph = SimpleGraph::new(verts.len());
    for (i, &x) in verts.iter().enumerate() {
        for (j, &y) in verts.iter().enumerate().skip(i + 1) {
            if g.commutes(x, y) {
                graph.add_edge(i, j);
            }
        }
    }
    graph.vertex_labels = Some(verts);
    Ok(graph)
}

/// Present iff every connected component is complete; aggregates component
/// sizes into a clique decomposition.
pub fn clique_decomposition(g: &SimpleGraph) -> Option<CliqueDecomposition> {
    let comps = g.connected_components();
    if comps.is_empty() {
        return Some(CliqueDecomposition { parts: Vec::new() });
    }
    let mut parts = Vec::new();
    for comp in comps {
        let s = comp.len();
        // a component is complete iff each of its vertices has degree s-1
        if comp.iter().any(|&v| g.degree(v) != s - 1) {
            return None;
        }
        parts.push((s, 1));
    }
    Some(CliqueDecomposition::new(parts))
}

/// Disjoint unions of cliques are planar exactly when every clique has at
/// most 4 vertices (K5 is the smallest non-planar complete graph).
pub fn clique_union_planarity(d: &CliqueDecomposition) -> bool {
    d.parts.iter().all(|&(size, _)| size <= 4)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, parse_descriptor};

    fn gamma(s: &str) -> SimpleGraph {
        commuting_graph(&build_group(&parse_descriptor(s).unwrap()).unwrap()).unwrap()
    }

    #[test]
    fn quaternion_graph_is_three_disjoint_edges() {
        let g = gamma("Q:8");
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 3);
        let comps = g.connected_components();
        assert_eq!(comps.len(), 3);
        assert!(comps.iter().all(|c| c.len() == 2));
        assert_eq!(clique_decomposition(&g).unwrap().parts, vec![(2, 3)]);
    }

    #[test]
    fn a4_graph_is_k3_plus_4k2() {
        let g = gamma("A:4");
        assert_eq!(g.vertex_count(), 11);
        let d = clique_decomposition(&g).unwrap();
        assert_eq!(d.parts, vec![(3, 1), (2, 4)]);
        assert_eq!(g.connected_components().len(), 5);
        assert_eq!(d.to_text(), "K_3 + 4K_2");
    }

    #[test]
    fn sl23_graph_is_3k2_plus_4k4() {
        let g = gamma("SL2:3");
        let d = clique_decomposition(&g).unwrap();
        assert_eq!(d.parts, vec![(4, 4), (2, 3)]);
    }

    #[test]
    fn s4_graph_is_not_a_clique_union() {
        let g = gamma("S:4");
        assert_eq!(g.vertex_count(), 23);
        assert!(clique_decomposition(&g).is_none());
        assert_eq!(g.connected_components().len(), 5);
    }

    #[test]
    fn hanaki_theta_2_graph() {
        let g = gamma("HA:2");
        assert_eq!(clique_decomposition(&g).unwrap().parts, vec![(4, 3)]);
    }

    #[test]
    fn sz20_graph() {
        let g = gamma("SZ20");
        assert_eq!(
            clique_decomposition(&g).unwrap().parts,
            vec![(4, 1), (3, 5)]
        );
    }

    #[test]
    fn empty_graph_components() {
        let g = SimpleGraph::new(0);
        assert!(g.connected_components().is_empty());
        assert_eq!(
            clique_decomposition(&g),
            Some(CliqueDecomposition { parts: vec![] })
        );
    }

    #[test]
    fn single_vertex_decomposition() {
        let g = SimpleGraph::new(1);
        assert_eq!(clique_decomposition(&g).unwrap().parts, vec![(1, 1)]);
    }

    #[test]
    fn planarity_rule() {
        let sz = CliqueDecomposition::new(vec![(4, 1), (3, 5)]);
        assert!(clique_union_planarity(&sz));
        let d14 = CliqueDecomposition::new(vec![(6, 1), (1, 7)]);
        assert!(!clique_union_planarity(&d14));
        let k5 = CliqueDecomposition::new(vec![(5, 1)]);
        assert!(!clique_union_planarity(&k5));
    }

    #[test]
    fn degree_matches_centralizer_size() {
        for s in ["D:8", "Q:16", "S:4", "SZ20", "GL2:3"] {
            let g = build_group(&parse_descriptor(s).unwrap()).unwrap();
            let graph = commuting_graph(&g).unwrap();
            let z = g.center().len();
            let labels = graph.vertex_labels.clone().unwrap();
            for (v, &x) in labels.iter().enumerate() {
                assert_eq!(
                    graph.degree(v),
                    g.centralizer(x).unwrap().len() - z - 1,
                    "{s} vertex {v}"
                );
            }
        }
    }

    #[test]
    fn abelian_input_rejected() {
        let z6 = build_group(&parse_descriptor("Z:6").unwrap()).unwrap();
        assert!(commuting_graph(&z6).is_err());
    }

    #[test]
    fn exports() {
        let g = SimpleGraph::clique_union(&[(2, 1), (1, 1)]);
        assert_eq!(g.to_edge_list(), "0 1\n");
        assert_eq!(g.to_adjacency_list(), "0: 1\n1: 0\n2: \n");
    }
}
