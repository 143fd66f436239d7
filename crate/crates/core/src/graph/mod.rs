//! Simple undirected graphs and the constructions used throughout the crate.
//!
//! Vertices are `0..n`. Every constructor fixes its numbering so that
//! witness colorings stay reproducible:
//!
//! * [`join`] concatenates parts in input order (part `i`, vertex `v` maps to
//!   `offset_i + v`);
//! * [`cartesian_product`] is row-major (`(u, v)` maps to `u * |V(h)| + v`);
//! * [`add_pendants`] appends leaves after the original vertices, anchors in
//!   increasing order.

pub mod dimacs;
pub mod family;

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};

pub use family::{generate, Family, FamilySpec};

/// Immutable simple undirected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    name: Option<String>,
}

/// Degree extremes and sizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DegreeStats {
    pub min_degree: usize,
    pub max_degree: usize,
    pub n: usize,
    pub m: usize,
}

impl Graph {
    /// Builds a graph from unordered pairs. Duplicate pairs collapse.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut sets = vec![BTreeSet::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            sets[u].insert(v);
            sets[v].insert(u);
        }
        Ok(Self {
            adj: sets.into_iter().map(|s| s.into_iter().collect()).collect(),
            name: None,
        })
    }

    pub fn empty(n: usize) -> Self {
        Self {
            adj: vec![Vec::new(); n],
            name: None,
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Sorted open neighborhood.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn degree_stats(&self) -> Result<DegreeStats> {
        if self.n() == 0 {
            return Err(Error::EmptyGraph);
        }
        Ok(DegreeStats {
            min_degree: self.min_degree(),
            max_degree: self.max_degree(),
            n: self.n(),
            m: self.m(),
        })
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        d.sort_unstable();
        d
    }

    /// Full scan of the simple-graph invariants.
    pub fn is_well_formed(&self) -> bool {
        let n = self.n();
        self.adj.iter().enumerate().all(|(v, ns)| {
            ns.windows(2).all(|w| w[0] < w[1])
                && ns.iter().all(|&u| u < n && u != v && self.has_edge(u, v))
        })
    }

    /// Subgraph induced on `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                let mut ns: Vec<usize> = self.adj[v]
                    .iter()
                    .filter_map(|&u| (index[u] != usize::MAX).then_some(index[u]))
                    .collect();
                ns.sort_unstable();
                ns
            })
            .collect();
        Graph { adj, name: None }
    }

    /// Disjoint union, numbered like [`join`] but without cross edges.
    pub fn disjoint_union(parts: &[&Graph]) -> Graph {
        let mut adj = Vec::new();
        let mut offset = 0;
        for g in parts {
            adj.extend(g.adj.iter().map(|ns| ns.iter().map(|&u| u + offset).collect()));
            offset += g.n();
        }
        Graph { adj, name: None }
    }

    /// The name, or `G{n}` when unnamed.
    pub fn label(&self) -> String {
        self.name.clone().unwrap_or_else(|| format!("G{}", self.n()))
    }
}

/// Join of the parts: disjoint union plus every edge between distinct parts.
pub fn join(parts: &[&Graph]) -> Result<Graph> {
    if parts.is_empty() {
        return Err(Error::EmptyJoin);
    }
    if parts.iter().any(|g| g.n() == 0) {
        return Err(Error::EmptyGraph);
    }
    let total: usize = parts.iter().map(|g| g.n()).sum();
    let mut adj = Vec::with_capacity(total);
    let mut offset = 0;
    for g in parts {
        let (lo, hi) = (offset, offset + g.n());
        for ns in &g.adj {
            let mut row: Vec<usize> = (0..lo).collect();
            row.extend(ns.iter().map(|&u| u + offset));
            row.extend(hi..total);
            adj.push(row);
        }
        offset = hi;
    }
    let name = format!(
        "join({})",
        parts.iter().map(|g| g.label()).collect::<Vec<_>>().join(",")
    );
    Ok(Graph {
        adj,
        name: Some(name),
    })
}

/// Cartesian product, vertex `(u, v)` at index `u * h.n() + v`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    if g.n() == 0 || h.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let hn = h.n();
    let mut adj = Vec::with_capacity(g.n() * hn);
    for u in 0..g.n() {
        for v in 0..hn {
            let mut row: Vec<usize> = g.adj[u].iter().map(|&u2| u2 * hn + v).collect();
            row.extend(h.adj[v].iter().map(|&v2| u * hn + v2));
            row.sort_unstable();
            adj.push(row);
        }
    }
    Ok(Graph {
        adj,
        name: Some(format!("prod({},{})", g.label(), h.label())),
    })
}

/// Appends `counts[v]` leaves to each vertex `v`.
pub fn add_pendants(g: &Graph, counts: &[usize]) -> Result<Graph> {
    if counts.len() != g.n() {
        return Err(Error::LengthMismatch {
            expected: g.n(),
            got: counts.len(),
        });
    }
    let mut adj = g.adj.clone();
    for (anchor, &c) in counts.iter().enumerate() {
        for _ in 0..c {
            let leaf = adj.len();
            adj.push(vec![anchor]);
            adj[anchor].push(leaf);
        }
    }
    Ok(Graph {
        adj,
        name: g.name.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k1() -> Graph {
        Graph::empty(1)
    }

    fn path(n: usize) -> Graph {
        generate(&FamilySpec::path(n)).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        generate(&FamilySpec::cycle(n)).unwrap()
    }

    #[test]
    fn edge_list_basics() {
        let k2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        assert_eq!((k2.n(), k2.m()), (2, 1));

        let dup = Graph::from_edge_list(3, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(dup.m(), 1);
        assert_eq!(dup.degree(2), 0);

        let c5 = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert!((0..5).all(|v| c5.degree(v) == 2));
        assert!(c5.is_well_formed());
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(
            Graph::from_edge_list(2, &[(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        ));
        assert!(matches!(
            Graph::from_edge_list(2, &[(1, 1)]),
            Err(Error::SelfLoop(1))
        ));
    }

    #[test]
    fn join_examples() {
        let k2 = join(&[&k1(), &k1()]).unwrap();
        assert_eq!((k2.n(), k2.m()), (2, 1));

        let c4 = cycle(4);
        let j = join(&[&c4, &c4]).unwrap();
        assert_eq!((j.n(), j.m()), (8, 24));
        assert!(j.is_well_formed());

        let p3 = path(3);
        let j = join(&[&p3, &p3]).unwrap();
        // endpoint degree 1 plus the 3 vertices of the other part
        assert_eq!(j.min_degree(), 4);
    }

    #[test]
    fn join_errors() {
        assert!(matches!(join(&[]), Err(Error::EmptyJoin)));
        assert!(matches!(
            join(&[&k1(), &Graph::empty(0)]),
            Err(Error::EmptyGraph)
        ));
    }

    #[test]
    fn join_degree_law() {
        let parts = [path(3), cycle(5), k1(), path(4)];
        let refs: Vec<&Graph> = parts.iter().collect();
        let j = join(&refs).unwrap();
        let total: usize = parts.iter().map(Graph::n).sum();
        let mut offset = 0;
        for g in &parts {
            for v in 0..g.n() {
                assert_eq!(j.degree(offset + v), g.degree(v) + total - g.n());
            }
            offset += g.n();
        }
        let dsum: usize = parts.iter().map(Graph::min_degree).sum();
        assert!(j.min_degree() >= dsum);
    }

    #[test]
    fn products() {
        let k2 = path(2);
        let c4 = cartesian_product(&k2, &k2).unwrap();
        assert_eq!((c4.n(), c4.m()), (4, 4));
        assert!((0..4).all(|v| c4.degree(v) == 2));

        let g = cartesian_product(&cycle(4), &cycle(5)).unwrap();
        assert_eq!((g.n(), g.m()), (20, 40));
        assert!((0..20).all(|v| g.degree(v) == 4));

        let g = cartesian_product(&cycle(5), &cycle(5)).unwrap();
        assert_eq!(g.n(), 25);
        assert!((0..25).all(|v| g.degree(v) == 4));
        assert!(g.is_well_formed());
    }

    #[test]
    fn product_commutes_on_degrees() {
        let (a, b) = (path(4), generate(&FamilySpec::t_tree(3)).unwrap());
        let ab = cartesian_product(&a, &b).unwrap();
        let ba = cartesian_product(&b, &a).unwrap();
        assert_eq!(ab.degree_sequence(), ba.degree_sequence());
    }

    #[test]
    fn pendants() {
        let k2 = add_pendants(&k1(), &[1]).unwrap();
        assert_eq!((k2.n(), k2.m()), (2, 1));

        let g = add_pendants(&path(3), &[0, 2, 0]).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.degree(1), 4);
        assert_eq!(g.neighbors(3), &[1]);

        let g4 = add_pendants(&path(6), &[5; 6]).unwrap();
        assert_eq!(g4.n(), 36);

        assert!(matches!(
            add_pendants(&path(3), &[1]),
            Err(Error::LengthMismatch { expected: 3, got: 1 })
        ));
    }

    #[test]
    fn degree_stats_examples() {
        let s = cycle(5).degree_stats().unwrap();
        assert_eq!(
            (s.min_degree, s.max_degree, s.n, s.m),
            (2, 2, 5, 5)
        );
        let k55 = generate(&FamilySpec::complete_bipartite(5, 5)).unwrap();
        let s = k55.degree_stats().unwrap();
        assert_eq!((s.min_degree, s.max_degree, s.n, s.m), (5, 5, 10, 25));

        let g4 = generate(&FamilySpec::pendant_path(3)).unwrap();
        let s = g4.degree_stats().unwrap();
        assert_eq!((s.min_degree, s.max_degree), (1, 7));

        assert!(Graph::empty(0).degree_stats().is_err());
    }
}
