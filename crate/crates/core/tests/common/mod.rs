//! Brute-force oracle shared by the integration tests. Written directly from
//! the definitions and deliberately independent of the library's checks.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use fallcolor::Graph;

/// Adjacency as bitmasks; at most 32 vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Small {
    pub adj: Vec<u32>,
}

impl Small {
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn from_graph(g: &Graph) -> Self {
        assert!(g.n() <= 32);
        let mut adj = vec![0u32; g.n()];
        for (u, v) in g.edges() {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Small { adj }
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n() {
            for v in u + 1..self.n() {
                if self.adj[u] >> v & 1 == 1 {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn to_graph(&self) -> Graph {
        Graph::from_edge_list(self.n(), &self.edges()).unwrap()
    }

    pub fn connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return true;
        }
        let mut seen = 1u32;
        let mut frontier = 1u32;
        while frontier != 0 {
            let mut next = 0;
            for v in 0..n {
                if frontier >> v & 1 == 1 {
                    next |= self.adj[v];
                }
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen.count_ones() as usize == n
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).min().unwrap_or(0)
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// One representative per isomorphism class of graphs on `n` vertices.
pub fn all_graphs(n: usize, connected_only: bool) -> Vec<Small> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let index = |a: usize, b: usize| pairs.iter().position(|&e| e == (a.min(b), a.max(b))).unwrap();
    // For each permutation, where each pair slot moves to.
    let moves: Vec<Vec<usize>> = permutations(n)
        .iter()
        .map(|p| pairs.iter().map(|&(u, v)| index(p[u], p[v])).collect())
        .collect();
    let mut seen: HashSet<u32> = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        let mut adj = vec![0u32; n];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
        let g = Small { adj };
        if connected_only && !g.connected() {
            continue;
        }
        let canon = moves
            .iter()
            .map(|mv| {
                (0..pairs.len())
                    .filter(|&i| mask >> i & 1 == 1)
                    .fold(0u32, |code, i| code | 1 << mv[i])
            })
            .min()
            .unwrap();
        if seen.insert(canon) {
            out.push(g);
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Flags {
    pub proper: bool,
    pub fall: bool,
    pub b_coloring: bool,
    pub grundy: bool,
    pub partial_grundy: bool,
    pub complete: bool,
}

/// Flags of `colors` read as a `k`-coloring, `k` the largest color.
pub fn flags(g: &Small, colors: &[usize]) -> Flags {
    let n = g.n();
    let k = colors.iter().copied().max().unwrap_or(0);
    let nbrs = |v: usize| (0..n).filter(move |&u| g.adj[v] >> u & 1 == 1);
    let proper = g.edges().iter().all(|&(u, v)| colors[u] != colors[v]);
    let all_used = (1..=k).all(|c| colors.contains(&c));
    if !proper || !all_used {
        return Flags {
            proper,
            ..Flags::default()
        };
    }
    let colorful: Vec<bool> = (0..n)
        .map(|v| {
            let seen: BTreeSet<usize> = nbrs(v).map(|u| colors[u]).chain([colors[v]]).collect();
            seen.len() == k
        })
        .collect();
    let grundy_vertex: Vec<bool> = (0..n)
        .map(|v| (1..colors[v]).all(|c| nbrs(v).any(|u| colors[u] == c)))
        .collect();
    let every_class = |ok: &[bool]| (1..=k).all(|c| (0..n).any(|v| colors[v] == c && ok[v]));
    let complete = (1..=k).all(|a| {
        (a + 1..=k).all(|b| {
            g.edges()
                .iter()
                .any(|&(u, v)| (colors[u], colors[v]) == (a, b) || (colors[u], colors[v]) == (b, a))
        })
    });
    Flags {
        proper,
        fall: colorful.iter().all(|&x| x),
        b_coloring: every_class(&colorful),
        grundy: grundy_vertex.iter().all(|&x| x),
        partial_grundy: every_class(&grundy_vertex),
        complete,
    }
}

/// Calls `f` on every assignment of colors `1..=max` to the vertices.
pub fn for_each_assignment(n: usize, max: usize, mut f: impl FnMut(&[usize])) {
    let mut colors = vec![1; n];
    loop {
        f(&colors);
        let mut i = 0;
        loop {
            if i == n {
                return;
            }
            if colors[i] < max {
                colors[i] += 1;
                break;
            }
            colors[i] = 1;
            i += 1;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OracleParams {
    pub fall_spectrum: BTreeSet<usize>,
    pub chi: usize,
    pub phi: usize,
    pub gamma: usize,
    pub partial_gamma: usize,
    pub psi: usize,
}

/// All parameters by exhaustive enumeration over `n^n` assignments.
pub fn oracle_params(g: &Small) -> OracleParams {
    let n = g.n();
    let mut p = OracleParams {
        chi: usize::MAX,
        ..Default::default()
    };
    for_each_assignment(n, n, |colors| {
        let f = flags(g, colors);
        if !f.proper {
            return;
        }
        let k = colors.iter().copied().max().unwrap();
        p.chi = p.chi.min(k);
        if f.fall {
            p.fall_spectrum.insert(k);
        }
        if f.b_coloring {
            p.phi = p.phi.max(k);
        }
        if f.grundy {
            p.gamma = p.gamma.max(k);
        }
        if f.partial_grundy {
            p.partial_gamma = p.partial_gamma.max(k);
        }
        if f.complete {
            p.psi = p.psi.max(k);
        }
    });
    p
}

/// Every proper coloring up to renaming colors, as restricted growth strings.
pub fn proper_partitions(g: &Small, mut f: impl FnMut(&[usize])) {
    fn go(g: &Small, v: usize, used: usize, colors: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if v == g.n() {
            f(colors);
            return;
        }
        for c in 1..=used + 1 {
            if (0..v).any(|u| g.adj[v] >> u & 1 == 1 && colors[u] == c) {
                continue;
            }
            colors.push(c);
            go(g, v + 1, used.max(c), colors, f);
            colors.pop();
        }
    }
    go(g, 0, 0, &mut Vec::new(), &mut f);
}
