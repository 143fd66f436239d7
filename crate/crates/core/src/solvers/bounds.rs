//! Cheap bounds and greedy witnesses used to bracket the exact searches.

use crate::coloring::Coloring;
use crate::graph::Graph;

/// Size of a greedily grown clique; a lower bound for the chromatic number.
pub fn clique_lower_bound(g: &Graph) -> usize {
    let mut best = usize::from(g.n() > 0);
    for v in 0..g.n() {
        let mut cands: Vec<usize> = g.neighbors(v).to_vec();
        cands.sort_by_key(|&u| (std::cmp::Reverse(g.degree(u)), u));
        let mut clique = vec![v];
        for u in cands {
            if clique.iter().all(|&w| g.has_edge(u, w)) {
                clique.push(u);
            }
        }
        best = best.max(clique.len());
    }
    best
}

/// Largest `i` such that at least `i` vertices have degree `>= i - 1`.
pub fn m_degree(g: &Graph) -> usize {
    let mut degs: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    degs.sort_unstable_by(|a, b| b.cmp(a));
    degs.iter()
        .enumerate()
        .take_while(|&(i, &d)| d >= i)
        .count()
}

/// Largest `k <= n` with `k(k-1)/2 <= m`: a complete `k`-coloring needs one
/// edge per color pair.
pub fn edge_pair_bound(g: &Graph) -> usize {
    let m = g.m();
    let mut k = 1;
    while k < g.n() && (k + 1) * k / 2 <= m {
        k += 1;
    }
    k
}

/// Per-vertex cap on the color a vertex can carry in a Grundy coloring.
///
/// A vertex with color `c` needs distinct neighbors colored `1..c`, and the
/// neighbor colored `i` must itself be able to reach `i`. Iterated to a
/// fixpoint starting from `deg + 1`.
pub fn grundy_heights(g: &Graph) -> Vec<usize> {
    let mut h: Vec<usize> = (0..g.n()).map(|v| g.degree(v) + 1).collect();
    let mut buf = Vec::new();
    loop {
        let mut changed = false;
        for v in 0..g.n() {
            buf.clear();
            buf.extend(g.neighbors(v).iter().map(|&u| h[u]));
            buf.sort_unstable();
            let mut t = 0;
            for &hu in &buf {
                if hu > t {
                    t += 1;
                }
            }
            if t + 1 < h[v] {
                h[v] = t + 1;
                changed = true;
            }
        }
        if !changed {
            return h;
        }
    }
}

/// First-fit coloring in the given vertex order. Always a Grundy coloring.
pub fn first_fit(g: &Graph, order: &[usize]) -> Coloring {
    let mut colors = vec![0usize; g.n()];
    let mut seen = vec![false; g.n() + 2];
    for &v in order {
        for &u in g.neighbors(v) {
            seen[colors[u]] = true;
        }
        colors[v] = (1..).find(|&c| !seen[c]).expect("some color is free");
        for &u in g.neighbors(v) {
            seen[colors[u]] = false;
        }
    }
    Coloring::from_colors(colors).expect("first fit uses colors 1..=k")
}

/// Best of a few deterministic first-fit orders, by number of colors.
pub fn greedy_max(g: &Graph) -> Coloring {
    greedy_orders(g)
        .into_iter()
        .map(|o| first_fit(g, &o))
        .max_by_key(Coloring::k)
        .expect("at least one order")
}

/// Fewest colors over the same orders.
pub fn greedy_min(g: &Graph) -> Coloring {
    greedy_orders(g)
        .into_iter()
        .map(|o| first_fit(g, &o))
        .min_by_key(Coloring::k)
        .expect("at least one order")
}

fn greedy_orders(g: &Graph) -> Vec<Vec<usize>> {
    let ids: Vec<usize> = (0..g.n()).collect();
    let mut by_deg_desc = ids.clone();
    by_deg_desc.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut by_deg_asc = ids.clone();
    by_deg_asc.sort_by_key(|&v| (g.degree(v), v));
    let rev: Vec<usize> = ids.iter().rev().copied().collect();
    vec![ids, by_deg_desc, by_deg_asc, rev]
}
