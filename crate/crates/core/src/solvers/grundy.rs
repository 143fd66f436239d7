//! Witness search for Grundy and partial Grundy colorings.
//!
//! Colors are ordered here, so no color symmetry is broken. Instead of
//! coloring the whole graph, the search grows a partial assignment that
//! already certifies the target: for Grundy colorings a vertex colored `k`
//! together with neighbors carrying every lower color, recursively; for
//! partial Grundy colorings one certified vertex per color. Every other vertex
//! is then colored first-fit, which keeps the assignment proper and leaves
//! each certified vertex Grundy.
//!
//! First-fit may exceed `k` when some vertex already sees every color. The
//! result is then a valid coloring with more colors, which is still a
//! witness for "at least `k`".

use super::bounds::grundy_heights;
use super::{Budget, Exhausted};
use crate::coloring::Coloring;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Mode {
    /// Every assigned vertex must be Grundy.
    Full,
    /// Only one designated vertex per color must be Grundy.
    Partial,
}

/// Finds a (partial) Grundy coloring with at least `k` colors.
pub(crate) fn search(
    g: &Graph,
    k: usize,
    mode: Mode,
    budget: &mut Budget,
) -> Result<Option<Coloring>, Exhausted> {
    if k == 0 || k > g.n() {
        return Ok(None);
    }
    let caps: Vec<usize> = match mode {
        Mode::Full => grundy_heights(g),
        Mode::Partial => (0..g.n()).map(|v| g.degree(v) + 1).collect(),
    };
    let mut st = State {
        g,
        k,
        mode,
        caps,
        color: vec![0; g.n()],
        cnt: vec![0; g.n() * (k + 1)],
        free_nbrs: (0..g.n()).map(|v| g.degree(v)).collect(),
        required: vec![false; g.n()],
        has_rep: vec![false; k + 1],
    };
    let found = match mode {
        Mode::Full => {
            let mut hit = false;
            for v in 0..g.n() {
                if st.caps[v] < k {
                    continue;
                }
                st.assign(v, k, true);
                if st.dfs(budget)? {
                    hit = true;
                    break;
                }
                st.unassign(v);
            }
            hit
        }
        Mode::Partial => st.dfs(budget)?,
    };
    Ok(found.then(|| st.extend()))
}

struct State<'g> {
    g: &'g Graph,
    k: usize,
    mode: Mode,
    caps: Vec<usize>,
    color: Vec<usize>,
    cnt: Vec<u32>,
    free_nbrs: Vec<usize>,
    required: Vec<bool>,
    has_rep: Vec<bool>,
}

impl State<'_> {
    #[inline]
    fn count(&self, v: usize, c: usize) -> u32 {
        self.cnt[v * (self.k + 1) + c]
    }

    fn missing(&self, v: usize) -> usize {
        (1..self.color[v]).filter(|&c| self.count(v, c) == 0).count()
    }

    fn satisfiable(&self, v: usize) -> bool {
        !self.required[v] || self.missing(v) <= self.free_nbrs[v]
    }

    fn assign(&mut self, v: usize, c: usize, required: bool) {
        self.color[v] = c;
        self.set_required(v, required);
        let k1 = self.k + 1;
        for &u in self.g.neighbors(v) {
            self.cnt[u * k1 + c] += 1;
            self.free_nbrs[u] -= 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.color[v];
        let k1 = self.k + 1;
        for &u in self.g.neighbors(v) {
            self.cnt[u * k1 + c] -= 1;
            self.free_nbrs[u] += 1;
        }
        self.set_required(v, false);
        self.color[v] = 0;
    }

    fn set_required(&mut self, v: usize, on: bool) {
        if self.required[v] != on {
            self.required[v] = on;
            if self.mode == Mode::Partial {
                self.has_rep[self.color[v]] = on;
            }
        }
    }

    fn locally_ok(&self, v: usize) -> bool {
        self.satisfiable(v) && self.g.neighbors(v).iter().all(|&u| self.satisfiable(u))
    }

    /// Required vertex with the least slack between open slots and missing colors.
    fn tightest(&self) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, usize)> = None;
        for v in 0..self.g.n() {
            if !self.required[v] {
                continue;
            }
            let miss = self.missing(v);
            if miss == 0 {
                continue;
            }
            let slack = self.free_nbrs[v] - miss;
            if best.is_none_or(|(s, _, _)| slack < s) {
                let top = (1..self.color[v])
                    .rev()
                    .find(|&c| self.count(v, c) == 0)
                    .expect("a color is missing");
                best = Some((slack, v, top));
            }
        }
        best.map(|(_, v, c)| (v, c))
    }

    fn dfs(&mut self, budget: &mut Budget) -> Result<bool, Exhausted> {
        budget.tick()?;
        if let Some((x, c)) = self.tightest() {
            let support_required = self.mode == Mode::Full;
            let cands: Vec<usize> = self
                .g
                .neighbors(x)
                .iter()
                .copied()
                .filter(|&u| {
                    self.color[u] == 0
                        && self.count(u, c) == 0
                        && (!support_required || self.caps[u] >= c)
                })
                .collect();
            for u in cands {
                self.assign(u, c, support_required);
                if self.locally_ok(u) && self.dfs(budget)? {
                    return Ok(true);
                }
                self.unassign(u);
            }
            return Ok(false);
        }
        if self.mode == Mode::Full {
            return Ok(true);
        }
        // Every representative is satisfied; pick one for the highest color still lacking.
        let Some(c) = (1..=self.k).rev().find(|&c| !self.has_rep[c]) else {
            return Ok(true);
        };
        for v in 0..self.g.n() {
            if self.color[v] == c && !self.required[v] && self.caps[v] >= c {
                self.set_required(v, true);
                if self.satisfiable(v) && self.dfs(budget)? {
                    return Ok(true);
                }
                self.set_required(v, false);
            }
        }
        for v in 0..self.g.n() {
            if self.color[v] == 0 && self.caps[v] >= c && self.count(v, c) == 0 {
                self.assign(v, c, true);
                if self.locally_ok(v) && self.dfs(budget)? {
                    return Ok(true);
                }
                self.unassign(v);
            }
        }
        Ok(false)
    }

    /// First-fit over the unassigned vertices in id order.
    fn extend(mut self) -> Coloring {
        let n = self.g.n();
        let mut seen = vec![false; n + 2];
        for v in 0..n {
            if self.color[v] != 0 {
                continue;
            }
            for &u in self.g.neighbors(v) {
                seen[self.color[u]] = true;
            }
            self.color[v] = (1..).find(|&c| !seen[c]).expect("a color is free");
            for &u in self.g.neighbors(v) {
                seen[self.color[u]] = false;
            }
        }
        Coloring::from_colors(self.color).expect("colors start at 1")
    }
}
