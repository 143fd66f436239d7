//! Depth-first search over color-class partitions.
//!
//! Vertices are assigned in a static order (descending degree, ties by id)
//! with the lowest color tried first. Color `c + 1` may only be opened once
//! color `c` is in use, so every partition is visited under one labeling.
//! That is sound for every goal here because proper, fall, b- and complete
//! colorings are all closed under color permutation.

use super::{Budget, Exhausted};
use crate::coloring::{classify, Coloring};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Goal {
    /// Proper coloring with at most `k` colors.
    AtMost,
    Fall,
    BColoring,
    Complete,
}

pub(crate) fn search(
    g: &Graph,
    k: usize,
    goal: Goal,
    budget: &mut Budget,
) -> Result<Option<Coloring>, Exhausted> {
    if k == 0 || (goal != Goal::AtMost && k > g.n()) {
        return Ok(None);
    }
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut st = State::new(g, k, goal);
    if !st.initially_feasible() {
        return Ok(None);
    }
    if st.dfs(&order, 0, budget)? {
        let c = Coloring::new(k.min(st.opened.max(1)), st.color.clone())
            .expect("search assigns colors in 1..=k");
        Ok(Some(c))
    } else {
        Ok(None)
    }
}

struct State<'g> {
    g: &'g Graph,
    k: usize,
    goal: Goal,
    color: Vec<usize>,
    /// `cnt[v * (k + 1) + c]`: neighbors of `v` colored `c`.
    cnt: Vec<u32>,
    /// Distinct colors among colored neighbors.
    distinct: Vec<usize>,
    free_nbrs: Vec<usize>,
    class_size: Vec<usize>,
    opened: usize,
    uncolored: usize,
    /// `pair[a * (k + 1) + b]`: edges between classes `a` and `b`.
    pair: Vec<u32>,
    realized: usize,
    /// Edges with at least one uncolored endpoint.
    open_edges: usize,
}

impl<'g> State<'g> {
    fn new(g: &'g Graph, k: usize, goal: Goal) -> Self {
        let n = g.n();
        let pair_len = if goal == Goal::Complete { (k + 1) * (k + 1) } else { 0 };
        Self {
            g,
            k,
            goal,
            color: vec![0; n],
            cnt: vec![0; n * (k + 1)],
            distinct: vec![0; n],
            free_nbrs: (0..n).map(|v| g.degree(v)).collect(),
            class_size: vec![0; k + 1],
            opened: 0,
            uncolored: n,
            pair: vec![0; pair_len],
            realized: 0,
            open_edges: g.m(),
        }
    }

    fn initially_feasible(&self) -> bool {
        match self.goal {
            Goal::AtMost => true,
            Goal::Fall => (0..self.g.n()).all(|v| self.potential(v) >= self.k),
            Goal::BColoring => self.b_feasible(),
            Goal::Complete => self.complete_feasible(),
        }
    }

    #[inline]
    fn count(&self, v: usize, c: usize) -> u32 {
        self.cnt[v * (self.k + 1) + c]
    }

    /// Upper bound on how many colors `N[v]` can end up showing.
    #[inline]
    fn potential(&self, v: usize) -> usize {
        self.distinct[v] + 1 + self.free_nbrs[v]
    }

    fn assign(&mut self, v: usize, c: usize) {
        let k1 = self.k + 1;
        self.color[v] = c;
        self.class_size[c] += 1;
        if c > self.opened {
            self.opened = c;
        }
        self.uncolored -= 1;
        for &u in self.g.neighbors(v) {
            let slot = &mut self.cnt[u * k1 + c];
            *slot += 1;
            if *slot == 1 {
                self.distinct[u] += 1;
            }
            self.free_nbrs[u] -= 1;
            let cu = self.color[u];
            if cu != 0 {
                self.open_edges -= 1;
                if self.goal == Goal::Complete {
                    let p = &mut self.pair[c * k1 + cu];
                    *p += 1;
                    if *p == 1 {
                        self.realized += 1;
                    }
                    self.pair[cu * k1 + c] += 1;
                }
            }
        }
    }

    fn unassign(&mut self, v: usize) {
        let k1 = self.k + 1;
        let c = self.color[v];
        for &u in self.g.neighbors(v) {
            let slot = &mut self.cnt[u * k1 + c];
            *slot -= 1;
            if *slot == 0 {
                self.distinct[u] -= 1;
            }
            self.free_nbrs[u] += 1;
            let cu = self.color[u];
            if cu != 0 {
                self.open_edges += 1;
                if self.goal == Goal::Complete {
                    let p = &mut self.pair[c * k1 + cu];
                    *p -= 1;
                    if *p == 0 {
                        self.realized -= 1;
                    }
                    self.pair[cu * k1 + c] -= 1;
                }
            }
        }
        self.color[v] = 0;
        self.class_size[c] -= 1;
        self.uncolored += 1;
        if c == self.opened && self.class_size[c] == 0 {
            self.opened -= 1;
        }
    }

    fn dfs(&mut self, order: &[usize], depth: usize, budget: &mut Budget) -> Result<bool, Exhausted> {
        budget.tick()?;
        if depth == order.len() {
            return Ok(self.accept());
        }
        let v = order[depth];
        let top = (self.opened + 1).min(self.k);
        for c in 1..=top {
            if self.count(v, c) != 0 {
                continue;
            }
            self.assign(v, c);
            if self.feasible_after(v) && self.dfs(order, depth + 1, budget)? {
                return Ok(true);
            }
            self.unassign(v);
        }
        Ok(false)
    }

    fn feasible_after(&self, v: usize) -> bool {
        let k = self.k;
        if self.goal != Goal::AtMost && k - self.opened > self.uncolored {
            return false;
        }
        if self.opened == k {
            let blocked = self
                .g
                .neighbors(v)
                .iter()
                .any(|&u| self.color[u] == 0 && self.distinct[u] == k);
            if blocked {
                return false;
            }
        }
        match self.goal {
            Goal::AtMost => true,
            Goal::Fall => self.g.neighbors(v).iter().all(|&u| self.potential(u) >= k),
            Goal::BColoring => self.b_feasible(),
            Goal::Complete => self.complete_feasible(),
        }
    }

    /// Every class still has a vertex, present or future, that can become colorful.
    fn b_feasible(&self) -> bool {
        let k = self.k;
        let mut ok = vec![false; k + 1];
        let mut free_candidate = false;
        for v in 0..self.g.n() {
            if self.potential(v) < k {
                continue;
            }
            let c = self.color[v];
            if c != 0 {
                ok[c] = true;
            } else {
                free_candidate = true;
                for (d, slot) in ok.iter_mut().enumerate().skip(1) {
                    if self.count(v, d) == 0 {
                        *slot = true;
                    }
                }
            }
        }
        (1..=k).all(|c| ok[c] || (c > self.opened && free_candidate))
    }

    fn complete_feasible(&self) -> bool {
        let k = self.k;
        let needed = k * (k - 1) / 2;
        if needed - self.realized > self.open_edges {
            return false;
        }
        // Each opened class must still be able to touch k - 1 others.
        let k1 = k + 1;
        for c in 1..=self.opened {
            let touching = (1..=k).filter(|&d| d != c && self.pair[c * k1 + d] > 0).count();
            if touching + 1 >= k {
                continue;
            }
            // An uncolored neighbor of the class adds at most one new class;
            // an uncolored vertex that joins it adds at most its own potential.
            let reach: usize = (0..self.g.n())
                .filter(|&u| self.color[u] == 0)
                .map(|u| {
                    if self.count(u, c) > 0 {
                        1
                    } else {
                        self.distinct[u] + self.free_nbrs[u]
                    }
                })
                .sum();
            if touching + reach < k - 1 {
                return false;
            }
        }
        true
    }

    fn accept(&self) -> bool {
        if self.goal == Goal::AtMost {
            return true;
        }
        if self.opened != self.k {
            return false;
        }
        let c = Coloring::new(self.k, self.color.clone()).expect("colors in range");
        let cls = classify(self.g, &c).expect("lengths agree");
        match self.goal {
            Goal::AtMost => true,
            Goal::Fall => cls.fall,
            Goal::BColoring => cls.b_coloring,
            Goal::Complete => cls.complete,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};
    use crate::solvers::SearchLimits;

    fn run(g: &Graph, k: usize, goal: Goal) -> Option<Coloring> {
        let mut b = Budget::new(&SearchLimits::default());
        search(g, k, goal, &mut b).unwrap()
    }

    #[test]
    fn proper_colorings() {
        let c5 = generate(&FamilySpec::cycle(5)).unwrap();
        assert!(run(&c5, 2, Goal::AtMost).is_none());
        let c = run(&c5, 3, Goal::AtMost).unwrap();
        assert!(classify(&c5, &c).unwrap().proper);
    }

    #[test]
    fn fall_c6() {
        let c6 = generate(&FamilySpec::cycle(6)).unwrap();
        let c = run(&c6, 3, Goal::Fall).unwrap();
        assert_eq!(c.colors(), &[1, 2, 3, 1, 2, 3]);
        assert!(run(&generate(&FamilySpec::cycle(5)).unwrap(), 3, Goal::Fall).is_none());
    }

    #[test]
    fn complete_p4() {
        let p4 = generate(&FamilySpec::path(4)).unwrap();
        let c = run(&p4, 3, Goal::Complete).unwrap();
        assert!(classify(&p4, &c).unwrap().complete);
        assert!(run(&p4, 4, Goal::Complete).is_none());
    }

    #[test]
    fn budget_is_enforced() {
        let g = generate(&FamilySpec::cycle(9)).unwrap();
        let mut b = Budget::new(&SearchLimits {
            node_budget: 3,
            time_budget: 0.0,
        });
        assert!(search(&g, 3, Goal::Fall, &mut b).is_err());
    }
}
