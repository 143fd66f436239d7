use serde::{Deserialize, Serialize};

use super::{add_pendants, Graph};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Family {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    /// `K_{n,n}` minus the matching `{left i, right i}`.
    BipartiteMinusMatching,
    /// `T(1)` is a single vertex; `T(k+1)` adds one pendant to every vertex of `T(k)`.
    TTree,
    /// Path on `e + 3` vertices with `e + 2` pendants on every vertex.
    PendantPath,
    /// Path `v1..v_{e+5}` with `i - 2` pendants on `v_i` for `i >= 3`.
    CaterpillarG6,
}

impl Family {
    fn arity(self) -> usize {
        match self {
            Family::CompleteBipartite => 2,
            _ => 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub params: Vec<usize>,
}

impl FamilySpec {
    pub fn new(family: Family, params: Vec<usize>) -> Self {
        Self { family, params }
    }

    pub fn path(n: usize) -> Self {
        Self::new(Family::Path, vec![n])
    }

    pub fn cycle(n: usize) -> Self {
        Self::new(Family::Cycle, vec![n])
    }

    pub fn complete(n: usize) -> Self {
        Self::new(Family::Complete, vec![n])
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        Self::new(Family::CompleteBipartite, vec![a, b])
    }

    pub fn bipartite_minus_matching(n: usize) -> Self {
        Self::new(Family::BipartiteMinusMatching, vec![n])
    }

    pub fn t_tree(k: usize) -> Self {
        Self::new(Family::TTree, vec![k])
    }

    pub fn pendant_path(epsilon: usize) -> Self {
        Self::new(Family::PendantPath, vec![epsilon])
    }

    pub fn caterpillar_g6(epsilon: usize) -> Self {
        Self::new(Family::CaterpillarG6, vec![epsilon])
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidFamily(format!("{:?}: {msg}", self.family)));
        if self.params.len() != self.family.arity() {
            return bad(&format!(
                "expected {} parameter(s), got {}",
                self.family.arity(),
                self.params.len()
            ));
        }
        let p = self.params[0];
        match self.family {
            Family::Cycle if p < 3 => bad("length must be at least 3"),
            Family::CompleteBipartite if p == 0 || self.params[1] == 0 => {
                bad("both sides must be nonempty")
            }
            Family::TTree if p > 20 => bad("k must be at most 20"),
            _ if p == 0 => bad("parameter must be positive"),
            _ => Ok(()),
        }
    }

    fn name(&self) -> String {
        let p = self.params[0];
        match self.family {
            Family::Path => format!("P{p}"),
            Family::Cycle => format!("C{p}"),
            Family::Complete => format!("K{p}"),
            Family::CompleteBipartite => format!("K{},{}", p, self.params[1]),
            Family::BipartiteMinusMatching => format!("K{p},{p}-PM"),
            Family::TTree => format!("T({p})"),
            Family::PendantPath => format!("G4({p})"),
            Family::CaterpillarG6 => format!("G6({p})"),
        }
    }
}

pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    let p = spec.params[0];
    let g = match spec.family {
        Family::Path => path(p),
        Family::Cycle => {
            let mut edges: Vec<(usize, usize)> = (0..p - 1).map(|i| (i, i + 1)).collect();
            edges.push((p - 1, 0));
            Graph::from_edge_list(p, &edges)?
        }
        Family::Complete => {
            let edges: Vec<_> = (0..p)
                .flat_map(|u| (u + 1..p).map(move |v| (u, v)))
                .collect();
            Graph::from_edge_list(p, &edges)?
        }
        Family::CompleteBipartite => {
            let q = spec.params[1];
            let edges: Vec<_> = (0..p)
                .flat_map(|u| (0..q).map(move |v| (u, p + v)))
                .collect();
            Graph::from_edge_list(p + q, &edges)?
        }
        Family::BipartiteMinusMatching => {
            let edges: Vec<_> = (0..p)
                .flat_map(|u| (0..p).filter(move |&v| v != u).map(move |v| (u, p + v)))
                .collect();
            Graph::from_edge_list(2 * p, &edges)?
        }
        Family::TTree => {
            let mut g = Graph::empty(1);
            for _ in 1..p {
                g = add_pendants(&g, &vec![1; g.n()])?;
            }
            g
        }
        Family::PendantPath => add_pendants(&path(p + 3), &vec![p + 2; p + 3])?,
        Family::CaterpillarG6 => {
            let counts: Vec<usize> = (1..=p + 5).map(|i| i.saturating_sub(2)).collect();
            add_pendants(&path(p + 5), &counts)?
        }
    };
    Ok(g.with_name(spec.name()))
}

fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edge_list(n, &edges).expect("path edges are in range")
}
