//! Exact solvers for the coloring parameters.
//!
//! Every solver returns a witness coloring that has been re-checked with
//! [`classify`]. When a [`SearchLimits`] budget runs out the solver returns
//! [`Error::Exhausted`] carrying the best bounds (and witness, if any) it had.

pub mod bounds;
mod grundy;
mod partition;
pub mod report;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::coloring::{classify, Coloring, ColoringKind};
use crate::error::{Error, Partial, Result};
use crate::graph::Graph;

pub use report::{parameter_report, ParameterReport, Status};

/// Search budget for one solver call. Zero means unlimited.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct SearchLimits {
    pub node_budget: u64,
    /// Wall-clock seconds.
    pub time_budget: f64,
}

impl SearchLimits {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn nodes(node_budget: u64) -> Self {
        Self {
            node_budget,
            time_budget: 0.0,
        }
    }
}

/// Marker for a search cut off by its budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Exhausted;

pub(crate) struct Budget {
    nodes: u64,
    limit: u64,
    deadline: Option<Instant>,
}

impl Budget {
    pub(crate) fn new(limits: &SearchLimits) -> Self {
        let deadline = (limits.time_budget > 0.0)
            .then(|| Instant::now() + Duration::from_secs_f64(limits.time_budget));
        Self {
            nodes: 0,
            limit: limits.node_budget,
            deadline,
        }
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> std::result::Result<(), Exhausted> {
        self.nodes += 1;
        if self.limit != 0 && self.nodes > self.limit {
            return Err(Exhausted);
        }
        if self.nodes & 0xfff == 0 {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    return Err(Exhausted);
                }
            }
        }
        Ok(())
    }
}

/// The eight quantities computed by this crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Parameter {
    FallSpectrum,
    Chi,
    ChiF,
    PsiF,
    Phi,
    Gamma,
    PartialGamma,
    Psi,
}

impl Parameter {
    pub const ALL: [Parameter; 8] = [
        Parameter::FallSpectrum,
        Parameter::Chi,
        Parameter::ChiF,
        Parameter::PsiF,
        Parameter::Phi,
        Parameter::Gamma,
        Parameter::PartialGamma,
        Parameter::Psi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Parameter::FallSpectrum => "fall_spectrum",
            Parameter::Chi => "chi",
            Parameter::ChiF => "chi_f",
            Parameter::PsiF => "psi_f",
            Parameter::Phi => "phi",
            Parameter::Gamma => "gamma",
            Parameter::PartialGamma => "partial_gamma",
            Parameter::Psi => "psi",
        }
    }

    /// Coloring class a witness for this parameter must belong to.
    pub fn witness_kind(self) -> ColoringKind {
        match self {
            Parameter::Chi => ColoringKind::Proper,
            Parameter::FallSpectrum | Parameter::ChiF | Parameter::PsiF => ColoringKind::Fall,
            Parameter::Phi => ColoringKind::BColoring,
            Parameter::Gamma => ColoringKind::Grundy,
            Parameter::PartialGamma => ColoringKind::PartialGrundy,
            Parameter::Psi => ColoringKind::Complete,
        }
    }

    pub fn depends_on_fall(self) -> bool {
        matches!(
            self,
            Parameter::FallSpectrum | Parameter::ChiF | Parameter::PsiF
        )
    }
}

impl fmt::Display for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Parameter {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Parameter::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Parameter::ALL.iter().map(|p| p.name()).collect();
                format!("unknown parameter `{s}` (expected one of {})", names.join(", "))
            })
    }
}

/// An exact parameter value with its certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub value: usize,
    pub witness: Coloring,
}

fn nonempty(g: &Graph) -> Result<()> {
    if g.n() == 0 {
        Err(Error::EmptyGraph)
    } else {
        Ok(())
    }
}

fn exhausted(lower: usize, upper: usize, witness: Option<Coloring>) -> Error {
    Error::Exhausted(Box::new(Partial {
        lower,
        upper,
        witness,
    }))
}

fn certify(g: &Graph, c: &Coloring, kind: ColoringKind) -> Coloring {
    let cls = classify(g, c).expect("witness length matches graph");
    assert!(cls.is(kind), "solver produced a non-{kind:?} witness: {c:?}");
    c.clone()
}

/// Smallest `k` with a proper `k`-coloring.
pub fn chromatic_number(g: &Graph, limits: &SearchLimits) -> Result<Solution> {
    nonempty(g)?;
    let lower = bounds::clique_lower_bound(g);
    let greedy = bounds::greedy_min(g);
    let mut budget = Budget::new(limits);
    for k in lower..greedy.k() {
        match partition::search(g, k, partition::Goal::AtMost, &mut budget) {
            Ok(Some(c)) => {
                return Ok(Solution {
                    value: c.k(),
                    witness: certify(g, &c, ColoringKind::Proper),
                })
            }
            Ok(None) => {}
            Err(Exhausted) => return Err(exhausted(k, greedy.k(), Some(greedy))),
        }
    }
    Ok(Solution {
        value: greedy.k(),
        witness: greedy,
    })
}

/// A fall `k`-coloring, or `None` when none exists.
pub fn find_fall_coloring(g: &Graph, k: usize, limits: &SearchLimits) -> Result<Option<Coloring>> {
    nonempty(g)?;
    let mut budget = Budget::new(limits);
    fall_with_budget(g, k, &mut budget)
        .map_err(|_| exhausted(0, g.min_degree() + 1, None))
}

fn fall_with_budget(
    g: &Graph,
    k: usize,
    budget: &mut Budget,
) -> std::result::Result<Option<Coloring>, Exhausted> {
    // Every closed neighborhood must hold k distinct colors.
    if k == 0 || k > g.min_degree() + 1 || k < bounds::clique_lower_bound(g) {
        return Ok(None);
    }
    Ok(partition::search(g, k, partition::Goal::Fall, budget)?
        .map(|c| certify(g, &c, ColoringKind::Fall)))
}

/// Every `k` with a fall `k`-coloring, each with its witness. Each `k` in
/// `1..=δ+1` is decided on its own.
pub fn fall_witnesses(g: &Graph, limits: &SearchLimits) -> Result<BTreeMap<usize, Coloring>> {
    nonempty(g)?;
    let mut budget = Budget::new(limits);
    let mut out = BTreeMap::new();
    for k in 1..=g.min_degree() + 1 {
        match fall_with_budget(g, k, &mut budget) {
            Ok(Some(c)) => {
                out.insert(k, c);
            }
            Ok(None) => {}
            Err(Exhausted) => return Err(exhausted(0, g.min_degree() + 1, None)),
        }
    }
    Ok(out)
}

pub fn fall_spectrum(g: &Graph, limits: &SearchLimits) -> Result<BTreeSet<usize>> {
    Ok(fall_witnesses(g, limits)?.into_keys().collect())
}

/// Smallest member of the fall spectrum, searching upward from `χ`'s clique bound.
pub fn fall_chromatic_number(g: &Graph, limits: &SearchLimits) -> Result<Option<Solution>> {
    nonempty(g)?;
    let mut budget = Budget::new(limits);
    for k in 1..=g.min_degree() + 1 {
        match fall_with_budget(g, k, &mut budget) {
            Ok(Some(c)) => return Ok(Some(Solution { value: k, witness: c })),
            Ok(None) => {}
            Err(Exhausted) => return Err(exhausted(k, g.min_degree() + 1, None)),
        }
    }
    Ok(None)
}

/// Descends from `upper` to `lower + 1`, falling back on the lower witness.
fn descend(
    g: &Graph,
    upper: usize,
    fallback: Option<Coloring>,
    kind: ColoringKind,
    limits: &SearchLimits,
    mut probe: impl FnMut(usize, &mut Budget) -> std::result::Result<Option<Coloring>, Exhausted>,
) -> Result<Solution> {
    let lower = fallback.as_ref().map_or(0, Coloring::k);
    let mut budget = Budget::new(limits);
    let mut k = upper;
    while k > lower {
        match probe(k, &mut budget) {
            Ok(Some(c)) => {
                let witness = certify(g, &c, kind);
                return Ok(Solution {
                    value: witness.k(),
                    witness,
                });
            }
            Ok(None) => k -= 1,
            Err(Exhausted) => return Err(exhausted(lower.max(1), k, fallback)),
        }
    }
    let witness = fallback.expect("the descent only ends below upper with a fallback witness");
    Ok(Solution {
        value: witness.k(),
        witness: certify(g, &witness, kind),
    })
}

/// Largest `k` with a b-coloring, searched down from the m-degree bound.
pub fn b_chromatic_number(g: &Graph, limits: &SearchLimits) -> Result<Solution> {
    nonempty(g)?;
    let upper = bounds::m_degree(g);
    descend(g, upper, None, ColoringKind::BColoring, limits, |k, b| {
        partition::search(g, k, partition::Goal::BColoring, b)
    })
}

/// Largest `k` with a Grundy coloring.
pub fn grundy_number(g: &Graph, limits: &SearchLimits) -> Result<Solution> {
    nonempty(g)?;
    let heights = bounds::grundy_heights(g);
    let upper = heights.into_iter().max().unwrap_or(1).min(g.max_degree() + 1);
    let greedy = bounds::greedy_max(g);
    descend(g, upper, Some(greedy), ColoringKind::Grundy, limits, |k, b| {
        grundy::search(g, k, grundy::Mode::Full, b)
    })
}

/// Largest `k` with a partial Grundy coloring. Bounded by `Δ + 1`.
pub fn partial_grundy_number(g: &Graph, limits: &SearchLimits) -> Result<Solution> {
    nonempty(g)?;
    let upper = (g.max_degree() + 1).min(bounds::edge_pair_bound(g));
    let greedy = bounds::greedy_max(g);
    descend(g, upper, Some(greedy), ColoringKind::PartialGrundy, limits, |k, b| {
        grundy::search(g, k, grundy::Mode::Partial, b)
    })
}

/// Largest `k` with a complete coloring, bounded by `k(k-1)/2 <= m`.
pub fn achromatic_number(g: &Graph, limits: &SearchLimits) -> Result<Solution> {
    nonempty(g)?;
    let upper = bounds::edge_pair_bound(g);
    let greedy = bounds::greedy_max(g);
    descend(g, upper, Some(greedy), ColoringKind::Complete, limits, |k, b| {
        partition::search(g, k, partition::Goal::Complete, b)
    })
}
