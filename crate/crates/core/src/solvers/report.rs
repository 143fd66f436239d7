//! All parameters of one graph in a single report.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Serialize, Serializer};
use serde_json::{json, Value};

use super::{bounds, Parameter, SearchLimits, Solution};
use crate::coloring::{classify, Coloring};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Exact,
    LowerBoundOnly,
    Timeout,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphSummary {
    pub n: usize,
    pub m: usize,
    pub name: Option<String>,
}

impl GraphSummary {
    pub fn of(g: &Graph) -> Self {
        Self {
            n: g.n(),
            m: g.m(),
            name: g.name().map(str::to_owned),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ParameterReport {
    pub graph: Option<GraphSummary>,
    pub chi: Option<usize>,
    pub fall_spectrum: Option<BTreeSet<usize>>,
    pub chi_f: Option<usize>,
    pub psi_f: Option<usize>,
    pub phi: Option<usize>,
    pub gamma: Option<usize>,
    pub partial_gamma: Option<usize>,
    pub psi: Option<usize>,
    pub witnesses: BTreeMap<Parameter, Coloring>,
    pub bounds_used: BTreeMap<Parameter, (usize, usize)>,
    pub status: BTreeMap<Parameter, Status>,
}

impl ParameterReport {
    pub fn value(&self, p: Parameter) -> Option<usize> {
        match p {
            Parameter::FallSpectrum => None,
            Parameter::Chi => self.chi,
            Parameter::ChiF => self.chi_f,
            Parameter::PsiF => self.psi_f,
            Parameter::Phi => self.phi,
            Parameter::Gamma => self.gamma,
            Parameter::PartialGamma => self.partial_gamma,
            Parameter::Psi => self.psi,
        }
    }

    fn slot(&mut self, p: Parameter) -> &mut Option<usize> {
        match p {
            Parameter::Chi => &mut self.chi,
            Parameter::ChiF => &mut self.chi_f,
            Parameter::PsiF => &mut self.psi_f,
            Parameter::Phi => &mut self.phi,
            Parameter::Gamma => &mut self.gamma,
            Parameter::PartialGamma => &mut self.partial_gamma,
            Parameter::Psi => &mut self.psi,
            Parameter::FallSpectrum => unreachable!("the spectrum is a set"),
        }
    }

    pub fn is_exact(&self, p: Parameter) -> bool {
        self.status.get(&p) == Some(&Status::Exact)
    }

    pub fn any_timeout(&self) -> bool {
        self.status.values().any(|s| *s != Status::Exact)
    }

    /// Violations of the parameter chain among exact entries.
    pub fn chain_violations(&self) -> Vec<String> {
        use Parameter::*;
        let mut out = Vec::new();
        let get = |p: Parameter| self.is_exact(p).then(|| self.value(p)).flatten();
        let mut le = |a: Parameter, b: Parameter| {
            if let (Some(x), Some(y)) = (get(a), get(b)) {
                if x > y {
                    out.push(format!("{a}={x} > {b}={y}"));
                }
            }
        };
        if self.fall_spectrum.as_ref().is_some_and(|s| !s.is_empty()) {
            le(Chi, ChiF);
            le(ChiF, PsiF);
            le(PsiF, Phi);
            le(PsiF, Gamma);
        }
        le(Phi, PartialGamma);
        le(Gamma, PartialGamma);
        le(PartialGamma, Psi);
        out
    }

    pub fn to_json(&self) -> Value {
        let mut params = serde_json::Map::new();
        let mut status = serde_json::Map::new();
        let mut bounds = serde_json::Map::new();
        for (p, s) in &self.status {
            status.insert(p.name().into(), json!(s));
            let v = match p {
                Parameter::FallSpectrum => json!(self.fall_spectrum),
                other => json!(self.value(*other)),
            };
            params.insert(p.name().into(), v);
        }
        for (p, (lo, hi)) in &self.bounds_used {
            bounds.insert(p.name().into(), json!([lo, hi]));
        }
        let witnesses: serde_json::Map<String, Value> = self
            .witnesses
            .iter()
            .map(|(p, c)| (p.name().to_owned(), json!(c)))
            .collect();
        json!({
            "graph": self.graph,
            "parameters": params,
            "witnesses": witnesses,
            "status": status,
            "bounds": bounds,
        })
    }
}

impl Serialize for ParameterReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

enum Piece {
    Single(Parameter, Result<Solution>, (usize, usize)),
    Fall(Result<BTreeMap<usize, Coloring>>, (usize, usize)),
}

/// Runs the selected solvers, cross-checks every witness and merges the
/// results. Budget exhaustion downgrades a parameter's status; it never
/// aborts the others.
pub fn parameter_report(
    g: &Graph,
    limits: &SearchLimits,
    select: &BTreeSet<Parameter>,
) -> Result<ParameterReport> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let need_fall = select.iter().any(|p| p.depends_on_fall());
    let singles: Vec<Parameter> = select
        .iter()
        .copied()
        .filter(|p| !p.depends_on_fall())
        .collect();

    // Independent solver runs; merged below in a fixed order.
    let pieces: Vec<Piece> = std::thread::scope(|scope| {
        let mut handles = Vec::new();
        if need_fall {
            handles.push(scope.spawn(|| {
                Piece::Fall(super::fall_witnesses(g, limits), (1, g.min_degree() + 1))
            }));
        }
        for &p in &singles {
            handles.push(scope.spawn(move || {
                let (res, b) = solve_single(g, p, limits);
                Piece::Single(p, res, b)
            }));
        }
        handles
            .into_iter()
            .map(|h| h.join().expect("solver thread panicked"))
            .collect()
    });

    let mut report = ParameterReport {
        graph: Some(GraphSummary::of(g)),
        ..Default::default()
    };
    for piece in pieces {
        match piece {
            Piece::Fall(res, b) => merge_fall(&mut report, select, res, b)?,
            Piece::Single(p, res, b) => merge_single(&mut report, p, res, b)?,
        }
    }
    for (p, c) in &report.witnesses {
        let cls = classify(g, c)?;
        assert!(cls.is(p.witness_kind()), "{p} witness failed its check");
    }
    let violations = report.chain_violations();
    assert!(violations.is_empty(), "parameter chain violated: {violations:?}");
    Ok(report)
}

fn solve_single(g: &Graph, p: Parameter, limits: &SearchLimits) -> (Result<Solution>, (usize, usize)) {
    match p {
        Parameter::Chi => (
            super::chromatic_number(g, limits),
            (bounds::clique_lower_bound(g), bounds::greedy_min(g).k()),
        ),
        Parameter::Phi => (super::b_chromatic_number(g, limits), (1, bounds::m_degree(g))),
        Parameter::Gamma => (
            super::grundy_number(g, limits),
            (bounds::greedy_max(g).k(), g.max_degree() + 1),
        ),
        Parameter::PartialGamma => (
            super::partial_grundy_number(g, limits),
            (bounds::greedy_max(g).k(), g.max_degree() + 1),
        ),
        Parameter::Psi => (
            super::achromatic_number(g, limits),
            (bounds::greedy_max(g).k(), bounds::edge_pair_bound(g)),
        ),
        Parameter::FallSpectrum | Parameter::ChiF | Parameter::PsiF => {
            unreachable!("fall parameters are solved together")
        }
    }
}

fn merge_single(
    report: &mut ParameterReport,
    p: Parameter,
    res: Result<Solution>,
    b: (usize, usize),
) -> Result<()> {
    report.bounds_used.insert(p, b);
    match res {
        Ok(sol) => {
            *report.slot(p) = Some(sol.value);
            report.witnesses.insert(p, sol.witness);
            report.status.insert(p, Status::Exact);
        }
        Err(Error::Exhausted(partial)) => {
            report.bounds_used.insert(p, (partial.lower, partial.upper));
            // Only a maximizing parameter's witness is a lower bound.
            match partial.witness.filter(|_| p != Parameter::Chi) {
                Some(w) => {
                    *report.slot(p) = Some(w.k());
                    report.witnesses.insert(p, w);
                    report.status.insert(p, Status::LowerBoundOnly);
                }
                None => {
                    report.status.insert(p, Status::Timeout);
                }
            }
        }
        Err(e) => return Err(e),
    }
    Ok(())
}

fn merge_fall(
    report: &mut ParameterReport,
    select: &BTreeSet<Parameter>,
    res: Result<BTreeMap<usize, Coloring>>,
    b: (usize, usize),
) -> Result<()> {
    let fall_params: Vec<Parameter> = select.iter().copied().filter(|p| p.depends_on_fall()).collect();
    match res {
        Ok(spectrum) => {
            for &p in &fall_params {
                report.status.insert(p, Status::Exact);
                report.bounds_used.insert(p, b);
            }
            if select.contains(&Parameter::FallSpectrum) {
                report.fall_spectrum = Some(spectrum.keys().copied().collect());
            }
            let lo = spectrum.iter().next();
            let hi = spectrum.iter().next_back();
            if select.contains(&Parameter::ChiF) {
                report.chi_f = lo.map(|(k, _)| *k);
                if let Some((_, w)) = lo {
                    report.witnesses.insert(Parameter::ChiF, w.clone());
                }
            }
            if select.contains(&Parameter::PsiF) {
                report.psi_f = hi.map(|(k, _)| *k);
                if let Some((_, w)) = hi {
                    report.witnesses.insert(Parameter::PsiF, w.clone());
                }
            }
        }
        Err(Error::Exhausted(_)) => {
            for &p in &fall_params {
                report.status.insert(p, Status::Timeout);
                report.bounds_used.insert(p, b);
            }
        }
        Err(e) => return Err(e),
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};

    fn all() -> BTreeSet<Parameter> {
        Parameter::ALL.into_iter().collect()
    }

    #[test]
    fn c4_report() {
        let c4 = generate(&FamilySpec::cycle(4)).unwrap();
        let r = parameter_report(&c4, &SearchLimits::default(), &all()).unwrap();
        assert_eq!(r.chi, Some(2));
        assert_eq!(r.fall_spectrum, Some([2].into()));
        assert_eq!((r.chi_f, r.psi_f), (Some(2), Some(2)));
        assert_eq!((r.phi, r.gamma, r.partial_gamma, r.psi), (Some(2), Some(2), Some(2), Some(2)));
        assert!(!r.any_timeout());
    }

    #[test]
    fn k1_report() {
        let r = parameter_report(&Graph::empty(1), &SearchLimits::default(), &all()).unwrap();
        assert_eq!(r.fall_spectrum, Some([1].into()));
        for p in Parameter::ALL.into_iter().filter(|&p| p != Parameter::FallSpectrum) {
            assert_eq!(r.value(p), Some(1), "{p}");
        }
    }

    #[test]
    fn k2_plus_k1_has_no_fall_coloring() {
        let g = Graph::from_edge_list(3, &[(0, 1)]).unwrap();
        let r = parameter_report(&g, &SearchLimits::default(), &all()).unwrap();
        assert_eq!(r.fall_spectrum, Some(BTreeSet::new()));
        assert_eq!(r.chi, Some(2));
        assert_eq!(r.chi_f, None);
        let j = r.to_json();
        assert_eq!(j["parameters"]["fall_spectrum"], json!([]));
        assert_eq!(j["parameters"]["chi_f"], Value::Null);
    }

    #[test]
    fn timeouts_do_not_abort() {
        let g = generate(&FamilySpec::cycle(11)).unwrap();
        let r = parameter_report(&g, &SearchLimits::nodes(1), &all()).unwrap();
        assert_eq!(r.status.len(), 8);
        assert!(r.any_timeout());
        assert!(r.chain_violations().is_empty());
    }

    #[test]
    fn json_shape() {
        let g = generate(&FamilySpec::path(3)).unwrap();
        let sel: BTreeSet<_> = [Parameter::Chi, Parameter::Psi].into();
        let j = parameter_report(&g, &SearchLimits::default(), &sel).unwrap().to_json();
        for key in ["graph", "parameters", "witnesses", "status"] {
            assert!(j.get(key).is_some(), "{key}");
        }
        assert_eq!(j["graph"]["n"], 3);
        assert_eq!(j["status"]["chi"], "EXACT");
        assert_eq!(j["witnesses"]["psi"]["k"], 2);
    }
}
