//! One-shot verification run: cited values, nonexistence, the join
//! constructions, join additivity and the gap family. Output is deterministic
//! for a fixed `ε` as long as no budget runs out.

use serde::Serialize;

use super::gap::{theorem3_verify, GapReport};
use super::{compose_join_fall, restrict_fall, verify_join_additivity};
use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::{cartesian_product, generate, FamilySpec, Graph};
use crate::solvers::{self, Parameter, SearchLimits};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Outcome {
    Pass,
    Fail,
    Timeout,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub outcome: Outcome,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub epsilon: usize,
    pub checks: Vec<Check>,
    pub gap: GapReport,
}

impl SuiteReport {
    pub fn failed(&self) -> bool {
        self.checks.iter().any(|c| c.outcome == Outcome::Fail)
            || self.gap.unexpected_refutations().next().is_some()
    }

    pub fn timed_out(&self) -> bool {
        self.checks.iter().any(|c| c.outcome == Outcome::Timeout) || self.gap.any_timeout()
    }
}

fn check(name: &str, r: Result<(bool, String)>) -> Result<Check> {
    let (outcome, detail) = match r {
        Ok((true, d)) => (Outcome::Pass, d),
        Ok((false, d)) => (Outcome::Fail, d),
        Err(Error::Exhausted(p)) => (
            Outcome::Timeout,
            format!("budget exhausted with bounds [{}, {}]", p.lower, p.upper),
        ),
        Err(e) => return Err(e),
    };
    Ok(Check {
        name: name.to_owned(),
        outcome,
        detail,
    })
}

fn gen(spec: FamilySpec) -> Graph {
    generate(&spec).expect("fixed specs are valid")
}

/// Small graphs used for the join checks, by name.
pub fn small_catalog() -> Vec<Graph> {
    vec![
        gen(FamilySpec::complete(1)),
        gen(FamilySpec::complete(2)),
        gen(FamilySpec::path(3)),
        gen(FamilySpec::path(4)),
        gen(FamilySpec::cycle(4)),
        gen(FamilySpec::cycle(6)),
        gen(FamilySpec::complete(3)),
        gen(FamilySpec::complete(4)),
    ]
}

fn cited_values(limits: &SearchLimits) -> Result<(bool, String)> {
    let mut ok = true;
    let mut parts = Vec::new();
    for (a, want_chi, want_chi_f) in [(4, 3, 4), (5, 3, 5)] {
        let g = cartesian_product(&gen(FamilySpec::cycle(a)), &gen(FamilySpec::cycle(5)))?;
        let chi = solvers::chromatic_number(&g, limits)?.value;
        let chi_f = solvers::fall_chromatic_number(&g, limits)?.map(|s| s.value);
        ok &= chi == want_chi && chi_f == Some(want_chi_f);
        parts.push(format!(
            "C{a}xC5: chi={chi} (want {want_chi}), chi_f={} (want {want_chi_f})",
            chi_f.map_or("none".into(), |v| v.to_string())
        ));
    }
    Ok((ok, parts.join("; ")))
}

fn nonexistence(limits: &SearchLimits) -> Result<(bool, String)> {
    let c5 = gen(FamilySpec::cycle(5));
    let k2k1 = Graph::disjoint_union(&[&gen(FamilySpec::complete(2)), &Graph::empty(1)]);
    let a = solvers::fall_spectrum(&c5, limits)?;
    let b = solvers::fall_spectrum(&k2k1, limits)?;
    Ok((
        a.is_empty() && b.is_empty(),
        format!("fall spectra: C5 {a:?}, K2+K1 {b:?}"),
    ))
}

/// Composes every fall witness pair over the catalog and splits it back.
fn join_constructions(limits: &SearchLimits) -> Result<(bool, String)> {
    let cat: Vec<Graph> = small_catalog().into_iter().skip(1).collect();
    let witnesses: Vec<Vec<Coloring>> = cat
        .iter()
        .map(|g| Ok(solvers::fall_witnesses(g, limits)?.into_values().collect()))
        .collect::<Result<_>>()?;
    let (mut tried, mut bad) = (0usize, Vec::new());
    for i in 0..cat.len() {
        for j in i..cat.len() {
            for a in &witnesses[i] {
                for b in &witnesses[j] {
                    tried += 1;
                    let back = compose_join_fall(&[(&cat[i], a), (&cat[j], b)])
                        .and_then(|c| restrict_fall(&[&cat[i], &cat[j]], &c));
                    let same = back.as_ref().is_ok_and(|p| {
                        p[0].partition() == a.partition() && p[1].partition() == b.partition()
                    });
                    if !same {
                        bad.push(format!("{} + {}", cat[i].label(), cat[j].label()));
                    }
                }
            }
        }
    }
    Ok((
        bad.is_empty(),
        format!("{tried} compositions, failures: [{}]", bad.join(", ")),
    ))
}

fn additivity(limits: &SearchLimits) -> Result<(bool, String)> {
    let cat: Vec<Graph> = small_catalog().into_iter().take(7).collect();
    let (mut tried, mut bad) = (0usize, Vec::new());
    for i in 0..cat.len() {
        for j in i..cat.len() {
            for p in Parameter::ALL {
                tried += 1;
                let a = verify_join_additivity(&[&cat[i], &cat[j]], p, limits)?;
                if !a.holds {
                    bad.push(format!(
                        "{} on {}+{}: {} vs {}",
                        p,
                        cat[i].label(),
                        cat[j].label(),
                        a.lhs,
                        a.rhs
                    ));
                }
            }
        }
    }
    Ok((
        bad.is_empty(),
        format!("{tried} identities, failures: [{}]", bad.join("; ")),
    ))
}

pub fn verify_all(epsilon: usize, limits: &SearchLimits) -> Result<SuiteReport> {
    let gap = theorem3_verify(epsilon, limits)?;
    let checks = vec![
        check("cited_values", cited_values(limits))?,
        check("nonexistence", nonexistence(limits))?,
        check("join_constructions", join_constructions(limits))?,
        check("join_additivity", additivity(limits))?,
    ];
    Ok(SuiteReport {
        epsilon,
        checks,
        gap,
    })
}
