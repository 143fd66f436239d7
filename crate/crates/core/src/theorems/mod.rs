//! Join constructions for fall colorings and the join additivity checks.

pub mod gap;
pub mod suite;

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::coloring::{classify, Coloring};
use crate::error::{Error, Result};
use crate::graph::{join, Graph};
use crate::solvers::{self, Parameter, SearchLimits};

pub use gap::{theorem3_family, theorem3_verify, GapEntry, GapReport, GapStatus};
pub use suite::{verify_all, SuiteReport};

/// Fall coloring of `join(parts)`: part `i` keeps its coloring, shifted past
/// the colors of the parts before it.
pub fn compose_join_fall(parts: &[(&Graph, &Coloring)]) -> Result<Coloring> {
    let mut colors = Vec::new();
    let mut offset = 0;
    for (i, (g, c)) in parts.iter().enumerate() {
        if !classify(g, c)?.fall {
            return Err(Error::NotFall(format!("part {i} coloring is not fall")));
        }
        colors.extend(c.colors().iter().map(|&x| x + offset));
        offset += c.k();
    }
    let composed = Coloring::new(offset.max(1), colors)?;
    let graphs: Vec<&Graph> = parts.iter().map(|(g, _)| *g).collect();
    let joined = join(&graphs)?;
    assert!(
        classify(&joined, &composed)?.fall,
        "shifted fall colorings must give a fall coloring of the join"
    );
    Ok(composed)
}

/// Splits a fall coloring of `join(parts)` into per-part fall colorings.
/// Each part's colors are renumbered `1..` preserving their order.
pub fn restrict_fall(parts: &[&Graph], joint: &Coloring) -> Result<Vec<Coloring>> {
    let joined = join(parts)?;
    if !classify(&joined, joint)?.fall {
        return Err(Error::NotFall("joint coloring".into()));
    }
    let mut out = Vec::with_capacity(parts.len());
    let mut offset = 0;
    for (i, g) in parts.iter().enumerate() {
        let slice = &joint.colors()[offset..offset + g.n()];
        let used: BTreeSet<usize> = slice.iter().copied().collect();
        let rank = |c: usize| used.iter().position(|&u| u == c).expect("color is used") + 1;
        let restricted = Coloring::new(used.len(), slice.iter().map(|&c| rank(c)).collect())?;
        if !classify(g, &restricted)?.fall {
            return Err(Error::NotFall(format!("restriction to part {i}")));
        }
        out.push(restricted);
        offset += g.n();
    }
    Ok(out)
}

/// Value of one parameter: a number, a set (fall spectrum), or undefined
/// (`χ_f`/`ψ_f` of a graph without fall colorings).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum ParamValue {
    Number(usize),
    Set(BTreeSet<usize>),
    Undefined,
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Number(x) => write!(f, "{x}"),
            ParamValue::Set(s) => write!(f, "{s:?}"),
            ParamValue::Undefined => f.write_str("undefined"),
        }
    }
}

pub fn parameter_value(g: &Graph, p: Parameter, limits: &SearchLimits) -> Result<ParamValue> {
    use ParamValue::*;
    Ok(match p {
        Parameter::FallSpectrum => Set(solvers::fall_spectrum(g, limits)?),
        Parameter::ChiF => solvers::fall_chromatic_number(g, limits)?
            .map_or(Undefined, |s| Number(s.value)),
        Parameter::PsiF => solvers::fall_spectrum(g, limits)?
            .last()
            .map_or(Undefined, |&k| Number(k)),
        Parameter::Chi => Number(solvers::chromatic_number(g, limits)?.value),
        Parameter::Phi => Number(solvers::b_chromatic_number(g, limits)?.value),
        Parameter::Gamma => Number(solvers::grundy_number(g, limits)?.value),
        Parameter::PartialGamma => Number(solvers::partial_grundy_number(g, limits)?.value),
        Parameter::Psi => Number(solvers::achromatic_number(g, limits)?.value),
    })
}

/// Both sides of a join additivity identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Additivity {
    pub parameter: Parameter,
    /// Parameter of the join, solved directly.
    pub lhs: ParamValue,
    /// Sum (Minkowski sum for the spectrum) of the per-part values.
    pub rhs: ParamValue,
    pub holds: bool,
}

pub fn verify_join_additivity(
    parts: &[&Graph],
    parameter: Parameter,
    limits: &SearchLimits,
) -> Result<Additivity> {
    let joined = join(parts)?;
    let lhs = parameter_value(&joined, parameter, limits)?;
    let mut rhs = match parameter {
        Parameter::FallSpectrum => ParamValue::Set([0].into()),
        _ => ParamValue::Number(0),
    };
    for g in parts {
        rhs = match (rhs, parameter_value(g, parameter, limits)?) {
            (ParamValue::Number(a), ParamValue::Number(b)) => ParamValue::Number(a + b),
            (ParamValue::Set(a), ParamValue::Set(b)) => ParamValue::Set(
                a.iter().flat_map(|x| b.iter().map(move |y| x + y)).collect(),
            ),
            _ => ParamValue::Undefined,
        };
    }
    Ok(Additivity {
        parameter,
        holds: lhs == rhs,
        lhs,
        rhs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};

    fn gen(spec: FamilySpec) -> Graph {
        generate(&spec).unwrap()
    }

    fn fall(g: &Graph, k: usize) -> Coloring {
        solvers::find_fall_coloring(g, k, &SearchLimits::default())
            .unwrap()
            .unwrap()
    }

    #[test]
    fn compose_two_singletons() {
        let k1 = Graph::empty(1);
        let c = Coloring::new(1, vec![1]).unwrap();
        let out = compose_join_fall(&[(&k1, &c), (&k1, &c)]).unwrap();
        assert_eq!(out.colors(), &[1, 2]);
    }

    #[test]
    fn compose_cycles() {
        let (c4, c6) = (gen(FamilySpec::cycle(4)), gen(FamilySpec::cycle(6)));
        let (f4, f6) = (fall(&c4, 2), fall(&c6, 3));
        let out = compose_join_fall(&[(&c4, &f4), (&c6, &f6)]).unwrap();
        assert_eq!(out.k(), 5);
        let j = join(&[&c4, &c6]).unwrap();
        assert!(classify(&j, &out).unwrap().fall);

        let out = compose_join_fall(&[(&c4, &f4), (&c4, &f4), (&c4, &f4)]).unwrap();
        assert_eq!(out.k(), 6);
    }

    #[test]
    fn compose_rejects_non_fall() {
        let c4 = gen(FamilySpec::cycle(4));
        let bad = Coloring::new(3, vec![1, 2, 1, 3]).unwrap();
        assert!(matches!(
            compose_join_fall(&[(&c4, &bad)]),
            Err(Error::NotFall(_))
        ));
    }

    #[test]
    fn restrict_round_trip() {
        let k1 = Graph::empty(1);
        let parts = restrict_fall(&[&k1, &k1], &Coloring::new(2, vec![1, 2]).unwrap()).unwrap();
        assert!(parts.iter().all(|c| c.k() == 1));

        let (c4, c6) = (gen(FamilySpec::cycle(4)), gen(FamilySpec::cycle(6)));
        let (f4, f6) = (fall(&c4, 2), fall(&c6, 3));
        let joint = compose_join_fall(&[(&c4, &f4), (&c6, &f6)]).unwrap();
        let back = restrict_fall(&[&c4, &c6], &joint).unwrap();
        assert_eq!(back[0].partition(), f4.partition());
        assert_eq!(back[1].partition(), f6.partition());
    }

    #[test]
    fn restrict_rejects_non_fall() {
        let c4 = gen(FamilySpec::cycle(4));
        let joint = Coloring::new(4, vec![1, 2, 1, 2, 3, 4, 3, 3]).unwrap();
        assert!(restrict_fall(&[&c4, &c4], &joint).is_err());
    }

    #[test]
    fn additivity_examples() {
        let lim = SearchLimits::default();
        let (c4, c6) = (gen(FamilySpec::cycle(4)), gen(FamilySpec::cycle(6)));
        let a = verify_join_additivity(&[&c4, &c6], Parameter::FallSpectrum, &lim).unwrap();
        assert_eq!(a.lhs, ParamValue::Set([4, 5].into()));
        assert!(a.holds);

        let p3 = gen(FamilySpec::path(3));
        let a = verify_join_additivity(&[&p3, &p3], Parameter::Chi, &lim).unwrap();
        assert_eq!((a.lhs.clone(), a.holds), (ParamValue::Number(4), true));

        let (k2, k3) = (gen(FamilySpec::complete(2)), gen(FamilySpec::complete(3)));
        let a = verify_join_additivity(&[&k2, &k3], Parameter::Psi, &lim).unwrap();
        assert_eq!((a.lhs.clone(), a.holds), (ParamValue::Number(5), true));
    }

    #[test]
    fn additivity_with_empty_spectrum() {
        let lim = SearchLimits::default();
        let (c5, k2) = (gen(FamilySpec::cycle(5)), gen(FamilySpec::complete(2)));
        let a = verify_join_additivity(&[&c5, &k2], Parameter::FallSpectrum, &lim).unwrap();
        assert_eq!(a.lhs, ParamValue::Set(BTreeSet::new()));
        assert!(a.holds);
        let a = verify_join_additivity(&[&c5, &k2], Parameter::ChiF, &lim).unwrap();
        assert_eq!(a.lhs, ParamValue::Undefined);
    }
}
