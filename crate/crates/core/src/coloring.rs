//! Colorings and their classification.
//!
//! A [`Coloring`] assigns every vertex a color in `1..=k`. Nothing about it is
//! assumed: [`classify`] checks each of the six coloring notions directly
//! from its definition.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Colors `1..=k` assigned to vertices `0..n`.
///
/// Serialized as `{"k": 3, "colors": [1, 2, 3]}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawColoring")]
pub struct Coloring {
    k: usize,
    colors: Vec<usize>,
}

#[derive(Deserialize)]
struct RawColoring {
    k: usize,
    colors: Vec<usize>,
}

impl TryFrom<RawColoring> for Coloring {
    type Error = Error;

    fn try_from(raw: RawColoring) -> Result<Self> {
        Coloring::new(raw.k, raw.colors)
    }
}

impl Coloring {
    pub fn new(k: usize, colors: Vec<usize>) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidColoring("k must be at least 1".into()));
        }
        if let Some((v, &c)) = colors.iter().enumerate().find(|(_, &c)| c == 0 || c > k) {
            return Err(Error::InvalidColoring(format!(
                "vertex {v} has color {c} outside 1..={k}"
            )));
        }
        Ok(Self { k, colors })
    }

    /// Uses the largest color as `k`.
    pub fn from_colors(colors: Vec<usize>) -> Result<Self> {
        let k = colors.iter().copied().max().unwrap_or(1);
        Self::new(k, colors)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn used_colors(&self) -> BTreeSet<usize> {
        self.colors.iter().copied().collect()
    }

    /// Color class `f^{-1}(c)`.
    pub fn class(&self, c: usize) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.colors[v] == c).collect()
    }

    /// Relabels colors through `perm`, where `perm[c - 1]` is the new color of `c`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.k {
            return Err(Error::LengthMismatch {
                expected: self.k,
                got: perm.len(),
            });
        }
        Self::new(self.k, self.colors.iter().map(|&c| perm[c - 1]).collect())
    }

    /// Partition of the vertices into classes, independent of labels.
    pub fn partition(&self) -> BTreeSet<Vec<usize>> {
        (1..=self.k)
            .map(|c| self.class(c))
            .filter(|cls| !cls.is_empty())
            .collect()
    }

    fn check_len(&self, g: &Graph) -> Result<()> {
        if self.len() != g.n() {
            return Err(Error::LengthMismatch {
                expected: g.n(),
                got: self.len(),
            });
        }
        Ok(())
    }
}

/// Classification flags for one graph/coloring pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColoringClass {
    pub k: usize,
    pub proper: bool,
    pub fall: bool,
    pub b_coloring: bool,
    pub grundy: bool,
    pub partial_grundy: bool,
    pub complete: bool,
    pub colorful_set: BTreeSet<usize>,
    pub grundy_set: BTreeSet<usize>,
    pub used_colors: BTreeSet<usize>,
}

impl ColoringClass {
    pub fn is(&self, kind: ColoringKind) -> bool {
        match kind {
            ColoringKind::Proper => self.proper,
            ColoringKind::Fall => self.fall,
            ColoringKind::BColoring => self.b_coloring,
            ColoringKind::Grundy => self.grundy,
            ColoringKind::PartialGrundy => self.partial_grundy,
            ColoringKind::Complete => self.complete,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ColoringKind {
    Proper,
    Fall,
    BColoring,
    Grundy,
    PartialGrundy,
    Complete,
}

pub fn is_proper(g: &Graph, c: &Coloring) -> Result<bool> {
    c.check_len(g)?;
    Ok(g.edges().all(|(u, v)| c.color(u) != c.color(v)))
}

/// Vertices whose closed neighborhood shows all `k` colors.
pub fn colorful_vertices(g: &Graph, c: &Coloring) -> Result<BTreeSet<usize>> {
    c.check_len(g)?;
    let mut seen = vec![false; c.k() + 1];
    Ok((0..g.n())
        .filter(|&v| {
            seen.iter_mut().for_each(|s| *s = false);
            seen[c.color(v)] = true;
            for &u in g.neighbors(v) {
                seen[c.color(u)] = true;
            }
            seen[1..].iter().all(|&s| s)
        })
        .collect())
}

/// Vertices that see every color below their own on the open neighborhood.
pub fn grundy_vertices(g: &Graph, c: &Coloring) -> Result<BTreeSet<usize>> {
    c.check_len(g)?;
    let mut seen = vec![false; c.k() + 1];
    Ok((0..g.n())
        .filter(|&v| {
            seen.iter_mut().for_each(|s| *s = false);
            for &u in g.neighbors(v) {
                seen[c.color(u)] = true;
            }
            seen[1..c.color(v)].iter().all(|&s| s)
        })
        .collect())
}

pub fn classify(g: &Graph, c: &Coloring) -> Result<ColoringClass> {
    let proper = is_proper(g, c)?;
    let colorful_set = colorful_vertices(g, c)?;
    let grundy_set = grundy_vertices(g, c)?;
    let used_colors = c.used_colors();
    let k = c.k();
    // Every notion other than properness needs all k classes realized.
    let full = proper && used_colors.len() == k;

    let class_has = |set: &BTreeSet<usize>| {
        let mut hit = vec![false; k + 1];
        for &v in set {
            hit[c.color(v)] = true;
        }
        hit[1..].iter().all(|&h| h)
    };

    let fall = full && colorful_set.len() == g.n();
    let b_coloring = full && class_has(&colorful_set);
    let grundy = full && grundy_set.len() == g.n();
    let partial_grundy = full && class_has(&grundy_set);

    let complete = full && {
        let mut adjacent = vec![vec![false; k + 1]; k + 1];
        for (u, v) in g.edges() {
            adjacent[c.color(u)][c.color(v)] = true;
            adjacent[c.color(v)][c.color(u)] = true;
        }
        (1..=k).all(|a| (a + 1..=k).all(|b| adjacent[a][b]))
    };

    let class = ColoringClass {
        k,
        proper,
        fall,
        b_coloring,
        grundy,
        partial_grundy,
        complete,
        colorful_set,
        grundy_set,
        used_colors,
    };
    assert_chain(&class);
    Ok(class)
}

fn assert_chain(cls: &ColoringClass) {
    let implies = |a: bool, b: bool| !a || b;
    assert!(
        implies(cls.fall, cls.proper)
            && implies(cls.fall, cls.b_coloring)
            && implies(cls.fall, cls.grundy)
            && implies(cls.grundy, cls.partial_grundy)
            && implies(cls.b_coloring, cls.partial_grundy)
            && implies(cls.partial_grundy, cls.complete),
        "coloring flags violate the implication chain: {cls:?}"
    );
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};

    fn col(k: usize, colors: &[usize]) -> Coloring {
        Coloring::new(k, colors.to_vec()).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        generate(&FamilySpec::cycle(n)).unwrap()
    }

    fn path(n: usize) -> Graph {
        generate(&FamilySpec::path(n)).unwrap()
    }

    #[test]
    fn construction_validates() {
        assert!(Coloring::new(0, vec![]).is_err());
        assert!(Coloring::new(2, vec![1, 3]).is_err());
        assert!(Coloring::new(2, vec![0, 1]).is_err());
        let c: Coloring = serde_json::from_str(r#"{"k":2,"colors":[1,2]}"#).unwrap();
        assert_eq!(c.k(), 2);
        assert!(serde_json::from_str::<Coloring>(r#"{"k":2,"colors":[1,5]}"#).is_err());
        assert_eq!(
            serde_json::to_string(&c).unwrap(),
            r#"{"k":2,"colors":[1,2]}"#
        );
    }

    #[test]
    fn proper_examples() {
        let k2 = path(2);
        assert!(is_proper(&k2, &col(2, &[1, 2])).unwrap());
        assert!(!is_proper(&k2, &col(2, &[1, 1])).unwrap());
        assert!(is_proper(&cycle(5), &col(3, &[1, 2, 1, 2, 3])).unwrap());
        assert!(matches!(
            is_proper(&k2, &col(2, &[1])),
            Err(Error::LengthMismatch { expected: 2, got: 1 })
        ));
    }

    #[test]
    fn colorful_examples() {
        let set = |v: &[usize]| v.iter().copied().collect::<BTreeSet<_>>();
        assert_eq!(colorful_vertices(&path(2), &col(2, &[1, 2])).unwrap(), set(&[0, 1]));
        assert_eq!(
            colorful_vertices(&cycle(4), &col(2, &[1, 2, 1, 2])).unwrap(),
            set(&[0, 1, 2, 3])
        );
        assert_eq!(
            colorful_vertices(&cycle(4), &col(3, &[1, 2, 1, 3])).unwrap(),
            set(&[0, 2])
        );
        // improper colorings still get a colorful set
        assert_eq!(colorful_vertices(&path(2), &col(1, &[1, 1])).unwrap(), set(&[0, 1]));
    }

    #[test]
    fn grundy_examples() {
        let p3 = path(3);
        let all: BTreeSet<usize> = (0..3).collect();
        assert_eq!(grundy_vertices(&p3, &col(1, &[1, 1, 1])).unwrap(), all);
        assert_eq!(grundy_vertices(&p3, &col(2, &[1, 2, 1])).unwrap(), all);
        assert_eq!(grundy_vertices(&p3, &col(2, &[2, 1, 2])).unwrap(), all);
        let got = grundy_vertices(&p3, &col(3, &[3, 1, 2])).unwrap();
        assert_eq!(got, [1, 2].into_iter().collect());
    }

    #[test]
    fn classify_examples() {
        let c4 = classify(&cycle(4), &col(2, &[1, 2, 1, 2])).unwrap();
        assert!(c4.proper && c4.fall && c4.b_coloring && c4.grundy && c4.partial_grundy && c4.complete);

        let c5 = classify(&cycle(5), &col(3, &[1, 2, 1, 2, 3])).unwrap();
        assert!(c5.proper && !c5.fall && c5.complete);

        let k3 = generate(&FamilySpec::complete(3)).unwrap();
        let cls = classify(&k3, &col(3, &[1, 2, 3])).unwrap();
        assert!(cls.fall && cls.b_coloring && cls.grundy && cls.partial_grundy && cls.complete);
    }

    #[test]
    fn empty_class_disqualifies() {
        // proper, but color 3 unused
        let cls = classify(&cycle(4), &col(3, &[1, 2, 1, 2])).unwrap();
        assert!(cls.proper);
        assert!(!cls.fall && !cls.b_coloring && !cls.grundy && !cls.partial_grundy && !cls.complete);
    }

    #[test]
    fn partition_ignores_labels() {
        let a = col(3, &[1, 2, 3, 1]);
        let b = a.permuted(&[3, 1, 2]).unwrap();
        assert_eq!(b.colors(), &[3, 1, 2, 3]);
        assert_eq!(a.partition(), b.partition());
    }
}
