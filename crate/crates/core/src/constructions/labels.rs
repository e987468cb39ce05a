//! Symbolic point labels of permutation diagrams and their frozen mapping to
//! 0-based points.

use std::collections::HashMap;
use std::fmt;

use crate::perm::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Greek {
    Alpha,
    Beta,
    Gamma,
    Delta,
    Epsilon,
    Zeta,
    Eta,
}

impl Greek {
    pub fn symbol(self) -> char {
        match self {
            Greek::Alpha => 'α',
            Greek::Beta => 'β',
            Greek::Gamma => 'γ',
            Greek::Delta => 'δ',
            Greek::Epsilon => 'ε',
            Greek::Zeta => 'ζ',
            Greek::Eta => 'η',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LabelBase {
    Num(u32),
    /// A Greek letter with an optional subscript (`α_j`).
    Greek(Greek, Option<u32>),
}

/// A point label such as `3`, `3'`, `α`, `β_2'`.
///
/// A primed label `x'` names the image of `x` under the involution `t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Label {
    pub base: LabelBase,
    pub primed: bool,
}

impl Label {
    pub const fn num(j: u32) -> Self {
        Label {
            base: LabelBase::Num(j),
            primed: false,
        }
    }

    pub const fn greek(letter: Greek) -> Self {
        Label {
            base: LabelBase::Greek(letter, None),
            primed: false,
        }
    }

    pub const fn sub(letter: Greek, j: u32) -> Self {
        Label {
            base: LabelBase::Greek(letter, Some(j)),
            primed: false,
        }
    }

    pub const fn prime(self) -> Self {
        Label {
            base: self.base,
            primed: true,
        }
    }

    pub const fn unprimed(self) -> Self {
        Label {
            base: self.base,
            primed: false,
        }
    }

    fn is_numbered(&self) -> bool {
        matches!(self.base, LabelBase::Num(_))
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.base {
            LabelBase::Num(j) => write!(f, "{j}")?,
            LabelBase::Greek(g, None) => write!(f, "{}", g.symbol())?,
            LabelBase::Greek(g, Some(j)) => write!(f, "{}_{j}", g.symbol())?,
        }
        if self.primed {
            f.write_str("'")?;
        }
        Ok(())
    }
}

/// Bijection between labels and the points `0..k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelMap {
    labels: Vec<Label>,
    index: HashMap<Label, usize>,
}

impl LabelMap {
    /// Points `0..k` labelled `1..=k`.
    pub fn numeric(k: usize) -> Self {
        Self::from_labels((1..=k as u32).map(Label::num).collect())
    }

    fn from_labels(labels: Vec<Label>) -> Self {
        let index = labels.iter().enumerate().map(|(p, l)| (*l, p)).collect();
        LabelMap { labels, index }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn point(&self, label: &Label) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn label(&self, point: usize) -> &Label {
        &self.labels[point]
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    /// Point of `label`; panics when the label is absent.
    pub fn at(&self, label: Label) -> usize {
        self.point(&label)
            .unwrap_or_else(|| panic!("label {label} is not in this diagram"))
    }

    /// `(x, x')` point pairs for every primed label present.
    pub fn primed_pairs(&self) -> Vec<(usize, usize)> {
        self.labels
            .iter()
            .enumerate()
            .filter(|(_, l)| l.primed)
            .filter_map(|(p, l)| self.point(&l.unprimed()).map(|q| (q, p)))
            .collect()
    }
}

/// Collects permutations written in label cycle notation and freezes the
/// label order: numbered points ascending, then numbered primes ascending,
/// then Greek labels by first appearance, then Greek primes by first
/// appearance.
#[derive(Debug, Default)]
pub(crate) struct Diagram {
    appearance: Vec<Label>,
    seen: HashMap<Label, usize>,
    perms: Vec<Vec<Vec<Label>>>,
}

impl Diagram {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records a permutation given as disjoint label cycles (2-cycles for
    /// transpositions). Returns its handle.
    pub fn add(&mut self, cycles: Vec<Vec<Label>>) -> usize {
        for label in cycles.iter().flatten() {
            if !self.seen.contains_key(label) {
                self.seen.insert(*label, self.appearance.len());
                self.appearance.push(*label);
            }
        }
        self.perms.push(cycles);
        self.perms.len() - 1
    }

    pub fn finish(self) -> (LabelMap, Vec<Permutation>) {
        let mut labels = self.appearance.clone();
        labels.sort_by_key(|l| {
            let class = match (l.is_numbered(), l.primed) {
                (true, false) => 0,
                (true, true) => 1,
                (false, false) => 2,
                (false, true) => 3,
            };
            let number = match l.base {
                LabelBase::Num(j) => j as usize,
                LabelBase::Greek(..) => self.seen[l],
            };
            (class, number)
        });
        let map = LabelMap::from_labels(labels);
        let k = map.len();
        let perms = self
            .perms
            .iter()
            .map(|cycles| {
                let points: Vec<Vec<usize>> = cycles.iter().map(|c| c.iter().map(|l| map.at(*l)).collect()).collect();
                Permutation::from_cycles(&points, k).expect("diagram cycles are disjoint")
            })
            .collect();
        (map, perms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display() {
        assert_eq!(Label::num(12).to_string(), "12");
        assert_eq!(Label::num(3).prime().to_string(), "3'");
        assert_eq!(Label::greek(Greek::Alpha).prime().to_string(), "α'");
        assert_eq!(Label::sub(Greek::Beta, 2).to_string(), "β_2");
    }

    #[test]
    fn frozen_order() {
        let mut d = Diagram::new();
        d.add(vec![vec![
            Label::greek(Greek::Beta),
            Label::num(2),
            Label::num(1).prime(),
            Label::greek(Greek::Alpha).prime(),
            Label::greek(Greek::Alpha),
            Label::num(1),
        ]]);
        let (map, perms) = d.finish();
        let shown: Vec<String> = map.labels().iter().map(ToString::to_string).collect();
        assert_eq!(shown, ["1", "2", "1'", "β", "α", "α'"]);
        assert_eq!(perms[0].order(), 6);
        assert_eq!(map.primed_pairs(), vec![(0, 2), (4, 5)]);
    }
}
