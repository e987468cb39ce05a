//! Explicit generator pairs `(s, t)` for chiral maps of a requested type,
//! the small-type lookup table, duality, and the type dispatcher.
//!
//! Every construction returns a [`GeneratorSet`]: `s` of order `n`, the
//! involution `t`, and the derived face rotation `r = (st)^-1`, together with
//! the symbolic labels of the permutation diagram.

mod dispatch;
mod even;
mod labels;
mod odd;
mod table1;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use dispatch::{build, dispatch, ConstructionPlan, ExternalTheorem, PlanOutcome};
pub use even::{build_c4_1, build_c4_1_a0, build_c4_3, build_c4_3_a0, build_c4_5, build_c4_7};
pub use labels::{Greek, Label, LabelBase, LabelMap};
pub use odd::{build_c3_1, build_c3_11, build_c3_13, build_c3_15, build_c3_3, build_c3_5, build_c3_7, build_c3_9};
pub use table1::{table1_lookup, TABLE1_TYPES};

use crate::group::{default_word_pool, Rotation, Word};
use crate::perm::{PermError, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("type {{{m},{n}}} is not in the lookup table")]
    NotInTable { m: u32, n: u32 },
    #[error("type {{{m},{n}}} is not hyperbolic")]
    NotHyperbolic { m: u32, n: u32 },
    #[error("plan is not buildable: {0}")]
    PlanUnsupported(String),
    #[error(transparent)]
    Perm(#[from] PermError),
}

pub(crate) fn bad(msg: impl Into<String>) -> ConstructionError {
    ConstructionError::BadParams(msg.into())
}

/// A map type `{m, n}`: faces of length `m`, vertices of valency `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MapType {
    pub m: u32,
    pub n: u32,
}

impl MapType {
    pub const fn new(m: u32, n: u32) -> Self {
        MapType { m, n }
    }

    /// `1/m + 1/n < 1/2`.
    pub fn is_hyperbolic(&self) -> bool {
        let (m, n) = (self.m as u64, self.n as u64);
        m > 0 && n > 0 && 2 * (m + n) < m * n
    }

    pub fn dual(&self) -> MapType {
        MapType { m: self.n, n: self.m }
    }
}

impl fmt::Display for MapType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.m, self.n)
    }
}

/// A map type known to be hyperbolic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HyperbolicType(MapType);

impl HyperbolicType {
    pub fn new(m: u32, n: u32) -> Result<Self, ConstructionError> {
        let ty = MapType::new(m, n);
        if ty.is_hyperbolic() {
            Ok(HyperbolicType(ty))
        } else {
            Err(ConstructionError::NotHyperbolic { m, n })
        }
    }

    pub fn m(&self) -> u32 {
        self.0.m
    }

    pub fn n(&self) -> u32 {
        self.0.n
    }

    pub fn map_type(&self) -> MapType {
        self.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ConstructionId {
    #[serde(rename = "C3_1")]
    C3_1,
    #[serde(rename = "C3_3")]
    C3_3,
    #[serde(rename = "C3_5")]
    C3_5,
    #[serde(rename = "C3_7")]
    C3_7,
    #[serde(rename = "C3_9")]
    C3_9,
    #[serde(rename = "C3_11")]
    C3_11,
    #[serde(rename = "C3_13")]
    C3_13,
    #[serde(rename = "C3_15")]
    C3_15,
    #[serde(rename = "C4_1")]
    C4_1,
    #[serde(rename = "C4_3")]
    C4_3,
    #[serde(rename = "C4_5")]
    C4_5,
    #[serde(rename = "C4_7")]
    C4_7,
    #[serde(rename = "C4_1_a0")]
    C4_1A0,
    #[serde(rename = "C4_3_a0")]
    C4_3A0,
    #[serde(rename = "C4_5_a0")]
    C4_5A0,
    #[serde(rename = "TABLE1")]
    Table1,
}

impl ConstructionId {
    /// Constructions defined through `r` and `t` rather than `s` and `t`.
    pub fn is_r_based(self) -> bool {
        matches!(self, ConstructionId::C3_7 | ConstructionId::C4_7)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ConstructionId::C3_1 => "C3_1",
            ConstructionId::C3_3 => "C3_3",
            ConstructionId::C3_5 => "C3_5",
            ConstructionId::C3_7 => "C3_7",
            ConstructionId::C3_9 => "C3_9",
            ConstructionId::C3_11 => "C3_11",
            ConstructionId::C3_13 => "C3_13",
            ConstructionId::C3_15 => "C3_15",
            ConstructionId::C4_1 => "C4_1",
            ConstructionId::C4_3 => "C4_3",
            ConstructionId::C4_5 => "C4_5",
            ConstructionId::C4_7 => "C4_7",
            ConstructionId::C4_1A0 => "C4_1_a0",
            ConstructionId::C4_3A0 => "C4_3_a0",
            ConstructionId::C4_5A0 => "C4_5_a0",
            ConstructionId::Table1 => "TABLE1",
        }
    }
}

impl fmt::Display for ConstructionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which construction produced a generator set, and with which parameters.
/// `i` and `nu` are 0 where the construction has no such parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ConstructionParams {
    pub construction_id: ConstructionId,
    pub a: u32,
    pub i: i32,
    pub nu: u32,
    pub dualized: bool,
}

impl ConstructionParams {
    pub(crate) fn new(construction_id: ConstructionId, a: u32, i: i32, nu: u32) -> Self {
        ConstructionParams {
            construction_id,
            a,
            i,
            nu,
            dualized: false,
        }
    }
}

/// Generators `s`, `t` and `r = (st)^-1` of a candidate map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet {
    pub s: Permutation,
    pub t: Permutation,
    pub r: Permutation,
    pub labels: LabelMap,
    /// The type the generators are meant to realise.
    pub map_type: MapType,
    pub params: Option<ConstructionParams>,
}

impl GeneratorSet {
    pub fn new(
        s: Permutation,
        t: Permutation,
        labels: LabelMap,
        map_type: MapType,
        params: Option<ConstructionParams>,
    ) -> Result<Self, ConstructionError> {
        if s.degree() != t.degree() {
            return Err(PermError::DegreeMismatch {
                left: s.degree(),
                right: t.degree(),
            }
            .into());
        }
        if labels.len() != s.degree() {
            return Err(bad(format!("{} labels for degree {}", labels.len(), s.degree())));
        }
        let r = s.then(&t).inverse();
        Ok(GeneratorSet {
            s,
            t,
            r,
            labels,
            map_type,
            params,
        })
    }

    /// An ad-hoc pair with numeric labels; the type is read off the orders.
    pub fn from_pair(s: Permutation, t: Permutation) -> Result<Self, ConstructionError> {
        let map_type = MapType::new(s.then(&t).order() as u32, s.order() as u32);
        let labels = LabelMap::numeric(s.degree());
        Self::new(s, t, labels, map_type, None)
    }

    pub(crate) fn from_diagram(
        labels: LabelMap,
        s: Permutation,
        t: Permutation,
        map_type: MapType,
        params: ConstructionParams,
    ) -> Self {
        Self::new(s, t, labels, map_type, Some(params)).expect("diagram generators share a degree")
    }

    /// Built from `r` and `t`: `s := r^-1 t`, so that `r = (st)^-1` holds exactly.
    pub(crate) fn from_rotation_r(
        labels: LabelMap,
        r: Permutation,
        t: Permutation,
        map_type: MapType,
        params: ConstructionParams,
    ) -> Self {
        let s = r.inverse().then(&t);
        let set = Self::from_diagram(labels, s, t, map_type, params);
        debug_assert_eq!(set.r, r);
        set
    }

    pub fn degree(&self) -> usize {
        self.s.degree()
    }

    pub fn rotation(&self, which: Rotation) -> &Permutation {
        match which {
            Rotation::S => &self.s,
            Rotation::R => &self.r,
        }
    }

    pub fn is_dualized(&self) -> bool {
        self.params.is_some_and(|p| p.dualized)
    }

    /// The dual map: `s' = r`, `t' = t`, `r' = (s't)^-1`, type `{n, m}`.
    pub fn dualize(&self) -> GeneratorSet {
        let params = self.params.map(|p| ConstructionParams {
            dualized: !p.dualized,
            ..p
        });
        GeneratorSet::new(
            self.r.clone(),
            self.t.clone(),
            self.labels.clone(),
            self.map_type.dual(),
            params,
        )
        .expect("dual shares the degree")
    }

    /// The rotation drawn as red cycles in the permutation diagram.
    pub fn diagram_rotation(&self) -> Rotation {
        match self.params {
            Some(p) if p.construction_id.is_r_based() != p.dualized => Rotation::R,
            _ => Rotation::S,
        }
    }

    /// Witness words named in the correctness arguments for this
    /// construction, in terms of the current `s` and `r`.
    pub fn cited_words(&self) -> Vec<Word> {
        use ConstructionId::*;
        use Rotation::{R, S};
        let Some(p) = self.params else {
            return Vec::new();
        };
        let words = match (p.construction_id, p.i) {
            (C3_1, -1) => vec![Word::new(S, 3, 2)],
            (C3_1, _) => vec![Word::new(S, 2, 2)],
            (C3_3, -1) => vec![Word::new(S, 2, 4)],
            (C3_3, _) => vec![Word::new(S, 2, 2)],
            (C3_5, -1) => vec![Word::new(S, 2, 4)],
            (C3_5, _) => vec![Word::new(S, 3, 2)],
            (C3_7, _) | (C3_11, _) => vec![Word::rotation_power(S, 1)],
            (C3_9, _) | (C3_13, _) | (C3_15, _) => vec![Word::new(S, 2, 1)],
            (C4_1, -1) | (C4_1A0, -1) => vec![Word::new(S, 4, 6), Word::new(S, 3, 4)],
            (C4_1, _) | (C4_1A0, _) => vec![Word::new(S, 3, 12)],
            (C4_3, -1) => vec![Word::new(S, 4, 2)],
            (C4_3, _) | (C4_3A0, _) => vec![Word::new(S, 2, 6)],
            (C4_5, -1) => vec![Word::new(S, 2, 4)],
            (C4_5, _) | (C4_5A0, _) => vec![Word::new(S, 3, 2)],
            (C4_7, _) => {
                let (m, n) = if p.dualized {
                    (self.map_type.n, self.map_type.m)
                } else {
                    (self.map_type.m, self.map_type.n)
                };
                if m == n && m % 4 == 0 {
                    vec![Word::new(R, 4, 1)]
                } else {
                    vec![Word::new(R, 4, 2), Word::new(R, 2, m / 2)]
                }
            }
            (Table1, _) => Vec::new(),
        };
        if p.dualized {
            words
                .into_iter()
                .map(|w| w.with_rotation(w.rotation.swapped()))
                .collect()
        } else {
            words
        }
    }

    /// Cited words followed by the default `(x^e t)^f` grid.
    pub fn word_pool(&self) -> Vec<Word> {
        let mut pool = self.cited_words();
        pool.extend(default_word_pool());
        pool
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hyperbolicity() {
        assert!(HyperbolicType::new(4, 5).is_ok());
        assert!(HyperbolicType::new(7, 3).is_ok());
        assert_eq!(
            HyperbolicType::new(4, 4),
            Err(ConstructionError::NotHyperbolic { m: 4, n: 4 })
        );
        assert!(HyperbolicType::new(3, 6).is_err());
        assert!(HyperbolicType::new(0, 9).is_err());
        assert!(HyperbolicType::new(2, 100).is_err());
    }

    #[test]
    fn construction_ids_serialize_stably() {
        let id = serde_json::to_string(&ConstructionId::C4_1A0).unwrap();
        assert_eq!(id, "\"C4_1_a0\"");
        assert_eq!(serde_json::to_string(&ConstructionId::Table1).unwrap(), "\"TABLE1\"");
        let back: ConstructionId = serde_json::from_str("\"C3_13\"").unwrap();
        assert_eq!(back, ConstructionId::C3_13);
    }

    #[test]
    fn from_pair_reads_type() {
        let s = Permutation::parse("(1,2,3,4,5)", Some(6)).unwrap();
        let t = Permutation::parse("(1,3)(4,6)", Some(6)).unwrap();
        let g = GeneratorSet::from_pair(s, t).unwrap();
        assert_eq!(g.map_type, MapType::new(4, 5));
        assert!(g.r.then(&g.s).then(&g.t).is_identity());
    }
}
