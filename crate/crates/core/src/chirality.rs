//! Reflexible versus chiral.
//!
//! A map `(G; s, t)` is reflexible iff some automorphism of `G` sends
//! `s ↦ s^-1` and fixes `t`. Three routes decide this:
//!
//! * the two diagram lemmas, which certify chirality when `Aut(G) ≤ S_k`;
//! * an exhaustive search for a relabelling `π ∈ S_k` with `s^π = s^-1`,
//!   `t^π = t`, exact when every automorphism of `G` is induced by `S_k`;
//! * an abstract oracle that checks whether `w(s, t) ↦ w(s^-1, t)` is
//!   well defined, exact for every group.

use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::constructions::GeneratorSet;
use crate::group::{GroupClassification, GroupError, GroupVerdict, Rotation, StabilizerChain};
use crate::perm::Permutation;

pub const DEFAULT_CONJUGATION_BOUND: u64 = 10_000_000;
pub const DEFAULT_ORDER_BOUND: u64 = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChiralityError {
    #[error("relabelling search exceeded {bound} candidates")]
    SearchTooLarge { bound: u64 },
    #[error("group order {order} exceeds the bound {bound}")]
    GroupTooLarge { order: BigUint, bound: u64 },
    #[error("chirality search cancelled")]
    Cancelled,
    #[error("oracles disagree: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Cooperative cancellation shared between a caller and a long search.
#[derive(Debug, Clone, Default)]
pub struct CancelToken(Arc<AtomicBool>);

impl CancelToken {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cancel(&self) {
        self.0.store(true, Ordering::Relaxed);
    }

    pub fn is_cancelled(&self) -> bool {
        self.0.load(Ordering::Relaxed)
    }

    fn check(&self) -> Result<(), ChiralityError> {
        if self.is_cancelled() {
            Err(ChiralityError::Cancelled)
        } else {
            Ok(())
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Lemma {
    /// Second condition: `ζx^c` fixed by `t`, `ζtx^-c` not.
    #[serde(rename = "L2_6")]
    FixedByT,
    /// Second condition: `ζx^c t` fixed by `x^p`, `ζtx^-c t` not.
    #[serde(rename = "L2_7")]
    FixedByRotation,
}

/// A certificate from one of the diagram lemmas, with `x` the rotation
/// (`s`, or `r` substituted for it).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaWitness {
    pub rotation: Rotation,
    /// 0-based point.
    pub zeta: usize,
    pub b: i64,
    pub c: i64,
    pub lemma: Lemma,
    /// `p ∈ {1, 2}` for [`Lemma::FixedByRotation`]; 0 otherwise.
    pub power_variant: u32,
}

/// `π` with `s^π = s^-1` and `t^π = t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relabelling {
    pub pi: Permutation,
}

impl Relabelling {
    pub fn is_valid_for(&self, s: &Permutation, t: &Permutation) -> bool {
        s.conjugate_by(&self.pi) == s.inverse() && t.conjugate_by(&self.pi) == *t
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConjugationOutcome {
    Reflexible(Relabelling),
    /// The whole coset was exhausted after trying `candidates` partial labellings.
    NoRelabelling {
        candidates: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AbstractRoute {
    /// Breadth-first search of the Cayley graph, checking `φ` on every edge.
    CayleyBfs,
    /// `|⟨(s, s^-1), (t, t)⟩| = |G|` on the doubled point set.
    GraphSubgroup,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbstractOutcome {
    pub reflexible: bool,
    pub group_order: BigUint,
    pub route: AbstractRoute,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    Chiral,
    Reflexible,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Method {
    #[serde(rename = "LemmaL2_6")]
    LemmaL2_6,
    #[serde(rename = "LemmaL2_7")]
    LemmaL2_7,
    ConjugationSearch,
    AbstractOracle,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::LemmaL2_6 => "LemmaL2_6",
            Method::LemmaL2_7 => "LemmaL2_7",
            Method::ConjugationSearch => "ConjugationSearch",
            Method::AbstractOracle => "AbstractOracle",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evidence {
    Lemma(LemmaWitness),
    Relabelling(Relabelling),
    /// No relabelling exists; the search tried this many candidates.
    Exhaustion {
        candidates: u64,
    },
    /// `φ: s ↦ s^-1, t ↦ t` is (or is not) an automorphism of `G`.
    Abstract {
        group_order: BigUint,
        route: AbstractRoute,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiralityVerdict {
    pub verdict: Verdict,
    pub method: Method,
    pub evidence: Evidence,
    /// Further routes that were run and agree with `verdict`.
    pub confirmations: Vec<Method>,
    pub caveat: Option<String>,
}

impl ChiralityVerdict {
    pub fn is_chiral(&self) -> bool {
        self.verdict == Verdict::Chiral
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OracleChoice {
    #[default]
    Auto,
    Conjugation,
    Abstract,
}

impl std::str::FromStr for OracleChoice {
    type Err = String;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        match text {
            "auto" => Ok(OracleChoice::Auto),
            "conjugation" => Ok(OracleChoice::Conjugation),
            "abstract" => Ok(OracleChoice::Abstract),
            other => Err(format!(
                "unknown oracle {other:?}; expected auto, conjugation or abstract"
            )),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ChiralityConfig {
    pub oracle: OracleChoice,
    /// Cayley BFS is used up to this group order.
    pub order_bound: u64,
    pub conjugation_bound: u64,
    pub cancel: CancelToken,
}

impl Default for ChiralityConfig {
    fn default() -> Self {
        ChiralityConfig {
            oracle: OracleChoice::Auto,
            order_bound: DEFAULT_ORDER_BOUND,
            conjugation_bound: DEFAULT_CONJUGATION_BOUND,
            cancel: CancelToken::new(),
        }
    }
}

/// The unique `ζ` fixed by `x^b t` and moved by `t`, if exactly one exists.
fn unique_zeta(xb: &Permutation, t: &Permutation) -> Option<usize> {
    let mut found = None;
    for p in 0..t.degree() {
        if t.image(p) != p && t.image(xb.image(p)) == p {
            if found.is_some() {
                return None;
            }
            found = Some(p);
        }
    }
    found
}

fn second_condition(lemma: Lemma, x: &Permutation, t: &Permutation, zeta: usize, c: i64, p: u32) -> bool {
    let xc = x.pow(c);
    let xmc = x.pow(-c);
    let there = xc.image(zeta);
    let back = xmc.image(t.image(zeta));
    match lemma {
        Lemma::FixedByT => t.image(there) == there && t.image(back) != back,
        Lemma::FixedByRotation => {
            let xp = x.pow(p as i64);
            let (u, v) = (t.image(there), t.image(back));
            xp.image(u) == u && xp.image(v) != v
        }
    }
}

/// Checks one lemma at fixed `(b, c)`, trying `power_variant` 1 then 2 for
/// [`Lemma::FixedByRotation`].
pub fn check_lemma_at(g: &GeneratorSet, lemma: Lemma, rotation: Rotation, b: i64, c: i64) -> Option<LemmaWitness> {
    if b == 0 {
        return None;
    }
    let x = g.rotation(rotation);
    let zeta = unique_zeta(&x.pow(b), &g.t)?;
    let variants: &[u32] = match lemma {
        Lemma::FixedByT => &[0],
        Lemma::FixedByRotation => &[1, 2],
    };
    variants
        .iter()
        .find(|&&p| second_condition(lemma, x, &g.t, zeta, c, p))
        .map(|&p| LemmaWitness {
            rotation,
            zeta,
            b,
            c,
            lemma,
            power_variant: p,
        })
}

/// `0, 1, -1, 2, -2, …, bound, -bound`.
fn signed_range(bound: i64, include_zero: bool) -> impl Iterator<Item = i64> {
    include_zero
        .then_some(0)
        .into_iter()
        .chain((1..=bound).flat_map(|v| [v, -v]))
}

fn search_lemma(g: &GeneratorSet, lemma: Lemma, b_range: Option<i64>, c_range: Option<i64>) -> Option<LemmaWitness> {
    for rotation in [Rotation::S, Rotation::R] {
        let x = g.rotation(rotation);
        let b_bound = b_range.unwrap_or(x.order() as i64);
        let c_bound = c_range.unwrap_or(g.degree() as i64);
        for b in signed_range(b_bound, false) {
            let xb = x.pow(b);
            let Some(_) = unique_zeta(&xb, &g.t) else {
                continue;
            };
            for c in signed_range(c_bound, true) {
                if let Some(w) = check_lemma_at(g, lemma, rotation, b, c) {
                    return Some(w);
                }
            }
        }
    }
    None
}

/// First witness for the `ζx^c`-fixed-by-`t` lemma in `(rotation, |b|,
/// sign b, |c|, sign c)` order, with `s` tried before `r`. Ranges default
/// to `|b| ≤ ord(x)` and `|c| ≤ k`.
pub fn check_lemma_2_6(g: &GeneratorSet, b_range: Option<i64>, c_range: Option<i64>) -> Option<LemmaWitness> {
    search_lemma(g, Lemma::FixedByT, b_range, c_range)
}

/// As [`check_lemma_2_6`] for the `ζx^c t`-fixed-by-`x^p` lemma.
pub fn check_lemma_2_7(g: &GeneratorSet, b_range: Option<i64>, c_range: Option<i64>) -> Option<LemmaWitness> {
    search_lemma(g, Lemma::FixedByRotation, b_range, c_range)
}

/// Backtracking search for `π` with `(xs)π = (xπ)s^-1` and `(xt)π = (xπ)t`.
///
/// Assigning one point of an orbit of `⟨s, t⟩` forces the whole orbit, so
/// each branch is a choice of image for the least unassigned point among
/// unused points with the same `s`-cycle length and `t`-fixedness.
pub fn conjugation_search(
    g: &GeneratorSet,
    bound: u64,
    cancel: &CancelToken,
) -> Result<ConjugationOutcome, ChiralityError> {
    let k = g.degree();
    let s: Vec<usize> = g.s.images().collect();
    let s_inv: Vec<usize> = g.s.inverse().images().collect();
    let t: Vec<usize> = g.t.images().collect();
    let mut cycle_len = vec![0usize; k];
    for cycle in g.s.cycle_decomposition().cycles {
        for &p in &cycle {
            cycle_len[p] = cycle.len();
        }
    }
    for p in g.s.fixed_points() {
        cycle_len[p] = 1;
    }
    let ctx = Search {
        s: &s,
        s_inv: &s_inv,
        t: &t,
        cycle_len: &cycle_len,
        bound,
        cancel,
    };
    let mut state = State {
        pi: vec![usize::MAX; k],
        used: vec![false; k],
        candidates: 0,
    };
    if ctx.extend(&mut state)? {
        let pi = Permutation::from_images(state.pi).expect("complete assignment is a bijection");
        let relabelling = Relabelling { pi };
        debug_assert!(relabelling.is_valid_for(&g.s, &g.t));
        if !relabelling.is_valid_for(&g.s, &g.t) {
            return Err(ChiralityError::Inconsistent(
                "relabelling failed re-verification".into(),
            ));
        }
        Ok(ConjugationOutcome::Reflexible(relabelling))
    } else {
        Ok(ConjugationOutcome::NoRelabelling {
            candidates: state.candidates,
        })
    }
}

struct Search<'a> {
    s: &'a [usize],
    s_inv: &'a [usize],
    t: &'a [usize],
    cycle_len: &'a [usize],
    bound: u64,
    cancel: &'a CancelToken,
}

struct State {
    pi: Vec<usize>,
    used: Vec<bool>,
    candidates: u64,
}

impl Search<'_> {
    fn extend(&self, state: &mut State) -> Result<bool, ChiralityError> {
        let Some(x) = state.pi.iter().position(|&v| v == usize::MAX) else {
            return Ok(true);
        };
        let x_fixed_by_t = self.t[x] == x;
        for y in 0..state.pi.len() {
            if state.used[y] || self.cycle_len[y] != self.cycle_len[x] || (self.t[y] == y) != x_fixed_by_t {
                continue;
            }
            state.candidates += 1;
            if state.candidates > self.bound {
                return Err(ChiralityError::SearchTooLarge { bound: self.bound });
            }
            if state.candidates.is_multiple_of(4096) {
                self.cancel.check()?;
            }
            let mut assigned = Vec::new();
            if self.propagate(state, x, y, &mut assigned) && self.extend(state)? {
                return Ok(true);
            }
            for p in assigned {
                state.used[state.pi[p]] = false;
                state.pi[p] = usize::MAX;
            }
        }
        Ok(false)
    }

    /// Assigns `x ↦ y` and closes under the constraints; false on conflict.
    fn propagate(&self, state: &mut State, x: usize, y: usize, assigned: &mut Vec<usize>) -> bool {
        let mut stack = vec![(x, y)];
        while let Some((p, q)) = stack.pop() {
            let current = state.pi[p];
            if current != usize::MAX {
                if current != q {
                    return false;
                }
                continue;
            }
            if state.used[q] {
                return false;
            }
            state.pi[p] = q;
            state.used[q] = true;
            assigned.push(p);
            stack.push((self.s[p], self.s_inv[q]));
            stack.push((self.s_inv[p], self.s[q]));
            stack.push((self.t[p], self.t[q]));
        }
        true
    }
}

/// Exact order of `⟨s, t⟩`.
fn order_of(g: &GeneratorSet) -> Result<BigUint, ChiralityError> {
    Ok(StabilizerChain::new(&[g.s.clone(), g.t.clone()])?.order())
}

/// Decides whether `s ↦ s^-1, t ↦ t` extends to an automorphism by walking
/// the Cayley graph of `G` and checking the induced map on every edge.
pub fn abstract_reflexibility(
    g: &GeneratorSet,
    order_bound: u64,
    cancel: &CancelToken,
) -> Result<AbstractOutcome, ChiralityError> {
    let order = order_of(g)?;
    if order > BigUint::from(order_bound) {
        return Err(ChiralityError::GroupTooLarge {
            order,
            bound: order_bound,
        });
    }
    let gens = [(&g.s, g.s.inverse()), (&g.t, g.t.clone())];
    let mut phi: HashMap<Permutation, Permutation> = HashMap::new();
    let identity = Permutation::identity(g.degree());
    phi.insert(identity.clone(), identity.clone());
    let mut queue = std::collections::VecDeque::from([identity]);
    let mut reflexible = true;
    let mut visited = 0u64;
    'bfs: while let Some(x) = queue.pop_front() {
        if visited.is_multiple_of(1024) {
            cancel.check()?;
        }
        visited += 1;
        let image = phi[&x].clone();
        for (gen, gen_image) in &gens {
            let y = x.then(gen);
            let y_image = image.then(gen_image);
            match phi.get(&y) {
                Some(existing) if *existing != y_image => {
                    reflexible = false;
                    break 'bfs;
                }
                Some(_) => {}
                None => {
                    phi.insert(y.clone(), y_image);
                    queue.push_back(y);
                }
            }
        }
    }
    Ok(AbstractOutcome {
        reflexible,
        group_order: order,
        route: AbstractRoute::CayleyBfs,
    })
}

/// The same question for groups of any size: `φ` is well defined iff the
/// subgroup `⟨(s, s^-1), (t, t)⟩` of `G × G` projects injectively, i.e. has
/// order `|G|`.
pub fn graph_subgroup_reflexibility(g: &GeneratorSet) -> Result<AbstractOutcome, ChiralityError> {
    let k = g.degree();
    let double = |left: &Permutation, right: &Permutation| {
        let images = left.images().chain(right.images().map(|p| p + k)).collect();
        Permutation::from_images(images).expect("disjoint union of permutations")
    };
    let graph = [double(&g.s, &g.s.inverse()), double(&g.t, &g.t)];
    let graph_order = StabilizerChain::new(&graph)?.order();
    let order = order_of(g)?;
    Ok(AbstractOutcome {
        reflexible: graph_order == order,
        group_order: order,
        route: AbstractRoute::GraphSubgroup,
    })
}

/// Cayley BFS within `order_bound`, graph subgroup beyond it.
fn abstract_oracle(g: &GeneratorSet, config: &ChiralityConfig) -> Result<AbstractOutcome, ChiralityError> {
    match abstract_reflexibility(g, config.order_bound, &config.cancel) {
        Err(ChiralityError::GroupTooLarge { .. }) => graph_subgroup_reflexibility(g),
        other => other,
    }
}

/// `Aut(G)` is induced by conjugation in `S_k`.
fn relabelling_is_exact(cls: &GroupClassification) -> bool {
    matches!(cls.verdict, GroupVerdict::Alternating(k) | GroupVerdict::Symmetric(k) if k >= 7)
}

fn lemma_witness(g: &GeneratorSet) -> Option<LemmaWitness> {
    check_lemma_2_6(g, None, None).or_else(|| check_lemma_2_7(g, None, None))
}

fn lemma_method(w: &LemmaWitness) -> Method {
    match w.lemma {
        Lemma::FixedByT => Method::LemmaL2_6,
        Lemma::FixedByRotation => Method::LemmaL2_7,
    }
}

fn from_abstract(outcome: AbstractOutcome) -> ChiralityVerdict {
    ChiralityVerdict {
        verdict: if outcome.reflexible {
            Verdict::Reflexible
        } else {
            Verdict::Chiral
        },
        method: Method::AbstractOracle,
        evidence: Evidence::Abstract {
            group_order: outcome.group_order,
            route: outcome.route,
        },
        confirmations: Vec::new(),
        caveat: None,
    }
}

fn from_conjugation(outcome: ConjugationOutcome) -> ChiralityVerdict {
    let (verdict, evidence) = match outcome {
        ConjugationOutcome::Reflexible(r) => (Verdict::Reflexible, Evidence::Relabelling(r)),
        ConjugationOutcome::NoRelabelling { candidates } => (Verdict::Chiral, Evidence::Exhaustion { candidates }),
    };
    ChiralityVerdict {
        verdict,
        method: Method::ConjugationSearch,
        evidence,
        confirmations: Vec::new(),
        caveat: None,
    }
}

/// Decides chirality.
///
/// With `G` alternating or symmetric of degree `≥ 7`, automorphisms are
/// relabellings: a lemma witness (if any) is reported and the exhaustive
/// relabelling search must agree with it. Otherwise the abstract oracle is
/// authoritative and the relabelling search is only reported in a caveat.
pub fn decide_chirality(
    g: &GeneratorSet,
    cls: &GroupClassification,
    config: &ChiralityConfig,
) -> Result<ChiralityVerdict, ChiralityError> {
    let exact = relabelling_is_exact(cls);
    match config.oracle {
        OracleChoice::Abstract => return abstract_oracle(g, config).map(from_abstract),
        OracleChoice::Conjugation => {
            let mut verdict = from_conjugation(conjugation_search(g, config.conjugation_bound, &config.cancel)?);
            if !exact && verdict.verdict == Verdict::Chiral {
                verdict.caveat = Some(non_exact_caveat(cls));
            }
            return Ok(verdict);
        }
        OracleChoice::Auto => {}
    }

    if !exact {
        let mut verdict = from_abstract(abstract_oracle(g, config)?);
        let note = match conjugation_search(g, config.conjugation_bound, &config.cancel) {
            Ok(ConjugationOutcome::NoRelabelling { .. }) if verdict.verdict == Verdict::Reflexible => {
                "no relabelling of the diagram inverts s; the reflecting automorphism is not induced by S_k"
            }
            Ok(ConjugationOutcome::Reflexible(_)) if verdict.verdict == Verdict::Chiral => {
                return Err(ChiralityError::Inconsistent(
                    "a relabelling inverts s but the abstract oracle found no automorphism".into(),
                ))
            }
            Ok(_) => {
                verdict.confirmations.push(Method::ConjugationSearch);
                "relabelling search agrees but is not conclusive on its own here"
            }
            Err(ChiralityError::SearchTooLarge { .. }) => "relabelling search exceeded its bound",
            Err(e) => return Err(e),
        };
        verdict.caveat = Some(format!("{}; {note}", non_exact_caveat(cls)));
        return Ok(verdict);
    }

    let lemma = lemma_witness(g);
    let search = conjugation_search(g, config.conjugation_bound, &config.cancel)?;
    match (lemma, search) {
        (Some(w), ConjugationOutcome::NoRelabelling { .. }) => Ok(ChiralityVerdict {
            verdict: Verdict::Chiral,
            method: lemma_method(&w),
            evidence: Evidence::Lemma(w),
            confirmations: vec![Method::ConjugationSearch],
            caveat: None,
        }),
        (Some(w), ConjugationOutcome::Reflexible(_)) => Err(ChiralityError::Inconsistent(format!(
            "lemma witness {w:?} but a relabelling inverts s"
        ))),
        (None, outcome) => Ok(from_conjugation(outcome)),
    }
}

fn non_exact_caveat(cls: &GroupClassification) -> String {
    let what = match cls.verdict {
        GroupVerdict::Alternating(k) => format!("A_{k}"),
        GroupVerdict::Symmetric(k) => format!("S_{k}"),
        GroupVerdict::Other => "G".to_string(),
    };
    format!("Aut({what}) may contain automorphisms not induced by relabelling")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_c3_1, build_c3_11, build_c4_1, build_c4_3, table1_lookup};
    use crate::group::{classify, default_word_pool};

    fn pair(s: &str, t: &str, k: usize) -> GeneratorSet {
        GeneratorSet::from_pair(
            Permutation::parse(s, Some(k)).unwrap(),
            Permutation::parse(t, Some(k)).unwrap(),
        )
        .unwrap()
    }

    fn psl27() -> GeneratorSet {
        pair("(1,2,3)(4,5,6)", "(1,4)(6,7)", 7)
    }

    fn dihedral() -> GeneratorSet {
        pair("(1,2,3,4,5)", "(2,5)(3,4)", 5)
    }

    #[test]
    fn cited_lemma_parameters_hold() {
        let g = build_c3_1(1, 1).unwrap();
        assert!(check_lemma_at(&g, Lemma::FixedByT, Rotation::S, 3, 2).is_some());
        let g = build_c3_1(1, -1).unwrap();
        assert!(check_lemma_at(&g, Lemma::FixedByRotation, Rotation::S, 4, 3).is_some());
        for (n, a) in [(7, 1), (11, 3), (13, 7)] {
            let g = build_c3_11(n, a).unwrap();
            assert!(
                check_lemma_at(&g, Lemma::FixedByT, Rotation::S, 2, -1).is_some(),
                "C3_11({n},{a})"
            );
        }
        let g = build_c4_3(1, -1).unwrap();
        assert!(check_lemma_at(&g, Lemma::FixedByRotation, Rotation::S, 2, -3).is_some());
        let g = build_c4_1(1, -1).unwrap();
        assert!(check_lemma_at(&g, Lemma::FixedByRotation, Rotation::S, 1, 2).is_some());
    }

    #[test]
    fn lemma_witness_satisfies_its_conditions() {
        let g = build_c3_1(2, 1).unwrap();
        let w = check_lemma_2_6(&g, None, None).unwrap();
        let x = g.rotation(w.rotation);
        let z = w.zeta;
        assert_ne!(g.t.image(z), z);
        assert_eq!(g.t.image(x.pow(w.b).image(z)), z);
        let there = x.pow(w.c).image(z);
        assert_eq!(g.t.image(there), there);
    }

    #[test]
    fn no_witness_when_t_misses_the_cycle() {
        let g = pair("(1,2,3,4,5)", "(6,7)", 7);
        assert_eq!(check_lemma_2_6(&g, None, None), None);
        assert_eq!(check_lemma_2_7(&g, None, None), None);
    }

    #[test]
    fn dihedral_toy_is_reflexible() {
        let g = dihedral();
        let ConjugationOutcome::Reflexible(r) = conjugation_search(&g, 1000, &CancelToken::new()).unwrap() else {
            panic!("expected a relabelling");
        };
        assert!(r.is_valid_for(&g.s, &g.t));
        assert!(
            abstract_reflexibility(&g, 1000, &CancelToken::new())
                .unwrap()
                .reflexible
        );
        assert!(graph_subgroup_reflexibility(&g).unwrap().reflexible);
    }

    #[test]
    fn psl27_is_reflexible_without_relabelling() {
        let g = psl27();
        assert!(matches!(
            conjugation_search(&g, 1000, &CancelToken::new()).unwrap(),
            ConjugationOutcome::NoRelabelling { .. }
        ));
        let out = abstract_reflexibility(&g, 1000, &CancelToken::new()).unwrap();
        assert!(out.reflexible);
        assert_eq!(out.group_order, BigUint::from(168u32));
        assert!(graph_subgroup_reflexibility(&g).unwrap().reflexible);

        let cls = classify(&[g.s.clone(), g.t.clone()], &default_word_pool(), 64).unwrap();
        let v = decide_chirality(&g, &cls, &ChiralityConfig::default()).unwrap();
        assert_eq!((v.verdict, v.method), (Verdict::Reflexible, Method::AbstractOracle));
        assert!(v.caveat.is_some());
    }

    #[test]
    fn table_row_4_5_is_reflexible_through_an_outer_automorphism() {
        // A_6 is the one alternating group whose automorphisms are not all
        // relabellings; here the inverting automorphism is outer.
        let g = table1_lookup(4, 5).unwrap();
        assert!(matches!(
            conjugation_search(&g, 1000, &CancelToken::new()).unwrap(),
            ConjugationOutcome::NoRelabelling { .. }
        ));
        let out = abstract_reflexibility(&g, 1000, &CancelToken::new()).unwrap();
        assert!(out.reflexible);
        assert_eq!(out.group_order, BigUint::from(360u32));
        let cls = classify(&[g.s.clone(), g.t.clone()], &g.word_pool(), 64).unwrap();
        let v = decide_chirality(&g, &cls, &ChiralityConfig::default()).unwrap();
        assert_eq!((v.verdict, v.method), (Verdict::Reflexible, Method::AbstractOracle));
    }

    #[test]
    fn table_row_6_5_is_chiral_by_both_abstract_routes() {
        let g = table1_lookup(6, 5).unwrap();
        let out = abstract_reflexibility(&g, 10_000_000, &CancelToken::new()).unwrap();
        assert!(!out.reflexible);
        assert!(!graph_subgroup_reflexibility(&g).unwrap().reflexible);
    }

    #[test]
    fn order_bound_is_enforced() {
        let g = table1_lookup(4, 5).unwrap();
        assert!(matches!(
            abstract_reflexibility(&g, 100, &CancelToken::new()),
            Err(ChiralityError::GroupTooLarge { .. })
        ));
    }

    #[test]
    fn search_bound_is_enforced() {
        let g = build_c3_1(3, 1).unwrap();
        assert_eq!(
            conjugation_search(&g, 1, &CancelToken::new()),
            Err(ChiralityError::SearchTooLarge { bound: 1 })
        );
    }

    #[test]
    fn cancellation_stops_bfs() {
        let g = table1_lookup(4, 5).unwrap();
        let token = CancelToken::new();
        token.cancel();
        assert_eq!(abstract_reflexibility(&g, 1000, &token), Err(ChiralityError::Cancelled));
    }

    #[test]
    fn signed_range_order() {
        assert_eq!(signed_range(2, true).collect::<Vec<_>>(), vec![0, 1, -1, 2, -2]);
        assert_eq!(signed_range(2, false).collect::<Vec<_>>(), vec![1, -1, 2, -2]);
    }
}
