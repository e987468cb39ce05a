//! End-to-end verification: dispatch, build, and check every property a
//! chiral map with alternating group must have, collected in a
//! serialisable report.

use std::fmt;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chirality::{decide_chirality, AbstractRoute, ChiralityConfig, Evidence, Lemma, Method, Verdict};
use crate::constructions::{
    build, dispatch, table1_lookup, ConstructionPlan, ExternalTheorem, GeneratorSet, MapType, PlanOutcome, TABLE1_TYPES,
};
use crate::group::{classify, GroupVerdict, Rotation, StabilizerChain, DEFAULT_DEGREE_CAP};
use crate::map_model::build_record;
use crate::perm::{Parity, Permutation};

/// Environment variable overriding [`DEFAULT_DEGREE_CAP`].
pub const DEGREE_CAP_ENV: &str = "CHIRALMAP_DEGREE_CAP";

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    /// Instances of larger degree are reported as skipped.
    pub degree_cap: usize,
    pub chirality: ChiralityConfig,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            degree_cap: DEFAULT_DEGREE_CAP,
            chirality: ChiralityConfig::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Overall {
    Pass,
    Fail,
    Unsupported,
    Skipped,
    NotHyperbolic,
}

impl fmt::Display for Overall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Overall::Pass => "PASS",
            Overall::Fail => "FAIL",
            Overall::Unsupported => "UNSUPPORTED",
            Overall::Skipped => "SKIPPED",
            Overall::NotHyperbolic => "NOT_HYPERBOLIC",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generators {
    /// 1-based cycle notation.
    pub s: String,
    pub t: String,
    pub r: String,
    /// The same permutations written with the diagram labels.
    pub s_labelled: String,
    pub t_labelled: String,
    pub r_labelled: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderCheck {
    pub expected: u64,
    pub actual: u64,
    pub pass: bool,
}

impl OrderCheck {
    fn new(expected: u64, actual: u64) -> Self {
        OrderCheck {
            expected,
            actual,
            pass: expected == actual,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderChecks {
    pub s: OrderCheck,
    pub t: OrderCheck,
    pub st: OrderCheck,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParityChecks {
    pub s: Parity,
    pub t: Parity,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub word: String,
    pub cycle_length: usize,
    pub fixed_count: usize,
    pub prime_length: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub verdict: GroupVerdict,
    /// Decimal; absent only when the order could not be computed.
    pub order: Option<String>,
    pub witness: Option<WitnessReport>,
    /// The stabilizer-chain order equals `order`.
    pub order_cross_check: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub lemma: Lemma,
    pub rotation: Rotation,
    pub zeta: String,
    pub b: i64,
    pub c: i64,
    pub power_variant: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChiralityReport {
    pub verdict: Verdict,
    pub method: Method,
    pub lemma: Option<LemmaReport>,
    /// 1-based cycle notation of a relabelling inverting `s` and fixing `t`.
    pub relabelling: Option<String>,
    pub search_candidates: Option<u64>,
    pub abstract_route: Option<AbstractRoute>,
    pub confirmations: Vec<Method>,
    pub caveat: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapReport {
    pub vertices: String,
    pub edges: String,
    pub faces: String,
    pub euler_characteristic: String,
    pub genus: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub requested_type: MapType,
    pub plan: Option<ConstructionPlan>,
    pub unsupported_reason: Option<String>,
    pub generators: Option<Generators>,
    pub degree: Option<usize>,
    pub order_checks: Option<OrderChecks>,
    pub parity: Option<ParityChecks>,
    pub transitive: Option<bool>,
    pub primitive: Option<bool>,
    pub classification: Option<ClassificationReport>,
    pub chirality: Option<ChiralityReport>,
    pub map: Option<MapReport>,
    pub overall: Overall,
    pub error: Option<String>,
}

impl VerificationReport {
    fn empty(requested_type: MapType, plan: Option<ConstructionPlan>, overall: Overall) -> Self {
        VerificationReport {
            requested_type,
            plan,
            unsupported_reason: None,
            generators: None,
            degree: None,
            order_checks: None,
            parity: None,
            transitive: None,
            primitive: None,
            classification: None,
            chirality: None,
            map: None,
            overall,
            error: None,
        }
    }

    fn fail(mut self, error: impl fmt::Display) -> Self {
        self.overall = Overall::Fail;
        self.error = Some(error.to_string());
        self
    }

    /// Every individual check recorded as passing, `G = A_k` and chiral.
    fn all_checks_pass(&self) -> bool {
        let orders = self.order_checks.is_some_and(|o| o.s.pass && o.t.pass && o.st.pass);
        let parity = self.parity.is_some_and(|p| p.pass);
        let alternating = matches!(
            (&self.classification, self.degree),
            (Some(c), Some(k)) if c.verdict == GroupVerdict::Alternating(k) && c.order_cross_check
        );
        let chiral = self.chirality.as_ref().is_some_and(|c| c.verdict == Verdict::Chiral);
        orders
            && parity
            && self.transitive == Some(true)
            && self.primitive == Some(true)
            && alternating
            && chiral
            && self.map.is_some()
    }
}

fn labelled(g: &GeneratorSet, p: &Permutation) -> String {
    let cycles = p.cycle_decomposition().cycles;
    if cycles.is_empty() {
        return "()".to_string();
    }
    cycles
        .iter()
        .map(|c| {
            let names: Vec<String> = c.iter().map(|&q| g.labels.label(q).to_string()).collect();
            format!("({})", names.join(","))
        })
        .collect()
}

fn external_reason(theorem: ExternalTheorem) -> &'static str {
    match theorem {
        ExternalTheorem::Chns => "CHNS: both m and n odd",
        ExternalTheorem::Bcc => "BCC: m or n equals 3",
    }
}

/// Dispatches, builds and verifies a single type.
pub fn verify_type(requested: MapType, config: &VerifyConfig) -> VerificationReport {
    let plan = dispatch(requested);
    match plan.outcome {
        PlanOutcome::NotHyperbolic => VerificationReport::empty(requested, Some(plan), Overall::NotHyperbolic),
        PlanOutcome::UnsupportedExternal { theorem } => {
            let mut report = VerificationReport::empty(requested, Some(plan), Overall::Unsupported);
            report.unsupported_reason = Some(external_reason(theorem).to_string());
            report
        }
        PlanOutcome::Supported { .. } => match build(&plan) {
            Ok(g) => check(&g, requested, Some(plan), config),
            Err(e) => VerificationReport::empty(requested, Some(plan), Overall::Fail).fail(e),
        },
    }
}

/// Verifies an explicit generator set against the type it claims.
pub fn verify_generators(g: &GeneratorSet, config: &VerifyConfig) -> VerificationReport {
    check(g, g.map_type, None, config)
}

fn check(
    g: &GeneratorSet,
    requested: MapType,
    plan: Option<ConstructionPlan>,
    config: &VerifyConfig,
) -> VerificationReport {
    let mut report = VerificationReport::empty(requested, plan, Overall::Fail);
    let k = g.degree();
    report.degree = Some(k);
    if k > config.degree_cap {
        report.overall = Overall::Skipped;
        report.error = Some(format!("degree {k} exceeds the cap {}", config.degree_cap));
        return report;
    }
    report.generators = Some(Generators {
        s: g.s.to_cycle_string(),
        t: g.t.to_cycle_string(),
        r: g.r.to_cycle_string(),
        s_labelled: labelled(g, &g.s),
        t_labelled: labelled(g, &g.t),
        r_labelled: labelled(g, &g.r),
    });
    report.order_checks = Some(OrderChecks {
        s: OrderCheck::new(requested.n as u64, g.s.order()),
        t: OrderCheck::new(2, g.t.order()),
        st: OrderCheck::new(requested.m as u64, g.s.then(&g.t).order()),
    });
    report.parity = Some(ParityChecks {
        s: g.s.parity(),
        t: g.t.parity(),
        pass: g.s.parity() == Parity::Even && g.t.parity() == Parity::Even,
    });

    let gens = [g.s.clone(), g.t.clone()];
    let cls = match classify(&gens, &g.word_pool(), config.degree_cap) {
        Ok(cls) => cls,
        Err(e) => return report.fail(e),
    };
    report.transitive = Some(cls.transitive);
    report.primitive = Some(cls.primitive);
    let chain_order = StabilizerChain::new(&gens).map(|c| c.order());
    report.classification = Some(ClassificationReport {
        verdict: cls.verdict,
        order: cls.order.as_ref().map(BigUint::to_string),
        witness: cls.evidence.as_ref().map(|w| WitnessReport {
            word: w.word.to_string(),
            cycle_length: w.cycle_length,
            fixed_count: w.fixed_count,
            prime_length: w.prime_length,
        }),
        order_cross_check: matches!((&chain_order, &cls.order), (Ok(a), Some(b)) if a == b),
    });

    let ch = match decide_chirality(g, &cls, &config.chirality) {
        Ok(ch) => ch,
        Err(e) => return report.fail(e),
    };
    let mut chirality = ChiralityReport {
        verdict: ch.verdict,
        method: ch.method,
        lemma: None,
        relabelling: None,
        search_candidates: None,
        abstract_route: None,
        confirmations: ch.confirmations.clone(),
        caveat: ch.caveat.clone(),
    };
    match &ch.evidence {
        Evidence::Lemma(w) => {
            chirality.lemma = Some(LemmaReport {
                lemma: w.lemma,
                rotation: w.rotation,
                zeta: g.labels.label(w.zeta).to_string(),
                b: w.b,
                c: w.c,
                power_variant: w.power_variant,
            })
        }
        Evidence::Relabelling(r) => chirality.relabelling = Some(r.pi.to_cycle_string()),
        Evidence::Exhaustion { candidates } => chirality.search_candidates = Some(*candidates),
        Evidence::Abstract { route, .. } => chirality.abstract_route = Some(*route),
    }
    report.chirality = Some(chirality);

    match build_record(g, &cls, &ch) {
        Ok(record) => {
            report.map = Some(MapReport {
                vertices: record.vertices.to_string(),
                edges: record.edges.to_string(),
                faces: record.faces.to_string(),
                euler_characteristic: record.euler_characteristic.to_string(),
                genus: record.genus.to_string(),
            })
        }
        Err(e) => report.error = Some(e.to_string()),
    }

    if report.all_checks_pass() {
        report.overall = Overall::Pass;
    }
    report
}

/// Every hyperbolic type in `[min_m, max_m] × [min_n, max_n]`, verified in
/// parallel and returned sorted by `(m, n)`.
pub fn sweep(min_m: u32, max_m: u32, min_n: u32, max_n: u32, config: &VerifyConfig) -> Vec<VerificationReport> {
    let types: Vec<MapType> = (min_m..=max_m)
        .flat_map(|m| (min_n..=max_n).map(move |n| MapType::new(m, n)))
        .filter(MapType::is_hyperbolic)
        .collect();
    let mut reports: Vec<VerificationReport> = types.par_iter().map(|&ty| verify_type(ty, config)).collect();
    reports.sort_by_key(|r| r.requested_type);
    reports
}

/// The fifteen tabulated rows followed by their duals.
pub fn table1_reports(config: &VerifyConfig) -> Vec<VerificationReport> {
    let rows: Vec<GeneratorSet> = TABLE1_TYPES
        .iter()
        .map(|(ty, _)| table1_lookup(ty.m, ty.n).expect("tabulated row"))
        .collect();
    let duals: Vec<GeneratorSet> = rows.iter().map(GeneratorSet::dualize).collect();
    rows.par_iter()
        .chain(duals.par_iter())
        .map(|g| verify_generators(g, config))
        .collect()
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub unsupported: usize,
    pub skipped: usize,
    pub not_hyperbolic: usize,
}

impl Summary {
    pub fn of(reports: &[VerificationReport]) -> Self {
        let mut s = Summary::default();
        for r in reports {
            match r.overall {
                Overall::Pass => s.pass += 1,
                Overall::Fail => s.fail += 1,
                Overall::Unsupported => s.unsupported += 1,
                Overall::Skipped => s.skipped += 1,
                Overall::NotHyperbolic => s.not_hyperbolic += 1,
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn four_nine_passes() {
        let r = verify_type(MapType::new(4, 9), &VerifyConfig::default());
        assert_eq!(r.overall, Overall::Pass, "{r:?}");
        assert_eq!(r.classification.unwrap().verdict, GroupVerdict::Alternating(10));
        let ch = r.chirality.unwrap();
        assert_eq!(ch.method, Method::LemmaL2_6);
        assert_eq!(ch.confirmations, vec![Method::ConjugationSearch]);
    }

    #[test]
    fn unsupported_and_not_hyperbolic() {
        let config = VerifyConfig::default();
        let r = verify_type(MapType::new(7, 9), &config);
        assert_eq!(r.overall, Overall::Unsupported);
        assert!(r.unsupported_reason.unwrap().starts_with("CHNS"));
        assert_eq!(verify_type(MapType::new(4, 4), &config).overall, Overall::NotHyperbolic);
    }

    #[test]
    fn degree_cap_skips() {
        let config = VerifyConfig {
            degree_cap: 12,
            ..VerifyConfig::default()
        };
        let r = verify_type(MapType::new(4, 17), &config);
        assert_eq!(r.overall, Overall::Skipped);
    }

    #[test]
    fn psl27_fails_overall() {
        let s = Permutation::parse("(1,2,3)(4,5,6)", Some(7)).unwrap();
        let t = Permutation::parse("(1,4)(6,7)", Some(7)).unwrap();
        let r = verify_generators(&GeneratorSet::from_pair(s, t).unwrap(), &VerifyConfig::default());
        assert_eq!(r.overall, Overall::Fail);
        assert_eq!(r.chirality.unwrap().verdict, Verdict::Reflexible);
        assert_eq!(r.classification.unwrap().order.as_deref(), Some("168"));
    }

    #[test]
    fn report_round_trips() {
        let r = verify_type(MapType::new(5, 6), &VerifyConfig::default());
        assert_eq!(r.overall, Overall::Pass, "{r:?}");
        let text = serde_json::to_string(&r).unwrap();
        let back: VerificationReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
        assert!(text.contains("\"overall\":\"PASS\""));
    }

    /// The tabulated {4,5} generators give a reflexible map (see chirality).
    #[test]
    fn small_sweep() {
        let reports = sweep(4, 5, 4, 5, &VerifyConfig::default());
        let types: Vec<_> = reports.iter().map(|r| (r.requested_type, r.overall)).collect();
        assert_eq!(
            types,
            vec![
                (MapType::new(4, 5), Overall::Fail),
                (MapType::new(5, 4), Overall::Fail),
                (MapType::new(5, 5), Overall::Unsupported),
            ]
        );
    }
}
