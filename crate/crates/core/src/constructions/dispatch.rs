//! Chooses a construction for a requested type.
//!
//! Types are first normalised by duality so that `m` is even (and `m ≤ n`
//! when both are even). Both-odd types and types with a 3 are covered by
//! external results and reported as such.

use serde::{Deserialize, Serialize};

use super::{
    build_c3_1, build_c3_11, build_c3_13, build_c3_15, build_c3_3, build_c3_5, build_c3_7, build_c3_9, build_c4_1,
    build_c4_1_a0, build_c4_3, build_c4_3_a0, build_c4_5, build_c4_7, table1_lookup, ConstructionError, ConstructionId,
    ConstructionParams, GeneratorSet, MapType,
};

/// The published result covering a type this crate does not construct.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ExternalTheorem {
    /// Both `m` and `n` odd: Conder, Hucíková, Nedela and Širáň.
    #[serde(rename = "CHNS")]
    Chns,
    /// Valency or face length 3: Bujalance, Conder and Costa.
    #[serde(rename = "BCC")]
    Bcc,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum PlanOutcome {
    Supported {
        params: ConstructionParams,
        /// The normalised type actually constructed before any dualisation.
        base_type: MapType,
    },
    UnsupportedExternal {
        theorem: ExternalTheorem,
    },
    NotHyperbolic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionPlan {
    pub requested: MapType,
    pub outcome: PlanOutcome,
}

impl ConstructionPlan {
    pub fn params(&self) -> Option<ConstructionParams> {
        match self.outcome {
            PlanOutcome::Supported { params, .. } => Some(params),
            _ => None,
        }
    }
}

/// `(a, i)` with `value = 4a + offset + i`, `i ∈ {-1, 1}`.
fn split_pm1(value: u32, offset: u32) -> (u32, i32) {
    let rest = value - offset;
    if (rest + 1).is_multiple_of(4) {
        ((rest + 1) / 4, -1)
    } else {
        ((rest - 1) / 4, 1)
    }
}

pub fn dispatch(requested: MapType) -> ConstructionPlan {
    let plan = |outcome| ConstructionPlan { requested, outcome };
    if !requested.is_hyperbolic() {
        return plan(PlanOutcome::NotHyperbolic);
    }
    let MapType { m, n } = requested;
    if m % 2 == 1 && n % 2 == 1 {
        return plan(PlanOutcome::UnsupportedExternal {
            theorem: ExternalTheorem::Chns,
        });
    }
    let dualized = m % 2 == 1 || (n % 2 == 0 && m > n);
    let base = if dualized { requested.dual() } else { requested };
    let (m, n) = (base.m, base.n);
    if n == 3 {
        return plan(PlanOutcome::UnsupportedExternal {
            theorem: ExternalTheorem::Bcc,
        });
    }

    use ConstructionId::*;
    let choice: Option<(ConstructionId, u32, i32, u32)> = if super::TABLE1_TYPES.iter().any(|(ty, _)| *ty == base) {
        Some((Table1, 0, 0, 0))
    } else {
        match (m, n % 2 == 1) {
            (4, true) if n >= 9 => {
                let (a, i) = split_pm1(n, 4);
                Some((C3_1, a, i, 0))
            }
            (4, false) if n >= 10 => {
                let (a, i) = split_pm1(n, 7);
                Some((C4_1, a, i, 0))
            }
            (4, false) if n == 6 || n == 8 => Some((C4_1A0, 0, if n == 6 { -1 } else { 1 }, 0)),
            (6, true) if n >= 9 => {
                let (a, i) = split_pm1(n, 6);
                Some((C3_3, a, i, 0))
            }
            (6, false) if n >= 10 => {
                let (a, i) = split_pm1(n, 7);
                Some((C4_3, a, i, 0))
            }
            (6, false) if n == 8 => Some((C4_3A0, 0, 1, 0)),
            (8, true) if n >= 9 => {
                let (a, i) = split_pm1(n, 6);
                Some((C3_5, a, i, 0))
            }
            (8, false) if n >= 8 => {
                let (a, i) = split_pm1(n, 7);
                Some((if a == 0 { C4_5A0 } else { C4_5 }, a, i, 0))
            }
            (m, true) if m >= 10 && n > m => {
                let d = n - m;
                if d % 4 == 1 {
                    Some((C3_7, (d - 1) / 4, 1, 0))
                } else {
                    Some((C3_7, (d + 1) / 4, -1, 0))
                }
            }
            (m, true) if n < m => {
                let (nu, a) = ((m + 6) / n, (m + 6) % n);
                if n == 5 && nu >= 4 {
                    Some((C3_9, a, 0, nu))
                } else if n >= 7 && m <= 2 * n - 6 {
                    Some((C3_11, m - n, 0, 0))
                } else if (n == 7 || n == 9) && nu >= 3 {
                    Some((C3_15, a, 0, nu))
                } else if n >= 11 {
                    Some((C3_13, a, 0, nu))
                } else {
                    None
                }
            }
            (m, false) if m >= 10 => Some((C4_7, (n - m) / 4, ((n - m) % 4) as i32, 0)),
            _ => None,
        }
    };
    let (id, a, i, nu) = choice.unwrap_or_else(|| unreachable!("dispatch table is total on hyperbolic types: {base}"));
    plan(PlanOutcome::Supported {
        params: ConstructionParams {
            construction_id: id,
            a,
            i,
            nu,
            dualized,
        },
        base_type: base,
    })
}

/// Executes a plan, dualising when the plan says so.
pub fn build(plan: &ConstructionPlan) -> Result<GeneratorSet, ConstructionError> {
    let (params, base) = match plan.outcome {
        PlanOutcome::Supported { params, base_type } => (params, base_type),
        PlanOutcome::UnsupportedExternal { theorem } => {
            return Err(ConstructionError::PlanUnsupported(format!(
                "{} is covered by an external result ({theorem:?})",
                plan.requested
            )))
        }
        PlanOutcome::NotHyperbolic => {
            return Err(ConstructionError::NotHyperbolic {
                m: plan.requested.m,
                n: plan.requested.n,
            })
        }
    };
    use ConstructionId::*;
    let (a, i) = (params.a, params.i);
    let set = match params.construction_id {
        C3_1 => build_c3_1(a, i)?,
        C3_3 => build_c3_3(a, i)?,
        C3_5 => build_c3_5(a, i)?,
        C3_7 => build_c3_7(base.m, a, i)?,
        C3_9 => build_c3_9(base.m)?,
        C3_11 => build_c3_11(base.n, a)?,
        C3_13 => build_c3_13(base.n, base.m)?,
        C3_15 => build_c3_15(base.n, base.m)?,
        C4_1 => build_c4_1(a, i)?,
        C4_1A0 => build_c4_1_a0(i)?,
        C4_3 => build_c4_3(a, i)?,
        C4_3A0 => build_c4_3_a0()?,
        C4_5 | C4_5A0 => build_c4_5(a, i)?,
        C4_7 => build_c4_7(base.m, base.n)?,
        Table1 => table1_lookup(base.m, base.n)?,
    };
    if set.map_type != base {
        return Err(ConstructionError::BadParams(format!(
            "{} built type {} instead of {base}",
            params.construction_id, set.map_type
        )));
    }
    Ok(if params.dualized { set.dualize() } else { set })
}
