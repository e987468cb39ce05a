//! The orientably-regular map determined by a verified generator set: its
//! combinatorial invariants and a DOT rendering of the permutation diagram.

use std::fmt::Write as _;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use thiserror::Error;

use crate::chirality::ChiralityVerdict;
use crate::constructions::{ConstructionParams, GeneratorSet, HyperbolicType};
use crate::group::{GroupClassification, Rotation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("{divisor} does not divide the group order {order}")]
    DivisibilityViolation { order: BigUint, divisor: u32 },
    #[error("group order unknown")]
    UnknownOrder,
    #[error("type {{{m},{n}}} is not hyperbolic")]
    NotHyperbolic { m: u32, n: u32 },
    #[error("Euler characteristic {0} does not give an orientable genus")]
    BadCharacteristic(BigInt),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapRecord {
    pub map_type: HyperbolicType,
    pub degree: usize,
    pub group: GroupClassification,
    pub group_order: BigUint,
    pub vertices: BigUint,
    pub edges: BigUint,
    pub faces: BigUint,
    pub euler_characteristic: BigInt,
    pub genus: BigUint,
    pub chirality: ChiralityVerdict,
    pub construction: Option<ConstructionParams>,
}

fn exact_div(order: &BigUint, divisor: u32) -> Result<BigUint, MapError> {
    let (q, r) = order.div_rem(&BigUint::from(divisor));
    if r == BigUint::ZERO {
        Ok(q)
    } else {
        Err(MapError::DivisibilityViolation {
            order: order.clone(),
            divisor,
        })
    }
}

/// `V = |G|/n`, `E = |G|/2`, `F = |G|/m`, `χ = V - E + F = 2 - 2g`.
pub fn build_record(g: &GeneratorSet, cls: &GroupClassification, ch: &ChiralityVerdict) -> Result<MapRecord, MapError> {
    let (m, n) = (g.map_type.m, g.map_type.n);
    let map_type = HyperbolicType::new(m, n).map_err(|_| MapError::NotHyperbolic { m, n })?;
    let order = cls.order.clone().ok_or(MapError::UnknownOrder)?;
    let vertices = exact_div(&order, n)?;
    let edges = exact_div(&order, 2)?;
    let faces = exact_div(&order, m)?;
    let chi = BigInt::from(vertices.clone()) - BigInt::from(edges.clone()) + BigInt::from(faces.clone());
    let twice_genus = BigInt::from(2) - &chi;
    let (genus, rem) = twice_genus.div_rem(&BigInt::from(2));
    let genus = match (genus.to_biguint(), rem == BigInt::ZERO) {
        (Some(genus), true) => genus,
        _ => return Err(MapError::BadCharacteristic(chi)),
    };
    Ok(MapRecord {
        map_type,
        degree: g.degree(),
        group: cls.clone(),
        group_order: order,
        vertices,
        edges,
        faces,
        euler_characteristic: chi,
        genus,
        chirality: ch.clone(),
        construction: g.params,
    })
}

fn quote(text: &str) -> String {
    format!("\"{}\"", text.replace('\\', "\\\\").replace('"', "\\\""))
}

/// The permutation diagram as a DOT digraph: one node per point named by
/// its label, blue undirected edges for the transpositions of `t`, red arcs
/// along the cycles of the drawn rotation. Fixed points carry no edges.
pub fn export_dot(g: &GeneratorSet) -> String {
    let rotation = g.diagram_rotation();
    let x = g.rotation(rotation);
    let name = |p: usize| quote(&g.labels.label(p).to_string());
    let mut out = String::new();
    let title = format!(
        "{} {}",
        g.map_type,
        match rotation {
            Rotation::S => "s",
            Rotation::R => "r",
        }
    );
    writeln!(out, "digraph {} {{", quote(&title)).unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    for p in 0..g.degree() {
        writeln!(out, "  {};", name(p)).unwrap();
    }
    for p in 0..g.degree() {
        let q = g.t.image(p);
        if p < q {
            writeln!(out, "  {} -> {} [dir=none, color=blue];", name(p), name(q)).unwrap();
        }
    }
    for cycle in x.cycle_decomposition().cycles {
        for (idx, &p) in cycle.iter().enumerate() {
            let q = cycle[(idx + 1) % cycle.len()];
            writeln!(out, "  {} -> {} [color=red];", name(p), name(q)).unwrap();
        }
    }
    out.push_str("}\n");
    out
}
