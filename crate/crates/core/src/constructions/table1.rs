//! Hand-picked generators for the finitely many types the families miss.

use super::{ConstructionError, ConstructionId, ConstructionParams, GeneratorSet, LabelMap, MapType};
use crate::perm::Permutation;

/// `(m, n, s, t, k)` with `s`, `t` in 1-based cycle notation and the
/// expected group `A_k`.
const ROWS: [(u32, u32, &str, &str, usize); 15] = [
    (4, 5, "(1,2,3,4,5)", "(1,3)(4,6)", 6),
    (6, 5, "(1,2,3,4,5)(6,7,8,9,10)", "(1,6)(2,4)(7,8)(9,10)", 10),
    (8, 5, "(1,2,3,4,5)(6,7,8,9,10)", "(1,6)(2,4)", 10),
    (10, 5, "(1,2,3,4,5)(6,7,8,9,10)", "(1,6)(2,4)(7,11)(8,12)", 12),
    (
        12,
        5,
        "(1,2,3,4,5)(6,7,8,9,10)",
        "(1,6)(2,4)(7,11)(8,12)(9,13)(10,14)",
        14,
    ),
    (
        6,
        6,
        "(1,2,3,4,5,6)(7,8,9,10,11,12)",
        "(1,7)(2,5)(6,13)(8,12)(9,14)(10,15)",
        15,
    ),
    (4, 7, "(1,2,3,4,5,6,7)", "(1,5)(2,3)(4,9)(7,8)", 9),
    (
        6,
        7,
        "(1,2,3,4,5,6,7)(8,9,10,11,12,13,14)",
        "(1,3)(4,6)(7,8)(9,13)(10,15)(11,16)",
        16,
    ),
    (
        10,
        7,
        "(1,2,3,4,5,6,7)(8,9,10,11,12,13,14)",
        "(1,8)(2,4)(5,6)(9,10)",
        14,
    ),
    (
        12,
        7,
        "(1,2,3,4,5,6,7)(8,9,10,11,12,13,14)",
        "(1,8)(2,3)(4,5)(6,15)(7,16)(9,17)(10,12)(13,14)",
        17,
    ),
    (
        14,
        7,
        "(1,2,3,4,5,6,7)(8,9,10,11,12,13,14)",
        "(1,8)(7,9)(10,15)(11,16)",
        16,
    ),
    (
        14,
        9,
        "(1,2,3,4,5,6,7,8,9)(10,11,12)",
        "(1,10)(2,12)(3,13)(4,14)(5,15)(6,16)",
        16,
    ),
    (
        16,
        9,
        "(1,2,3,4,5,6,7,8,9)(10,11,12)(13,17,18)",
        "(1,10)(2,12)(3,13)(4,14)(5,15)(6,16)",
        18,
    ),
    (
        18,
        9,
        "(1,2,3,4,5,6,7,8,9)(10,11,12)(13,17,18)(14,19,20)",
        "(1,10)(2,12)(3,13)(4,14)(5,15)(6,16)",
        20,
    ),
    (
        20,
        9,
        "(1,2,3,4,5,6,7,8,9)(10,11,12)(13,17,18)(14,19,20)(15,21,22)",
        "(1,10)(2,12)(3,13)(4,14)(5,15)(6,16)",
        22,
    ),
];

/// The fifteen tabulated types with the degree of their alternating group.
pub const TABLE1_TYPES: [(MapType, usize); 15] = {
    let mut out = [(MapType::new(0, 0), 0); 15];
    let mut idx = 0;
    while idx < 15 {
        out[idx] = (MapType::new(ROWS[idx].0, ROWS[idx].1), ROWS[idx].4);
        idx += 1;
    }
    out
};

/// Generators for a tabulated type (with `m` even, as tabulated).
pub fn table1_lookup(m: u32, n: u32) -> Result<GeneratorSet, ConstructionError> {
    let &(_, _, s, t, k) = ROWS
        .iter()
        .find(|row| row.0 == m && row.1 == n)
        .ok_or(ConstructionError::NotInTable { m, n })?;
    let s = Permutation::parse(s, Some(k))?;
    let t = Permutation::parse(t, Some(k))?;
    GeneratorSet::new(
        s,
        t,
        LabelMap::numeric(k),
        MapType::new(m, n),
        Some(ConstructionParams::new(ConstructionId::Table1, 0, 0, 0)),
    )
}
