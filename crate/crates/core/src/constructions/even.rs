//! Constructions for even `m ≤ n`, both even.

use super::labels::{Diagram, Greek::*, Label};
use super::odd::{check_i, g, num, numbered_chain, numbered_matching, pair, primed_chain_back};
use super::{bad, ConstructionError, ConstructionId, ConstructionParams, GeneratorSet, MapType};

/// `(α,α')(β,β')(γ,γ')(δ,δ')` followed by the numbered matching.
fn greek_matching(a: u32) -> Vec<Vec<Label>> {
    let mut t = vec![pair(g(Alpha)), pair(g(Beta)), pair(g(Gamma)), pair(g(Delta))];
    t.extend(numbered_matching(a));
    t
}

fn assemble(long: Vec<Label>, short: [Label; 2], a: u32, n: u32, m: u32, params: ConstructionParams) -> GeneratorSet {
    let mut d = Diagram::new();
    d.add(vec![long, short.to_vec()]);
    d.add(greek_matching(a));
    let (labels, perms) = d.finish();
    let [s, t]: [_; 2] = perms.try_into().expect("two permutations recorded");
    GeneratorSet::from_diagram(labels, s, t, MapType::new(m, n), params)
}

fn c4_1(a: u32, i: i32, id: ConstructionId) -> GeneratorSet {
    let n = (4 * a + 7) as i32 + i;
    let mut long = numbered_chain(a);
    if i == -1 {
        long.extend([g(Alpha), g(Alpha).prime(), g(Beta)]);
    } else {
        long.extend([g(Alpha), g(Alpha).prime(), g(Beta), g(Beta).prime(), g(Zeta)]);
    }
    long.extend(primed_chain_back(a));
    long.extend([g(Gamma), g(Delta), g(Gamma).prime()]);
    assemble(
        long,
        [g(Delta).prime(), g(Epsilon)],
        a,
        n as u32,
        4,
        ConstructionParams::new(id, a, i, 0),
    )
}

/// `{4, n}` with `n = 4a + 7 + i` even, `a ≥ 1`.
pub fn build_c4_1(a: u32, i: i32) -> Result<GeneratorSet, ConstructionError> {
    check_i(i)?;
    if a < 1 {
        return Err(bad("C4_1 needs a >= 1; use the a = 0 variant for n in {6, 8}"));
    }
    Ok(c4_1(a, i, ConstructionId::C4_1))
}

/// The numbered points dropped: `{4, 6}` for `i = -1`, `{4, 8}` for `i = 1`.
pub fn build_c4_1_a0(i: i32) -> Result<GeneratorSet, ConstructionError> {
    check_i(i)?;
    Ok(c4_1(0, i, ConstructionId::C4_1A0))
}

fn c4_3(a: u32, i: i32, id: ConstructionId) -> GeneratorSet {
    let n = (4 * a + 7) as i32 + i;
    let mut long = numbered_chain(a);
    let short = if i == -1 {
        long.extend([g(Alpha), g(Alpha).prime(), g(Beta)]);
        [g(Beta).prime(), g(Gamma)]
    } else {
        long.extend([g(Alpha), g(Alpha).prime(), g(Beta), g(Beta).prime(), g(Gamma)]);
        [g(Gamma).prime(), g(Zeta)]
    };
    long.extend(primed_chain_back(a));
    long.extend([g(Delta), g(Epsilon), g(Delta).prime()]);
    assemble(long, short, a, n as u32, 6, ConstructionParams::new(id, a, i, 0))
}

/// `{6, n}` with `n = 4a + 7 + i` even, `a ≥ 1`.
pub fn build_c4_3(a: u32, i: i32) -> Result<GeneratorSet, ConstructionError> {
    check_i(i)?;
    if a < 1 {
        return Err(bad("C4_3 needs a >= 1; use the a = 0 variant for {6, 8}"));
    }
    Ok(c4_3(a, i, ConstructionId::C4_3))
}

/// The `a = 0`, `i = 1` variant: type `{6, 8}` on ten points.
pub fn build_c4_3_a0() -> Result<GeneratorSet, ConstructionError> {
    Ok(c4_3(0, 1, ConstructionId::C4_3A0))
}

/// `{8, n}` with `n = 4a + 7 + i ≥ 8` even, `a ≥ 0`.
pub fn build_c4_5(a: u32, i: i32) -> Result<GeneratorSet, ConstructionError> {
    check_i(i)?;
    let n = (4 * a + 7) as i32 + i;
    if n < 8 {
        return Err(bad(format!("C4_5 needs n >= 8, got n = {n}")));
    }
    let mut long = numbered_chain(a);
    let short = if i == -1 {
        long.extend([g(Alpha), g(Gamma), g(Epsilon)]);
        [g(Alpha).prime(), g(Beta)]
    } else {
        long.extend([g(Alpha), g(Beta), g(Gamma), g(Gamma).prime(), g(Epsilon)]);
        [g(Alpha).prime(), g(Eta)]
    };
    long.extend(primed_chain_back(a));
    long.extend([g(Delta), g(Zeta), g(Delta).prime()]);
    let id = if a == 0 {
        ConstructionId::C4_5A0
    } else {
        ConstructionId::C4_5
    };
    Ok(assemble(
        long,
        short,
        a,
        n as u32,
        8,
        ConstructionParams::new(id, a, i, 0),
    ))
}

/// `{m, n}` for even `10 ≤ m ≤ n`, defined through `r`.
///
/// `n = m + 4a + i` with `i ∈ {0, 2}`; when `m = n ≡ 0 (mod 4)` a separate
/// small diagram is used.
pub fn build_c4_7(m: u32, n: u32) -> Result<GeneratorSet, ConstructionError> {
    if m < 10 || !m.is_multiple_of(2) || !n.is_multiple_of(2) || n < m {
        return Err(bad(format!("C4_7 needs even 10 <= m <= n, got {{{m},{n}}}")));
    }
    let (a, i) = ((n - m) / 4, (n - m) % 4);
    let mut d = Diagram::new();
    let cycle: Vec<Label> = (1..=m).map(num).collect();
    if m == n && m.is_multiple_of(4) {
        d.add(vec![cycle, vec![num(1).prime(), g(Alpha), g(Beta), g(Gamma)]]);
        d.add(vec![
            pair(num(1)),
            vec![num(2), num(3)],
            vec![num(4), num(5)],
            vec![num(6), num(8)],
        ]);
    } else {
        let alpha = |j: u32| Label::sub(Alpha, j);
        let beta = |j: u32| Label::sub(Beta, j);
        let mut r = vec![cycle, vec![num(1).prime(), alpha(1)]];
        for j in 1..=a {
            r.push(vec![alpha(j).prime(), beta(j)]);
            r.push(vec![beta(j).prime(), alpha(j + 1)]);
        }
        if i == 2 {
            r.push(vec![num(m - 1).prime(), g(Gamma)]);
            r.push(vec![num(m).prime(), g(Delta)]);
        }
        let mut t = vec![
            pair(num(1)),
            vec![num(2), num(3)],
            vec![num(4), num(5)],
            vec![num(6), num(8)],
            pair(num(m - 1)),
            pair(num(m)),
        ];
        for j in 1..=a {
            t.push(pair(alpha(j)));
            t.push(pair(beta(j)));
        }
        d.add(r);
        d.add(t);
    }
    let (labels, perms) = d.finish();
    let [r, t]: [_; 2] = perms.try_into().expect("two permutations recorded");
    Ok(GeneratorSet::from_rotation_r(
        labels,
        r,
        t,
        MapType::new(m, n),
        ConstructionParams::new(ConstructionId::C4_7, a, i as i32, 0),
    ))
}
