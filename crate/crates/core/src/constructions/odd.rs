//! Constructions for even `m` and odd `n`.

use super::labels::{Diagram, Greek::*, Label};
use super::{bad, ConstructionError, ConstructionId, ConstructionParams, GeneratorSet, MapType};

pub(super) fn num(j: u32) -> Label {
    Label::num(j)
}

pub(super) fn g(letter: super::Greek) -> Label {
    Label::greek(letter)
}

/// `1, 2, …, 2a`.
pub(super) fn numbered_chain(a: u32) -> Vec<Label> {
    (1..=2 * a).map(num).collect()
}

/// `2a', 2a-1', …, 1'`.
pub(super) fn primed_chain_back(a: u32) -> Vec<Label> {
    (1..=2 * a).rev().map(|j| num(j).prime()).collect()
}

/// `(j, j')` for `j = 1..=2a`.
pub(super) fn numbered_matching(a: u32) -> Vec<Vec<Label>> {
    (1..=2 * a).map(|j| vec![num(j), num(j).prime()]).collect()
}

pub(super) fn pair(x: Label) -> Vec<Label> {
    vec![x, x.prime()]
}

pub(super) fn check_i(i: i32) -> Result<(), ConstructionError> {
    if i == -1 || i == 1 {
        Ok(())
    } else {
        Err(bad(format!("i must be -1 or 1, got {i}")))
    }
}

fn finish_s_t(diagram: Diagram, map_type: MapType, params: ConstructionParams) -> GeneratorSet {
    let (labels, perms) = diagram.finish();
    let [s, t]: [_; 2] = perms.try_into().expect("two permutations recorded");
    GeneratorSet::from_diagram(labels, s, t, map_type, params)
}

/// `{4, n}` with `n = 4a + 4 + i` odd; degree `n + 1`.
pub fn build_c3_1(a: u32, i: i32) -> Result<GeneratorSet, ConstructionError> {
    check_i(i)?;
    if a < 1 {
        return Err(bad("C3_1 needs a >= 1"));
    }
    let n = (4 * a + 4) as i64 + i as i64;
    let mut cycle = numbered_chain(a);
    if i == -1 {
        cycle.extend([g(Alpha), g(Alpha).prime(), g(Beta)]);
        cycle.extend(primed_chain_back(a));
    } else {
        cycle.extend([g(Alpha), g(Beta), g(Gamma), g(Alpha).prime()]);
        cycle.extend(primed_chain_back(a));
        cycle.push(g(Delta));
    }
    let mut d = Diagram::new();
    d.add(vec![cycle]);
    let mut t = vec![pair(g(Alpha)), pair(g(Beta))];
    t.extend(numbered_matching(a));
    d.add(t);
    Ok(finish_s_t(
        d,
        MapType::new(4, n as u32),
        ConstructionParams::new(ConstructionId::C3_1, a, i, 0),
    ))
}

/// `{6, n}` with `n = 4a + 6 + i` odd; degree `n + 2` (`i = -1`) or `n + 1`.
pub fn build_c3_3(a: u32, i: i32) -> Result<GeneratorSet, ConstructionError> {
    check_i(i)?;
    if a < 1 {
        return Err(bad("C3_3 needs a >= 1"));
    }
    let n = (4 * a + 6) as i64 + i as i64;
    let mut cycle = numbered_chain(a);
    let mut t = vec![pair(g(Alpha)), pair(g(Beta))];
    if i == -1 {
        cycle.extend([g(Alpha), g(Beta), g(Gamma)]);
        cycle.extend(primed_chain_back(a));
        cycle.extend([g(Delta), g(Epsilon)]);
    } else {
        cycle.extend([
            g(Alpha),
            g(Beta),
            g(Beta).prime(),
            g(Gamma),
            g(Delta),
            g(Gamma).prime(),
            g(Alpha).prime(),
        ]);
        cycle.extend(primed_chain_back(a));
        t.extend([pair(g(Gamma)), pair(g(Delta))]);
    }
    t.extend(numbered_matching(a));
    let mut d = Diagram::new();
    d.add(vec![cycle]);
    d.add(t);
    Ok(finish_s_t(
        d,
        MapType::new(6, n as u32),
        ConstructionParams::new(ConstructionId::C3_3, a, i, 0),
    ))
}

/// `{8, n}` with `n = 4a + 6 + i` odd.
pub fn build_c3_5(a: u32, i: i32) -> Result<GeneratorSet, ConstructionError> {
    check_i(i)?;
    if a < 1 {
        return Err(bad("C3_5 needs a >= 1"));
    }
    let n = (4 * a + 6) as i64 + i as i64;
    let mut cycle = numbered_chain(a);
    if i == -1 {
        cycle.extend([g(Alpha), g(Beta), g(Gamma), g(Delta), g(Epsilon)]);
    } else {
        cycle.extend([
            g(Alpha),
            g(Alpha).prime(),
            g(Beta),
            g(Gamma),
            g(Delta),
            g(Epsilon),
            g(Zeta),
        ]);
    }
    cycle.extend(primed_chain_back(a));
    let mut t = vec![pair(g(Alpha)), pair(g(Beta))];
    t.extend(numbered_matching(a));
    let mut d = Diagram::new();
    d.add(vec![cycle]);
    d.add(t);
    Ok(finish_s_t(
        d,
        MapType::new(8, n as u32),
        ConstructionParams::new(ConstructionId::C3_5, a, i, 0),
    ))
}

/// `{m, n}` for even `m ≥ 10` and `n = m + 4a + i`, defined through `r`:
/// an `m`-cycle times an odd number of transpositions.
pub fn build_c3_7(m: u32, a: u32, i: i32) -> Result<GeneratorSet, ConstructionError> {
    check_i(i)?;
    if m < 10 || !m.is_multiple_of(2) {
        return Err(bad(format!("C3_7 needs even m >= 10, got {m}")));
    }
    let n = (m + 4 * a) as i64 + i as i64;
    let alpha = |j: u32| Label::sub(Alpha, j);
    let beta = |j: u32| Label::sub(Beta, j);

    let mut r = vec![(1..=m).map(num).collect::<Vec<_>>(), vec![num(1).prime(), alpha(1)]];
    for j in 1..=a {
        r.push(vec![alpha(j).prime(), beta(j)]);
        r.push(vec![beta(j).prime(), alpha(j + 1)]);
    }
    let mut t = vec![
        pair(num(1)),
        vec![num(2), num(3)],
        vec![num(4), num(5)],
        vec![num(6), num(7)],
        pair(num(m)),
    ];
    for j in 1..=a {
        t.push(pair(alpha(j)));
        t.push(pair(beta(j)));
    }
    if i == -1 {
        t.push(vec![num(8), num(9)]);
    } else {
        t.push(pair(alpha(a + 1)));
    }
    let mut d = Diagram::new();
    d.add(r);
    d.add(t);
    let (labels, perms) = d.finish();
    let [r, t]: [_; 2] = perms.try_into().expect("two permutations recorded");
    Ok(GeneratorSet::from_rotation_r(
        labels,
        r,
        t,
        MapType::new(m, n as u32),
        ConstructionParams::new(ConstructionId::C3_7, a, i, 0),
    ))
}

/// `s` as `ν` consecutive `n`-cycles on `1..=νn`.
fn stacked_cycles(n: u32, nu: u32) -> Vec<Vec<Label>> {
    (0..nu)
        .map(|block| (1..=n).map(|j| num(block * n + j)).collect())
        .collect()
}

/// Splits `m + 6 = νn + a` with `0 ≤ a < n`.
fn split(m: u32, n: u32) -> (u32, u32) {
    ((m + 6) / n, (m + 6) % n)
}

/// `{m, 5}` for even `m` with `m + 6 = 5ν + a`, `ν ≥ 4`; degree `5ν + a`.
pub fn build_c3_9(m: u32) -> Result<GeneratorSet, ConstructionError> {
    if !m.is_multiple_of(2) {
        return Err(bad(format!("C3_9 needs even m, got {m}")));
    }
    let (nu, a) = split(m, 5);
    if nu < 4 {
        return Err(bad(format!("C3_9 needs m + 6 >= 20, got m = {m}")));
    }
    let mut t = vec![vec![num(2), num(4)], vec![num(7), num(9)], vec![num(12), num(14)]];
    t.extend((1..=a).map(|j| pair(num(5 * nu + 1 - j))));
    t.extend((1..nu).map(|i| vec![num(5 * i), num(5 * i + 1)]));
    let mut d = Diagram::new();
    d.add(stacked_cycles(5, nu));
    d.add(t);
    Ok(finish_s_t(
        d,
        MapType::new(m, 5),
        ConstructionParams::new(ConstructionId::C3_9, a, 0, nu),
    ))
}

/// `{n + a, n}` for odd `n ≥ 7`, `1 ≤ a ≤ n - 6`, `n + a` even; degree `n + a + 2`.
pub fn build_c3_11(n: u32, a: u32) -> Result<GeneratorSet, ConstructionError> {
    if n < 7 || n.is_multiple_of(2) {
        return Err(bad(format!("C3_11 needs odd n >= 7, got {n}")));
    }
    if a < 1 || a > n - 6 || !(n + a).is_multiple_of(2) {
        return Err(bad(format!("C3_11 needs 1 <= a <= n-6 with n+a even, got a = {a}")));
    }
    let mut t = vec![vec![num(1), num(3)]];
    t.extend((4..=5 + a).map(|j| pair(num(j))));
    let mut d = Diagram::new();
    d.add(vec![(1..=n).map(num).collect()]);
    d.add(t);
    Ok(finish_s_t(
        d,
        MapType::new(n + a, n),
        ConstructionParams::new(ConstructionId::C3_11, a, 0, 0),
    ))
}

/// `{m, n}` for odd `n ≥ 11`, even `m` with `m + 6 = νn + a`, `ν ≥ 2`;
/// degree `νn + a`.
pub fn build_c3_13(n: u32, m: u32) -> Result<GeneratorSet, ConstructionError> {
    if n < 11 || n.is_multiple_of(2) {
        return Err(bad(format!("C3_13 needs odd n >= 11, got {n}")));
    }
    if !m.is_multiple_of(2) {
        return Err(bad(format!("C3_13 needs even m, got {m}")));
    }
    let (nu, a) = split(m, n);
    if nu < 2 {
        return Err(bad(format!("C3_13 needs m + 6 >= 2n, got m = {m}")));
    }
    let mut t = vec![
        vec![num(n + 2), num(n + 4)],
        vec![num(n + 5), num(n + 7)],
        vec![num(n + 8), num(n + 10)],
    ];
    t.extend((1..=a).map(|j| pair(num(j))));
    t.extend((1..nu).map(|i| vec![num(i * n), num(i * n + 1)]));
    let mut d = Diagram::new();
    d.add(stacked_cycles(n, nu));
    d.add(t);
    Ok(finish_s_t(
        d,
        MapType::new(m, n),
        ConstructionParams::new(ConstructionId::C3_13, a, 0, nu),
    ))
}

/// `{m, n}` for `n ∈ {7, 9}`, even `m` with `m + 6 = νn + a`, `ν ≥ 3`.
/// The leading transpositions are `(1,3)(4,6)`.
pub fn build_c3_15(n: u32, m: u32) -> Result<GeneratorSet, ConstructionError> {
    if n != 7 && n != 9 {
        return Err(bad(format!("C3_15 needs n in {{7, 9}}, got {n}")));
    }
    if !m.is_multiple_of(2) {
        return Err(bad(format!("C3_15 needs even m, got {m}")));
    }
    let (nu, a) = split(m, n);
    if nu < 3 {
        return Err(bad(format!("C3_15 needs m + 6 >= 3n, got m = {m}")));
    }
    let mut t = vec![vec![num(1), num(3)], vec![num(4), num(6)], vec![num(n + 2), num(n + 4)]];
    t.extend((1..nu).map(|i| vec![num(i * n), num(i * n + 1)]));
    t.extend((1..=a).map(|j| pair(num(n * nu + 1 - j))));
    let mut d = Diagram::new();
    d.add(stacked_cycles(n, nu));
    d.add(t);
    Ok(finish_s_t(
        d,
        MapType::new(m, n),
        ConstructionParams::new(ConstructionId::C3_15, a, 0, nu),
    ))
}
