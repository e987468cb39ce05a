//! Finite permutations on the points `0..k`.
//!
//! Composition is a right action: `p.compose(&q)` applies `p` first and then
//! `q`, so the image of `x` is `q(p(x))`. This matches the postfix point
//! notation `x^{pq}` used when reasoning about permutation diagrams, and every
//! other module relies on it.
//!
//! Human-facing cycle notation is 1-based: `(1,2,3)(4,5)`, with `()` for the
//! identity.

use std::fmt;
use std::ops::{BitXor, Mul};

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("point {point} is out of range for degree {degree}")]
    OutOfRange { point: usize, degree: usize },
    #[error("point {0} appears more than once")]
    RepeatedPoint(usize),
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("cannot parse cycle notation: {0}")]
    Parse(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    Even,
    Odd,
}

impl BitXor for Parity {
    type Output = Parity;

    fn bitxor(self, rhs: Parity) -> Parity {
        if self == rhs {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Even => f.write_str("even"),
            Parity::Odd => f.write_str("odd"),
        }
    }
}

/// A bijection on `{0, …, k-1}` stored as its image table.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

/// Canonical cycle form: each cycle starts at its smallest point, cycles are
/// sorted by that point, and fixed points are listed separately.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleDecomposition {
    pub cycles: Vec<Vec<usize>>,
    pub fixed_points: Vec<usize>,
}

impl CycleDecomposition {
    pub fn degree(&self) -> usize {
        self.fixed_points.len() + self.cycles.iter().map(Vec::len).sum::<usize>()
    }

    /// Lengths of the non-trivial cycles, ascending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lengths: Vec<usize> = self.cycles.iter().map(Vec::len).collect();
        lengths.sort_unstable();
        lengths
    }

    pub fn to_permutation(&self) -> Permutation {
        Permutation::from_cycles(&self.cycles, self.degree())
            .expect("a canonical decomposition always describes a permutation")
    }
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from its image table, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        for &y in &images {
            if y >= degree {
                return Err(PermError::OutOfRange { point: y, degree });
            }
            if std::mem::replace(&mut seen[y], true) {
                return Err(PermError::RepeatedPoint(y));
            }
        }
        Ok(Permutation {
            images: images.into_iter().map(|y| y as u32).collect(),
        })
    }

    /// Product of disjoint cycles; points not mentioned are fixed.
    pub fn from_cycles<C: AsRef<[usize]>>(cycles: &[C], degree: usize) -> Result<Self, PermError> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            let cycle = cycle.as_ref();
            for &x in cycle {
                if x >= degree {
                    return Err(PermError::OutOfRange { point: x, degree });
                }
                if std::mem::replace(&mut used[x], true) {
                    return Err(PermError::RepeatedPoint(x));
                }
            }
            for (idx, &x) in cycle.iter().enumerate() {
                images[x] = cycle[(idx + 1) % cycle.len()] as u32;
            }
        }
        Ok(Permutation { images })
    }

    /// Parses 1-based cycle notation such as `(1,2,3)(4,5)`.
    ///
    /// With `degree = None` the degree is the largest point mentioned.
    pub fn parse(text: &str, degree: Option<usize>) -> Result<Self, PermError> {
        let cycles = parse_cycles(text)?;
        let max_point = cycles.iter().flatten().map(|&x| x + 1).max().unwrap_or(0);
        let degree = degree.unwrap_or(max_point);
        Self::from_cycles(&cycles, degree)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn image(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.images.iter().map(|&y| y as usize)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x as u32 == y)
    }

    /// Apply `self` first, then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.then(other))
    }

    /// Unchecked form of [`Permutation::compose`]; panics on a degree mismatch.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch in composition");
        Permutation {
            images: self.images.iter().map(|&y| other.images[y as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.degree()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y as usize] = x as u32;
        }
        Permutation { images }
    }

    /// `e`-fold product; negative exponents go through the inverse.
    pub fn pow(&self, e: i64) -> Permutation {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut exp = e.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        let mut sq = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.then(&sq);
            }
            sq = sq.then(&sq);
            exp >>= 1;
        }
        acc
    }

    /// `conj^-1 · self · conj`: relabels every point `x` as `conj(x)`.
    pub fn conjugate_by(&self, conj: &Permutation) -> Permutation {
        conj.inverse().then(self).then(conj)
    }

    pub fn cycle_decomposition(&self) -> CycleDecomposition {
        let k = self.degree();
        let mut seen = vec![false; k];
        let mut cycles = Vec::new();
        let mut fixed_points = Vec::new();
        for start in 0..k {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.image(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.image(x);
            }
            if cycle.len() == 1 {
                fixed_points.push(start);
            } else {
                cycles.push(cycle);
            }
        }
        CycleDecomposition { cycles, fixed_points }
    }

    /// Lengths of the non-trivial cycles, ascending.
    pub fn cycle_type(&self) -> Vec<usize> {
        self.cycle_decomposition().cycle_type()
    }

    pub fn parity(&self) -> Parity {
        let decomposition = self.cycle_decomposition();
        let transpositions: usize = decomposition.cycles.iter().map(|c| c.len() - 1).sum();
        if transpositions.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Least common multiple of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycle_decomposition()
            .cycles
            .iter()
            .fold(1u64, |acc, c| acc.lcm(&(c.len() as u64)))
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        self.images
            .iter()
            .enumerate()
            .filter(|&(x, &y)| x as u32 == y)
            .map(|(x, _)| x)
            .collect()
    }

    pub fn fixes(&self, point: usize) -> bool {
        self.image(point) == point
    }

    /// Points moved by the permutation, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.images
            .iter()
            .enumerate()
            .filter(|&(x, &y)| x as u32 != y)
            .map(|(x, _)| x)
            .collect()
    }

    /// 1-based cycle notation; `()` for the identity.
    pub fn to_cycle_string(&self) -> String {
        self.to_string()
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    /// Same as [`Permutation::then`].
    fn mul(self, rhs: &Permutation) -> Permutation {
        self.then(rhs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let decomposition = self.cycle_decomposition();
        if decomposition.cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in &decomposition.cycles {
            f.write_str("(")?;
            for (idx, x) in cycle.iter().enumerate() {
                if idx > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", x + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}

/// Parses 1-based cycle notation into 0-based cycles.
pub fn parse_cycles(text: &str) -> Result<Vec<Vec<usize>>, PermError> {
    let mut cycles = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let inner_start = rest
            .strip_prefix('(')
            .ok_or_else(|| PermError::Parse(format!("expected '(' at {rest:?}")))?;
        let close = inner_start
            .find(')')
            .ok_or_else(|| PermError::Parse("unclosed cycle".into()))?;
        let body = inner_start[..close].trim();
        if !body.is_empty() {
            let cycle = body
                .split(',')
                .map(|tok| {
                    let value: usize = tok
                        .trim()
                        .parse()
                        .map_err(|_| PermError::Parse(format!("bad point {tok:?}")))?;
                    value
                        .checked_sub(1)
                        .ok_or_else(|| PermError::Parse("points are 1-based".into()))
                })
                .collect::<Result<Vec<_>, _>>()?;
            if cycle.len() > 1 {
                cycles.push(cycle);
            }
        }
        rest = inner_start[close + 1..].trim_start();
    }
    Ok(cycles)
}
