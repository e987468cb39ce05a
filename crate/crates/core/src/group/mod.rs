//! What group does a set of permutations generate?
//!
//! Transitivity and primitivity are decided directly from the generators,
//! exact orders come from a stabilizer chain, and alternating/symmetric
//! recognition uses single-cycle witnesses with at least three fixed points.

mod blocks;
mod cayley;
mod classify;
mod schreier;
mod witness;

pub use blocks::{is_primitive, minimal_block_system_containing, BlockSystem, Primitivity};
pub use cayley::{enumerate_group, CayleyError};
pub use classify::{classify, factorial, GroupClassification, GroupVerdict};
pub use schreier::{group_order, StabilizerChain};
pub use witness::{default_word_pool, find_jordan_witness, JordanWitness, Rotation, Word};

use thiserror::Error;

use crate::perm::Permutation;

/// Degree above which exact-order computations are refused by default.
pub const DEFAULT_DEGREE_CAP: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("generators have different degrees ({left} vs {right})")]
    DegreeMismatch { left: usize, right: usize },
    #[error("the generators do not act transitively")]
    NotTransitive,
    #[error("degree {degree} exceeds the configured cap {cap}")]
    DegreeTooLarge { degree: usize, cap: usize },
    #[error("no generators given")]
    NoGenerators,
}

/// Common degree of `gens`.
pub(crate) fn common_degree(gens: &[Permutation]) -> Result<usize, GroupError> {
    let first = gens.first().ok_or(GroupError::NoGenerators)?;
    for g in gens {
        if g.degree() != first.degree() {
            return Err(GroupError::DegreeMismatch {
                left: first.degree(),
                right: g.degree(),
            });
        }
    }
    Ok(first.degree())
}

/// Orbits of `⟨gens⟩`, each sorted, ordered by smallest point.
pub fn orbits(gens: &[Permutation]) -> Result<Vec<Vec<usize>>, GroupError> {
    let k = common_degree(gens)?;
    let mut orbit_of = vec![usize::MAX; k];
    let mut result = Vec::new();
    for start in 0..k {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        let id = result.len();
        orbit_of[start] = id;
        let mut orbit = vec![start];
        let mut head = 0;
        while head < orbit.len() {
            let x = orbit[head];
            head += 1;
            for g in gens {
                let y = g.image(x);
                if orbit_of[y] == usize::MAX {
                    orbit_of[y] = id;
                    orbit.push(y);
                }
            }
        }
        orbit.sort_unstable();
        result.push(orbit);
    }
    Ok(result)
}

pub fn is_transitive(gens: &[Permutation]) -> Result<bool, GroupError> {
    Ok(orbits(gens)?.len() <= 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_has_singleton_orbits() {
        let o = orbits(&[Permutation::identity(3)]).unwrap();
        assert_eq!(o, vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn transposition_orbits() {
        let g = Permutation::from_cycles(&[vec![0, 1]], 4).unwrap();
        assert_eq!(orbits(&[g]).unwrap(), vec![vec![0, 1], vec![2], vec![3]]);
    }

    #[test]
    fn orbit_errors() {
        assert_eq!(orbits(&[]), Err(GroupError::NoGenerators));
        let err = orbits(&[Permutation::identity(2), Permutation::identity(3)]);
        assert_eq!(err, Err(GroupError::DegreeMismatch { left: 2, right: 3 }));
    }
}
