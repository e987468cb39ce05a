use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::{
    common_degree, find_jordan_witness, group_order, is_primitive, is_transitive, GroupError, JordanWitness, Word,
};
use crate::perm::{Parity, Permutation};

pub fn factorial(k: usize) -> BigUint {
    (2..=k).fold(BigUint::from(1u32), |acc, i| acc * BigUint::from(i))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "degree", rename_all = "snake_case")]
pub enum GroupVerdict {
    Alternating(usize),
    Symmetric(usize),
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupClassification {
    pub verdict: GroupVerdict,
    /// Exact order; `None` only for `Other` beyond the degree cap.
    pub order: Option<BigUint>,
    pub evidence: Option<JordanWitness>,
    pub primitive: bool,
    pub transitive: bool,
}

impl GroupClassification {
    pub fn is_alternating(&self) -> bool {
        matches!(self.verdict, GroupVerdict::Alternating(_))
    }
}

/// Classifies `⟨gens⟩`.
///
/// A transitive primitive group containing a single cycle with at least
/// three fixed points contains `A_k`; it is `A_k` exactly when every
/// generator is even. Without such a witness the exact order decides, which
/// requires the degree to be within `degree_cap`.
///
/// Witness words are evaluated with `gens[0]` as `s` and `gens[1]` as `t`;
/// every generator is also tried as a witness on its own.
pub fn classify(gens: &[Permutation], pool: &[Word], degree_cap: usize) -> Result<GroupClassification, GroupError> {
    let k = common_degree(gens)?;
    let transitive = is_transitive(gens)?;
    let primitive = transitive && is_primitive(gens)?.is_primitive();
    let all_even = gens.iter().all(|g| g.parity() == Parity::Even);

    let evidence = if primitive { find_witness(gens, pool) } else { None };

    if let Some(witness) = evidence {
        let (verdict, order) = if all_even {
            (GroupVerdict::Alternating(k), factorial(k) / BigUint::from(2u32))
        } else {
            (GroupVerdict::Symmetric(k), factorial(k))
        };
        return Ok(GroupClassification {
            verdict,
            order: Some(order),
            evidence: Some(witness),
            primitive,
            transitive,
        });
    }

    if k > degree_cap {
        return Ok(GroupClassification {
            verdict: GroupVerdict::Other,
            order: None,
            evidence: None,
            primitive,
            transitive,
        });
    }
    let order = group_order(gens, degree_cap)?;
    let full = factorial(k);
    let verdict = if k >= 2 && order == full {
        GroupVerdict::Symmetric(k)
    } else if k >= 3 && order == &full / BigUint::from(2u32) {
        GroupVerdict::Alternating(k)
    } else {
        GroupVerdict::Other
    };
    Ok(GroupClassification {
        verdict,
        order: Some(order),
        evidence: None,
        primitive,
        transitive,
    })
}

fn find_witness(gens: &[Permutation], pool: &[Word]) -> Option<JordanWitness> {
    if let [s, t] = gens {
        if let Some(w) = find_jordan_witness(s, t, pool) {
            return Some(w);
        }
    }
    gens.iter()
        .find_map(|g| JordanWitness::from_element(Word::rotation_power(super::Rotation::S, 1), g.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::default_word_pool;

    fn perm(cycles: &[&[usize]], k: usize) -> Permutation {
        Permutation::from_cycles(cycles, k).unwrap()
    }

    #[test]
    fn psl27_is_other() {
        let s = perm(&[&[0, 1, 2], &[3, 4, 5]], 7);
        let t = perm(&[&[0, 3], &[5, 6]], 7);
        let c = classify(&[s, t], &default_word_pool(), 64).unwrap();
        assert_eq!(c.verdict, GroupVerdict::Other);
        assert_eq!(c.order, Some(BigUint::from(168u32)));
        assert!(c.transitive && c.primitive);
    }

    #[test]
    fn transposition_degree_two_is_symmetric() {
        let c = classify(&[perm(&[&[0, 1]], 2)], &default_word_pool(), 64).unwrap();
        assert_eq!(c.verdict, GroupVerdict::Symmetric(2));
        assert_eq!(c.order, Some(BigUint::from(2u32)));
    }

    #[test]
    fn odd_generator_with_witness_is_symmetric() {
        let s = perm(&[&[0, 1, 2, 3, 4, 5, 6, 7]], 8);
        let t = perm(&[&[0, 1]], 8);
        let c = classify(&[s, t], &default_word_pool(), 64).unwrap();
        assert_eq!(c.verdict, GroupVerdict::Symmetric(8));
        assert_eq!(c.order, Some(factorial(8)));
    }

    #[test]
    fn imprimitive_is_other() {
        let c = classify(&[perm(&[&[0, 1, 2, 3]], 4)], &default_word_pool(), 64).unwrap();
        assert_eq!(c.verdict, GroupVerdict::Other);
        assert!(!c.primitive);
        assert_eq!(c.order, Some(BigUint::from(4u32)));
    }

    #[test]
    fn beyond_cap_without_witness_is_unknown() {
        let s = perm(&[&[0, 1, 2, 3, 4]], 5);
        let c = classify(&[s], &[], 4).unwrap();
        assert_eq!(c.verdict, GroupVerdict::Other);
        assert_eq!(c.order, None);
    }
}
