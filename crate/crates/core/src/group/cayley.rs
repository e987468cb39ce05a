use std::collections::HashSet;

use thiserror::Error;

use super::{common_degree, GroupError};
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CayleyError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("group has more than {limit} elements")]
    TooLarge { limit: usize },
}

/// Every element of `⟨gens⟩`, found by breadth-first search of the right
/// Cayley graph. Elements are listed in discovery order, identity first.
pub fn enumerate_group(gens: &[Permutation], limit: usize) -> Result<Vec<Permutation>, CayleyError> {
    let degree = common_degree(gens)?;
    let identity = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::new();
    seen.insert(identity.clone());
    let mut elements = vec![identity];
    let mut head = 0;
    while head < elements.len() {
        let current = elements[head].clone();
        head += 1;
        for g in gens {
            let next = current.then(g);
            if !seen.contains(&next) {
                if elements.len() >= limit {
                    return Err(CayleyError::TooLarge { limit });
                }
                seen.insert(next.clone());
                elements.push(next);
            }
        }
    }
    Ok(elements)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_groups() {
        let c5 = Permutation::from_cycles(&[vec![0, 1, 2, 3, 4]], 5).unwrap();
        assert_eq!(enumerate_group(&[c5], 100).unwrap().len(), 5);
        let s3 = [
            Permutation::from_cycles(&[vec![0, 1]], 3).unwrap(),
            Permutation::from_cycles(&[vec![0, 1, 2]], 3).unwrap(),
        ];
        assert_eq!(enumerate_group(&s3, 100).unwrap().len(), 6);
    }

    #[test]
    fn limit_is_enforced() {
        let c5 = Permutation::from_cycles(&[vec![0, 1, 2, 3, 4]], 5).unwrap();
        assert_eq!(enumerate_group(&[c5], 4), Err(CayleyError::TooLarge { limit: 4 }));
    }
}
