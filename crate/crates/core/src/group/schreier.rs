use std::collections::HashSet;

use num_bigint::BigUint;

use super::{common_degree, GroupError};
use crate::perm::Permutation;

/// One level of a stabilizer chain: the group fixing all earlier base points,
/// its generators, and a transversal for the orbit of this level's base point.
#[derive(Debug, Clone)]
struct Level {
    base: usize,
    gens: Vec<Permutation>,
    orbit: Vec<usize>,
    /// `transversal[b]` maps the base point to `b`.
    transversal: Vec<Option<Permutation>>,
    /// (orbit position, generator index) pairs already sifted.
    tested: HashSet<(usize, usize)>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        let mut transversal = vec![None; degree];
        transversal[base] = Some(Permutation::identity(degree));
        Level {
            base,
            gens: Vec::new(),
            orbit: vec![base],
            transversal,
            tested: HashSet::new(),
        }
    }

    /// Adds a generator and extends the orbit. Existing transversal elements
    /// are kept, so previously tested Schreier generators stay valid.
    fn add_generator(&mut self, g: Permutation) {
        self.gens.push(g);
        let mut head = 0;
        while head < self.orbit.len() {
            let b = self.orbit[head];
            head += 1;
            for g in &self.gens {
                let c = g.image(b);
                if self.transversal[c].is_none() {
                    let u = self.transversal[b]
                        .as_ref()
                        .expect("orbit point has a transversal")
                        .then(g);
                    self.transversal[c] = Some(u);
                    self.orbit.push(c);
                }
            }
        }
    }
}

/// A base and strong generating set computed by deterministic Schreier–Sims.
///
/// New base points are always the smallest point moved by the element that
/// forces the extension, so the chain is reproducible.
#[derive(Debug, Clone)]
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabilizerChain {
    pub fn new(gens: &[Permutation]) -> Result<Self, GroupError> {
        let degree = common_degree(gens)?;
        let mut chain = StabilizerChain {
            degree,
            levels: Vec::new(),
        };
        for g in gens.iter().filter(|g| !g.is_identity()) {
            let (residue, depth) = chain.strip(g, 0);
            if !residue.is_identity() {
                chain.insert(residue, 0, depth);
            }
        }
        chain.complete();
        Ok(chain)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::from(1u32), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.strip(g, 0).0.is_identity()
    }

    /// Sifts `g` through the levels starting at `from`. Returns the residue
    /// and the level at which sifting stopped.
    fn strip(&self, g: &Permutation, from: usize) -> (Permutation, usize) {
        let mut h = g.clone();
        for (idx, level) in self.levels.iter().enumerate().skip(from) {
            let b = h.image(level.base);
            match &level.transversal[b] {
                Some(u) => h = h.then(&u.inverse()),
                None => return (h, idx),
            }
        }
        (h, self.levels.len())
    }

    /// Adds `g` (which fixes the base points of levels `< first`) as a
    /// generator to levels `first..=last`, extending the base if needed.
    fn insert(&mut self, g: Permutation, first: usize, last: usize) {
        if last == self.levels.len() {
            let base = g.support()[0];
            self.levels.push(Level::new(base, self.degree));
        }
        for level in &mut self.levels[first..=last] {
            level.add_generator(g.clone());
        }
    }

    fn complete(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        while i >= 0 {
            let idx = i as usize;
            match self.untested_failure(idx) {
                Some((residue, depth)) => {
                    self.insert(residue, idx + 1, depth);
                    i = depth as isize;
                }
                None => i -= 1,
            }
        }
    }

    /// First Schreier generator at `idx` that does not sift through the
    /// levels below it.
    fn untested_failure(&mut self, idx: usize) -> Option<(Permutation, usize)> {
        let mut pos = 0;
        while pos < self.levels[idx].orbit.len() {
            let mut gi = 0;
            while gi < self.levels[idx].gens.len() {
                if self.levels[idx].tested.insert((pos, gi)) {
                    let level = &self.levels[idx];
                    let b = level.orbit[pos];
                    let g = &level.gens[gi];
                    let u_b = level.transversal[b].as_ref().expect("orbit point");
                    let u_bg = level.transversal[g.image(b)].as_ref().expect("orbit closed");
                    let schreier = u_b.then(g).then(&u_bg.inverse());
                    let (residue, depth) = self.strip(&schreier, idx + 1);
                    if !residue.is_identity() {
                        return Some((residue, depth));
                    }
                }
                gi += 1;
            }
            pos += 1;
        }
        None
    }
}

/// Exact order of `⟨gens⟩`, refusing degrees above `cap`.
pub fn group_order(gens: &[Permutation], cap: usize) -> Result<BigUint, GroupError> {
    let degree = common_degree(gens)?;
    if degree > cap {
        return Err(GroupError::DegreeTooLarge { degree, cap });
    }
    Ok(StabilizerChain::new(gens)?.order())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::factorial;

    fn perm(cycles: &[&[usize]], k: usize) -> Permutation {
        Permutation::from_cycles(cycles, k).unwrap()
    }

    #[test]
    fn cyclic_order() {
        let c = perm(&[&[0, 1, 2, 3, 4]], 5);
        assert_eq!(group_order(&[c], 64).unwrap(), BigUint::from(5u32));
    }

    #[test]
    fn trivial_group() {
        assert_eq!(
            group_order(&[Permutation::identity(4)], 64).unwrap(),
            BigUint::from(1u32)
        );
    }

    #[test]
    fn symmetric_from_transposition_and_cycle() {
        for k in 2..=12 {
            let cycle: Vec<usize> = (0..k).collect();
            let gens = [perm(&[&[0, 1]], k), perm(&[&cycle], k)];
            assert_eq!(group_order(&gens, 64).unwrap(), factorial(k), "S_{k}");
        }
    }

    #[test]
    fn alternating_from_three_cycles() {
        for k in 3..=30 {
            let gens: Vec<Permutation> = (0..k - 2).map(|i| perm(&[&[i, i + 1, i + 2]], k)).collect();
            assert_eq!(
                group_order(&gens, 64).unwrap(),
                factorial(k) / BigUint::from(2u32),
                "A_{k}"
            );
        }
    }

    #[test]
    fn large_alternating_degree_64() {
        let k = 64;
        let cycle: Vec<usize> = (0..k - 1).collect();
        let gens = [perm(&[&cycle], k), perm(&[&[k - 3, k - 2, k - 1]], k)];
        assert_eq!(group_order(&gens, 64).unwrap(), factorial(k) / BigUint::from(2u32));
    }

    #[test]
    fn degree_cap_is_enforced() {
        let err = group_order(&[Permutation::identity(65)], 64);
        assert_eq!(err, Err(GroupError::DegreeTooLarge { degree: 65, cap: 64 }));
    }

    #[test]
    fn membership() {
        let gens = [perm(&[&[0, 1, 2, 3]], 4)];
        let chain = StabilizerChain::new(&gens).unwrap();
        assert!(chain.contains(&perm(&[&[0, 2], &[1, 3]], 4)));
        assert!(!chain.contains(&perm(&[&[0, 1]], 4)));
        assert_eq!(chain.base(), vec![0]);
    }
}
