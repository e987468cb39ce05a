use serde::{Deserialize, Serialize};

use super::{common_degree, is_transitive, GroupError};
use crate::perm::Permutation;

/// A partition of the points into blocks, indexed by block id.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockSystem {
    pub block_of: Vec<usize>,
    pub num_blocks: usize,
}

impl BlockSystem {
    /// Blocks as sorted point lists, ordered by block id.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.num_blocks];
        for (x, &b) in self.block_of.iter().enumerate() {
            blocks[b].push(x);
        }
        blocks
    }

    pub fn block_size(&self) -> usize {
        self.block_of.len() / self.num_blocks.max(1)
    }

    pub fn is_trivial(&self) -> bool {
        self.num_blocks <= 1 || self.num_blocks == self.block_of.len()
    }

    /// Equal block sizes and every generator maps each block onto a block.
    pub fn is_preserved_by(&self, gens: &[Permutation]) -> bool {
        let blocks = self.blocks();
        let size = blocks.first().map_or(0, Vec::len);
        if blocks.iter().any(|b| b.len() != size) {
            return false;
        }
        gens.iter().all(|g| {
            blocks.iter().all(|block| {
                let target = self.block_of[g.image(block[0])];
                block.iter().all(|&x| self.block_of[g.image(x)] == target)
            })
        })
    }

    fn from_union_find(parent: &mut UnionFind) -> Self {
        let k = parent.len();
        let mut id_of_root = vec![usize::MAX; k];
        let mut num_blocks = 0;
        let block_of = (0..k)
            .map(|x| {
                let root = parent.find(x);
                if id_of_root[root] == usize::MAX {
                    id_of_root[root] = num_blocks;
                    num_blocks += 1;
                }
                id_of_root[root]
            })
            .collect();
        BlockSystem { block_of, num_blocks }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Primitivity {
    Primitive,
    Imprimitive(BlockSystem),
}

impl Primitivity {
    pub fn is_primitive(&self) -> bool {
        matches!(self, Primitivity::Primitive)
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(k: usize) -> Self {
        UnionFind {
            parent: (0..k).collect(),
        }
    }

    fn len(&self) -> usize {
        self.parent.len()
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns the surviving root if the classes were distinct.
    fn union(&mut self, a: usize, b: usize) -> Option<(usize, usize)> {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return None;
        }
        let (keep, drop) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[drop] = keep;
        Some((keep, drop))
    }
}

/// The finest block system in which `a` and `b` share a block.
///
/// Merges classes under the generator action until the partition is stable;
/// the pairs queue only ever holds class representatives that were merged.
pub fn minimal_block_system_containing(gens: &[Permutation], a: usize, b: usize) -> Result<BlockSystem, GroupError> {
    let k = common_degree(gens)?;
    let mut classes = UnionFind::new(k);
    let mut queue = Vec::new();
    if let Some(pair) = classes.union(a, b) {
        queue.push(pair);
    }
    while let Some((x, y)) = queue.pop() {
        for g in gens {
            if let Some(pair) = classes.union(g.image(x), g.image(y)) {
                queue.push(pair);
            }
        }
    }
    Ok(BlockSystem::from_union_find(&mut classes))
}

/// Decides primitivity of a transitive group.
///
/// For every `δ ≠ 0` the finest system with `{0, δ}` in one block is
/// computed; the group is primitive iff all of them are the one-block
/// system. Otherwise the non-trivial system with the smallest blocks is
/// returned.
pub fn is_primitive(gens: &[Permutation]) -> Result<Primitivity, GroupError> {
    let k = common_degree(gens)?;
    if !is_transitive(gens)? {
        return Err(GroupError::NotTransitive);
    }
    let mut best: Option<BlockSystem> = None;
    for delta in 1..k {
        let system = minimal_block_system_containing(gens, 0, delta)?;
        if system.num_blocks > 1 && best.as_ref().is_none_or(|b| system.block_size() < b.block_size()) {
            best = Some(system);
        }
    }
    Ok(match best {
        None => Primitivity::Primitive,
        Some(system) => Primitivity::Imprimitive(system),
    })
}
