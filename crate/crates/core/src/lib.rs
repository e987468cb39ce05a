//! Constructive verification of chiral orientably-regular maps whose
//! orientation-preserving automorphism group is alternating.
//!
//! A map of type `{m, n}` is presented by two permutations `s` (vertex
//! rotation, order `n`) and `t` (an involution) on `k` points, with the face
//! rotation `r = (st)^-1` of order `m`. Permutations act on the right:
//! `p.then(q)` applies `p` first.

pub mod chirality;
pub mod constructions;
pub mod group;
pub mod map_model;
pub mod perm;
pub mod verify;

pub use constructions::{GeneratorSet, HyperbolicType, MapType};
pub use perm::{Parity, PermError, Permutation};
