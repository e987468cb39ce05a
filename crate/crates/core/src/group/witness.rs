use std::fmt;

use serde::{Deserialize, Serialize};

use crate::perm::Permutation;

/// Which rotation a word is built from: `s`, or `r = (st)^-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rotation {
    S,
    R,
}

impl Rotation {
    pub fn swapped(self) -> Rotation {
        match self {
            Rotation::S => Rotation::R,
            Rotation::R => Rotation::S,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Rotation::S => "s",
            Rotation::R => "r",
        }
    }
}

/// A word of the shape `(x^e t)^f` (or `(x^e)^f` without the involution),
/// where `x` is `s` or `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Word {
    pub rotation: Rotation,
    pub exponent: i64,
    pub with_t: bool,
    pub power: u32,
}

impl Word {
    pub const fn new(rotation: Rotation, exponent: i64, power: u32) -> Self {
        Word {
            rotation,
            exponent,
            with_t: true,
            power,
        }
    }

    /// A bare power of the rotation, no involution.
    pub const fn rotation_power(rotation: Rotation, exponent: i64) -> Self {
        Word {
            rotation,
            exponent,
            with_t: false,
            power: 1,
        }
    }

    pub fn with_rotation(self, rotation: Rotation) -> Self {
        Word { rotation, ..self }
    }

    pub fn evaluate(&self, s: &Permutation, t: &Permutation) -> Permutation {
        let x = match self.rotation {
            Rotation::S => s.clone(),
            Rotation::R => s.then(t).inverse(),
        };
        let mut inner = x.pow(self.exponent);
        if self.with_t {
            inner = inner.then(t);
        }
        inner.pow(self.power as i64)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let x = self.rotation.symbol();
        let mut inner = if self.exponent == 1 {
            x.to_string()
        } else {
            format!("{x}^{}", self.exponent)
        };
        if self.with_t {
            inner.push_str(" t");
        }
        if self.power == 1 {
            f.write_str(&inner)
        } else {
            write!(f, "({inner})^{}", self.power)
        }
    }
}

/// A group element that is a single cycle fixing at least three points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JordanWitness {
    pub word: Word,
    pub element: Permutation,
    pub cycle_length: usize,
    pub fixed_count: usize,
    pub prime_length: bool,
}

impl JordanWitness {
    /// Accepts `element` if it is one cycle with `≥ 3` fixed points.
    pub fn from_element(word: Word, element: Permutation) -> Option<Self> {
        let decomposition = element.cycle_decomposition();
        if decomposition.cycles.len() != 1 || decomposition.fixed_points.len() < 3 {
            return None;
        }
        let cycle_length = decomposition.cycles[0].len();
        Some(JordanWitness {
            word,
            element,
            cycle_length,
            fixed_count: decomposition.fixed_points.len(),
            prime_length: is_prime(cycle_length),
        })
    }
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// `(x^e t)^f` for `e ∈ 1..=5`, `f ∈ 1..=12`, first over `s` then over `r`.
pub fn default_word_pool() -> Vec<Word> {
    let mut pool = Vec::with_capacity(120);
    for rotation in [Rotation::S, Rotation::R] {
        for exponent in 1..=5 {
            for power in 1..=12 {
                pool.push(Word::new(rotation, exponent, power));
            }
        }
    }
    pool
}

/// First word in `pool` whose value is a Jordan witness.
pub fn find_jordan_witness(s: &Permutation, t: &Permutation, pool: &[Word]) -> Option<JordanWitness> {
    pool.iter()
        .find_map(|word| JordanWitness::from_element(*word, word.evaluate(s, t)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_display() {
        assert_eq!(Word::new(Rotation::S, 3, 2).to_string(), "(s^3 t)^2");
        assert_eq!(Word::new(Rotation::S, 2, 1).to_string(), "s^2 t");
        assert_eq!(Word::new(Rotation::R, 1, 5).to_string(), "(r t)^5");
        assert_eq!(Word::rotation_power(Rotation::S, 1).to_string(), "s");
    }

    #[test]
    fn r_is_inverse_of_st() {
        let s = Permutation::from_cycles(&[vec![0, 1, 2, 3]], 5).unwrap();
        let t = Permutation::from_cycles(&[vec![3, 4]], 5).unwrap();
        let r = Word::rotation_power(Rotation::R, 1).evaluate(&s, &t);
        assert!(r.then(&s).then(&t).is_identity());
    }

    #[test]
    fn cyclic_group_has_no_witness() {
        let s = Permutation::from_cycles(&[vec![0, 1, 2, 3, 4]], 5).unwrap();
        let t = Permutation::identity(5);
        assert!(find_jordan_witness(&s, &t, &default_word_pool()).is_none());
    }

    #[test]
    fn primality() {
        let primes: Vec<usize> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }
}
