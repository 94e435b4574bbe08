//! Seeded generators for test inputs.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::braid::BraidWord;
use crate::csg::SimplicialSection;
use crate::groupoid::{GroupoidArrow, NerveSimplex};
use crate::symm::Perm;
use crate::word::Letter;

pub type SuiteRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SuiteRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_perm(rng: &mut SuiteRng, level: usize) -> Perm {
    let mut images: Vec<usize> = (0..=level).collect();
    images.shuffle(rng);
    Perm::new(images).expect("a shuffle is a bijection")
}

/// A word of uniform length in `0..=max_len`, letters uniform over
/// generator and sign.
pub fn random_braid(rng: &mut SuiteRng, level: usize, max_len: usize) -> BraidWord {
    if level == 0 {
        return BraidWord::identity(0);
    }
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len)
        .map(|_| {
            let gen = rng.gen_range(0..level);
            if rng.gen_bool(0.5) {
                Letter::pos(gen)
            } else {
                Letter::neg(gen)
            }
        })
        .collect();
    BraidWord::new(level, letters).expect("generators in range")
}

/// An instance that can be sampled, and enumerated when finite.
pub trait Sample: SimplicialSection + 'static {
    fn random(rng: &mut SuiteRng, level: usize, max_len: usize) -> Self;
    /// Every element at `level`, or `None` for infinite groups.
    fn enumerate(level: usize) -> Option<Vec<Self>>;

    fn is_finite() -> bool {
        Self::enumerate(0).is_some()
    }
}

impl Sample for Perm {
    fn random(rng: &mut SuiteRng, level: usize, _max_len: usize) -> Self {
        random_perm(rng, level)
    }

    fn enumerate(level: usize) -> Option<Vec<Self>> {
        Some(Perm::all(level).collect())
    }
}

impl Sample for BraidWord {
    fn random(rng: &mut SuiteRng, level: usize, max_len: usize) -> Self {
        random_braid(rng, level, max_len)
    }

    fn enumerate(_level: usize) -> Option<Vec<Self>> {
        None
    }
}

pub fn random_arrow<G: Sample>(
    rng: &mut SuiteRng,
    level: usize,
    max_len: usize,
) -> GroupoidArrow<G> {
    let source = random_perm(rng, level);
    GroupoidArrow::new(source, G::random(rng, level, max_len)).expect("levels agree")
}

/// A nerve simplex of `Γ_level` with a random start and chain.
pub fn random_simplex<G: Sample>(
    rng: &mut SuiteRng,
    level: usize,
    dimension: usize,
    max_len: usize,
) -> NerveSimplex<G> {
    let start = random_perm(rng, level);
    let chain = (0..dimension)
        .map(|_| G::random(rng, level, max_len))
        .collect();
    NerveSimplex::new(start, chain).expect("levels agree")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_generators_repeat() {
        let a: Vec<BraidWord> = {
            let mut r = rng(7);
            (0..20).map(|_| random_braid(&mut r, 4, 12)).collect()
        };
        let b: Vec<BraidWord> = {
            let mut r = rng(7);
            (0..20).map(|_| random_braid(&mut r, 4, 12)).collect()
        };
        assert_eq!(a, b);
        assert!(a.iter().all(|w| w.len() <= 12 && w.level() == 4));
        let mut r = rng(1);
        for _ in 0..50 {
            assert_eq!(random_perm(&mut r, 5).level(), 5);
        }
        assert!(Perm::is_finite());
        assert!(!BraidWord::is_finite());
    }
}
