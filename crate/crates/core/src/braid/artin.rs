//! The Artin action of `Br_{n+1}` on the free group `F(x_0, ..., x_n)`.
//!
//! Generator `k` acts by `x_k ↦ x_k x_{k+1} x_k^{-1}`, `x_{k+1} ↦ x_k`. A
//! braid is stored as the tuple of images of the free generators; the
//! action is faithful, so two braids are equal iff their tuples agree.
//!
//! Exact images can grow exponentially in the word length. Next to them we
//! keep a fingerprint: the same images pushed through two fixed random
//! representations `F → SL_2(F_p)`. The fingerprint is a function of the
//! braid, so differing fingerprints prove inequality.

use crate::word::{FreeWord, Sign};

use super::BraidWord;

/// Images of `x_0, ..., x_n` under the automorphism of `β`, freely reduced.
pub fn artin_act(beta: &BraidWord) -> Vec<FreeWord> {
    artin_act_bounded(beta, usize::MAX).expect("unbounded budget")
}

/// Same as [`artin_act`], giving up once the images hold more than `budget`
/// letters in total.
pub fn artin_act_bounded(beta: &BraidWord, budget: usize) -> Option<Vec<FreeWord>> {
    let mut images: Vec<FreeWord> = (0..=beta.level()).map(FreeWord::generator).collect();
    let mut total = images.len();
    for l in beta.letters() {
        let k = l.gen;
        let (a, b) = (&images[k], &images[k + 1]);
        let (new_k, new_k1) = match l.sign {
            Sign::Pos => (FreeWord::product([a, b, &a.inverse()]), a.clone()),
            Sign::Neg => (b.clone(), FreeWord::product([&b.inverse(), a, b])),
        };
        total = total + new_k.len() + new_k1.len() - a.len() - b.len();
        images[k] = new_k;
        images[k + 1] = new_k1;
        if total > budget {
            return None;
        }
    }
    Some(images)
}

const P: u64 = (1 << 61) - 1;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn addmod(a: u64, b: u64) -> u64 {
    (a + b) % P
}

fn powmod(mut base: u64, mut exp: u64) -> u64 {
    let mut acc = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base);
        }
        base = mulmod(base, base);
        exp >>= 1;
    }
    acc
}

/// Row-major 2x2 matrix of determinant one over `F_p`.
type Mat = [u64; 4];

fn matmul(x: &Mat, y: &Mat) -> Mat {
    [
        addmod(mulmod(x[0], y[0]), mulmod(x[1], y[2])),
        addmod(mulmod(x[0], y[1]), mulmod(x[1], y[3])),
        addmod(mulmod(x[2], y[0]), mulmod(x[3], y[2])),
        addmod(mulmod(x[2], y[1]), mulmod(x[3], y[3])),
    ]
}

fn matinv(x: &Mat) -> Mat {
    [x[3], (P - x[1]) % P, (P - x[2]) % P, x[0]]
}

fn splitmix(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

const REPS: usize = 2;

/// Fixed pseudo-random `SL_2(F_p)` image of the free generator `x_gen`.
fn generator_matrix(rep: usize, gen: usize) -> Mat {
    let mut state = 0x5eed_0000_0000_0000 ^ ((rep as u64) << 32) ^ gen as u64;
    let mut draw = || splitmix(&mut state) % P;
    let a = loop {
        let a = draw();
        if a != 0 {
            break a;
        }
    };
    let b = draw();
    let c = draw();
    let d = mulmod(addmod(1, mulmod(b, c)), powmod(a, P - 2));
    [a, b, c, d]
}

/// The Artin images of a braid evaluated in two random matrix
/// representations of the free group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ArtinFingerprint {
    images: Vec<[Mat; REPS]>,
}

impl ArtinFingerprint {
    pub fn of(beta: &BraidWord) -> Self {
        let mut images: Vec<[Mat; REPS]> = (0..=beta.level())
            .map(|j| std::array::from_fn(|r| generator_matrix(r, j)))
            .collect();
        for l in beta.letters() {
            let k = l.gen;
            for r in 0..REPS {
                let a = images[k][r];
                let b = images[k + 1][r];
                let (new_k, new_k1) = match l.sign {
                    Sign::Pos => (matmul(&matmul(&a, &b), &matinv(&a)), a),
                    Sign::Neg => (b, matmul(&matmul(&matinv(&b), &a), &b)),
                };
                images[k][r] = new_k;
                images[k + 1][r] = new_k1;
            }
        }
        ArtinFingerprint { images }
    }

    /// A 64-bit digest, stable across runs and platforms.
    pub fn digest(&self) -> u64 {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for entry in self.images.iter().flatten().flatten() {
            for byte in entry.to_le_bytes() {
                h ^= byte as u64;
                h = h.wrapping_mul(0x0100_0000_01b3);
            }
        }
        h
    }
}
