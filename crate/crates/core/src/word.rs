//! Signed letters and freely reduced words over a finite alphabet.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

/// A generator index with an exponent of `±1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Letter {
    pub gen: usize,
    pub sign: Sign,
}

impl Letter {
    pub fn pos(gen: usize) -> Self {
        Letter {
            gen,
            sign: Sign::Pos,
        }
    }

    pub fn neg(gen: usize) -> Self {
        Letter {
            gen,
            sign: Sign::Neg,
        }
    }

    pub fn inverse(self) -> Self {
        Letter {
            gen: self.gen,
            sign: self.sign.flip(),
        }
    }

    pub fn with_gen(self, gen: usize) -> Self {
        Letter {
            gen,
            sign: self.sign,
        }
    }
}

/// A freely reduced word in the free group on `x_0, x_1, ...`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct FreeWord {
    letters: Vec<Letter>,
}

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord::default()
    }

    pub fn generator(gen: usize) -> Self {
        FreeWord {
            letters: vec![Letter::pos(gen)],
        }
    }

    /// Reduces an arbitrary letter sequence.
    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut w = FreeWord::identity();
        for l in letters {
            w.push(l);
        }
        w
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    fn push(&mut self, l: Letter) {
        if self.letters.last() == Some(&l.inverse()) {
            self.letters.pop();
        } else {
            self.letters.push(l);
        }
    }

    pub fn inverse(&self) -> Self {
        FreeWord {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Reduced product of the given words, left to right.
    pub fn product<'a>(words: impl IntoIterator<Item = &'a FreeWord>) -> Self {
        let mut out = FreeWord::identity();
        for w in words {
            for &l in &w.letters {
                out.push(l);
            }
        }
        out
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            match l.sign {
                Sign::Pos => write!(f, "x{}", l.gen)?,
                Sign::Neg => write!(f, "x{}^-1", l.gen)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn letter() -> impl Strategy<Value = Letter> {
        (0usize..3, any::<bool>())
            .prop_map(|(g, s)| if s { Letter::pos(g) } else { Letter::neg(g) })
    }

    fn is_reduced(w: &FreeWord) -> bool {
        w.letters().windows(2).all(|p| p[0] != p[1].inverse())
    }

    #[test]
    fn cancellation() {
        let w = FreeWord::from_letters([
            Letter::pos(0),
            Letter::pos(1),
            Letter::neg(1),
            Letter::neg(0),
        ]);
        assert!(w.is_empty());
        let x = FreeWord::from_letters([Letter::pos(0), Letter::pos(1), Letter::neg(0)]);
        assert_eq!(x.to_string(), "x0 x1 x0^-1");
    }

    proptest! {
        #[test]
        fn reduction_is_canonical(a in prop::collection::vec(letter(), 0..20),
                                  b in prop::collection::vec(letter(), 0..20)) {
            let wa = FreeWord::from_letters(a.clone());
            let wb = FreeWord::from_letters(b.clone());
            prop_assert!(is_reduced(&wa));
            let joined = FreeWord::from_letters(a.into_iter().chain(b));
            prop_assert_eq!(FreeWord::product([&wa, &wb]), joined);
            prop_assert!(FreeWord::product([&wa, &wa.inverse()]).is_empty());
        }
    }
}
