//! The braid instance `B_n = Br_{n+1}`.
//!
//! Letters are `σ_k^{±1}` with `0 <= k < n`, crossing positions `k` and
//! `k+1`; a positive letter carries the strand at `k` over the strand at
//! `k+1`. Words are read left to right and multiplication is concatenation.
//! The strand labelled `i` is the one sitting at position `i` at the head
//! of the word, which makes `π(β)(i)` its position at the tail.

mod artin;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::csg::{CsgElement, SimplicialSection};
use crate::error::{check_index, check_levels, CsgError, Result};
use crate::symm::Perm;
use crate::word::{Letter, Sign};

pub use artin::{artin_act, artin_act_bounded, ArtinFingerprint};

/// Total letter count above which exact Artin comparison gives way to the
/// fingerprint.
pub const ARTIN_BUDGET: usize = 1 << 18;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "BraidRepr", into = "BraidRepr")]
pub struct BraidWord {
    level: usize,
    letters: Vec<Letter>,
}

#[derive(Serialize, Deserialize)]
struct BraidRepr {
    level: usize,
    word: String,
}

impl TryFrom<BraidRepr> for BraidWord {
    type Error = CsgError;

    fn try_from(r: BraidRepr) -> Result<Self> {
        BraidWord::parse(&r.word, r.level)
    }
}

impl From<BraidWord> for BraidRepr {
    fn from(b: BraidWord) -> Self {
        BraidRepr {
            level: b.level,
            word: b.word_string(),
        }
    }
}

impl BraidWord {
    pub fn new(level: usize, letters: Vec<Letter>) -> Result<Self> {
        if let Some(bad) = letters.iter().find(|l| l.gen >= level) {
            return Err(CsgError::InvalidGenerator {
                index: bad.gen,
                strands: level + 1,
            });
        }
        Ok(BraidWord { level, letters })
    }

    pub fn identity(level: usize) -> Self {
        BraidWord {
            level,
            letters: Vec::new(),
        }
    }

    pub fn generator(level: usize, k: usize) -> Result<Self> {
        BraidWord::new(level, vec![Letter::pos(k)])
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn strands(&self) -> usize {
        self.level + 1
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

    /// Parses `s1 s2^-1 s1` (1-indexed generators); `e` or blank is the
    /// empty word.
    pub fn parse(text: &str, level: usize) -> Result<Self> {
        let mut letters = Vec::new();
        let mut offset = 0;
        for token in text.split_whitespace() {
            let position = text[offset..].find(token).map_or(offset, |p| p + offset);
            offset = position + token.len();
            if token == "e" {
                continue;
            }
            let bad = |message: &str| CsgError::Parse {
                position,
                message: format!("{message} in `{token}`"),
            };
            let body = token
                .strip_prefix('s')
                .ok_or_else(|| bad("expected `s<k>`"))?;
            let (digits, sign) = match body.split_once('^') {
                Some((d, "-1")) => (d, Sign::Neg),
                Some((d, "1")) => (d, Sign::Pos),
                Some(_) => return Err(bad("exponent must be 1 or -1")),
                None => (body, Sign::Pos),
            };
            let k: usize = digits.parse().map_err(|_| bad("bad generator index"))?;
            if k == 0 {
                return Err(bad("generators are numbered from 1"));
            }
            letters.push(Letter { gen: k - 1, sign });
        }
        BraidWord::new(level, letters)
    }

    /// The word alone in surface syntax, `e` when empty.
    pub fn word_string(&self) -> String {
        if self.letters.is_empty() {
            return "e".into();
        }
        self.letters
            .iter()
            .map(|l| match l.sign {
                Sign::Pos => format!("s{}", l.gen + 1),
                Sign::Neg => format!("s{}^-1", l.gen + 1),
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn concat(&self, other: &Self) -> Result<Self> {
        check_levels(self.level, other.level)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            level: self.level,
            letters,
        })
    }

    pub fn inverse(&self) -> Self {
        BraidWord {
            level: self.level,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Cancels adjacent `σ_k σ_k^{-1}` pairs. Does not change the braid.
    pub fn freely_reduced(&self) -> Self {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord {
            level: self.level,
            letters: out,
        }
    }

    pub fn permutation(&self) -> Perm {
        let mut arr: Vec<usize> = (0..=self.level).collect();
        for l in &self.letters {
            arr.swap(l.gen, l.gen + 1);
        }
        Perm::from_vec_unchecked(arr)
    }

    /// Deletes strand `i`, counted at the head of the word.
    pub fn face_braid(&self, i: usize) -> Result<Self> {
        if self.level == 0 {
            return Err(CsgError::FaceOfLevelZero);
        }
        check_index(i, self.level, self.level)?;
        let mut p = i;
        let mut letters = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            let k = l.gen;
            if k == p {
                p = k + 1;
            } else if k + 1 == p {
                p = k;
            } else if k > p {
                letters.push(l.with_gen(k - 1));
            } else {
                letters.push(l);
            }
        }
        Ok(BraidWord {
            level: self.level - 1,
            letters,
        })
    }

    /// Cables strand `i` into two parallel strands.
    pub fn degeneracy_braid(&self, i: usize) -> Result<Self> {
        check_index(i, self.level, self.level)?;
        let mut p = i;
        let mut letters = Vec::with_capacity(self.letters.len() * 2);
        for &l in &self.letters {
            let k = l.gen;
            if k == p {
                // cable at k, k+1 crosses the strand at k+2
                letters.push(l.with_gen(k + 1));
                letters.push(l.with_gen(k));
                p = k + 1;
            } else if k + 1 == p {
                // strand at k crosses the cable at k+1, k+2
                letters.push(l.with_gen(k));
                letters.push(l.with_gen(k + 1));
                p = k;
            } else if k > p {
                letters.push(l.with_gen(k + 1));
            } else {
                letters.push(l);
            }
        }
        Ok(BraidWord {
            level: self.level + 1,
            letters,
        })
    }

    pub fn s_left_braid(&self) -> Self {
        BraidWord {
            level: self.level + 1,
            letters: self.letters.iter().map(|l| l.with_gen(l.gen + 1)).collect(),
        }
    }

    pub fn s_right_braid(&self) -> Self {
        BraidWord {
            level: self.level + 1,
            letters: self.letters.clone(),
        }
    }

    pub fn fingerprint(&self) -> ArtinFingerprint {
        ArtinFingerprint::of(self)
    }

    /// Stable 64-bit hash of the braid (not of the word).
    pub fn braid_hash(&self) -> u64 {
        self.fingerprint().digest()
    }
}

/// The word problem, decided through the Artin action.
///
/// Exact comparison of free-group images is used while the images stay
/// under [`ARTIN_BUDGET`] letters; beyond that the verdict of the matrix
/// fingerprint stands.
pub fn braids_equal(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    check_levels(a.level, b.level)?;
    Ok(braids_equal_same_level(a, b))
}

fn braids_equal_same_level(a: &BraidWord, b: &BraidWord) -> bool {
    if a.letters == b.letters {
        return true;
    }
    if a.permutation() != b.permutation() {
        return false;
    }
    if a.fingerprint() != b.fingerprint() {
        return false;
    }
    let quotient = a.concat(&b.inverse()).expect("same level").freely_reduced();
    match artin_act_bounded(&quotient, ARTIN_BUDGET) {
        Some(images) => images
            .iter()
            .enumerate()
            .all(|(j, w)| w.len() == 1 && w.letters()[0] == Letter::pos(j)),
        None => true,
    }
}

/// The positive braid crossing each inversion pair of `σ` exactly once.
pub fn permutation_braid(sigma: &Perm) -> BraidWord {
    let mut arr = sigma.images().to_vec();
    let mut swaps = Vec::new();
    let mut sorted = false;
    while !sorted {
        sorted = true;
        for k in 0..arr.len().saturating_sub(1) {
            if arr[k] > arr[k + 1] {
                arr.swap(k, k + 1);
                swaps.push(k);
                sorted = false;
            }
        }
    }
    BraidWord {
        level: sigma.level(),
        letters: swaps.into_iter().rev().map(Letter::pos).collect(),
    }
}

/// Whether the permutation braid commutes with `d_i` and `s_i` at `σ`.
pub fn section_is_simplicial(sigma: &Perm, i: usize) -> Result<bool> {
    check_index(i, sigma.level(), sigma.level())?;
    let lifted = permutation_braid(sigma);
    let degen = braids_equal(
        &permutation_braid(&sigma.degeneracy(i)?),
        &lifted.degeneracy_braid(i)?,
    )?;
    if sigma.level() == 0 {
        return Ok(degen);
    }
    let face = braids_equal(&permutation_braid(&sigma.face(i)?), &lifted.face_braid(i)?)?;
    Ok(face && degen)
}

impl CsgElement for BraidWord {
    const INSTANCE: &'static str = "braid";

    fn level(&self) -> usize {
        self.level
    }

    fn one(level: usize) -> Self {
        BraidWord::identity(level)
    }

    fn mul(&self, other: &Self) -> Result<Self> {
        self.concat(other)
    }

    fn inv(&self) -> Self {
        self.inverse()
    }

    fn face(&self, i: usize) -> Result<Self> {
        self.face_braid(i)
    }

    fn degeneracy(&self, i: usize) -> Result<Self> {
        self.degeneracy_braid(i)
    }

    fn underlying_perm(&self) -> Perm {
        self.permutation()
    }

    fn s_left(&self) -> Self {
        self.s_left_braid()
    }

    fn s_right(&self) -> Self {
        self.s_right_braid()
    }

    fn group_eq(&self, other: &Self) -> bool {
        self.level == other.level && braids_equal_same_level(self, other)
    }

    fn parse_at(text: &str, level: usize) -> Result<Self> {
        if text.contains('@') {
            let b: BraidWord = text.parse()?;
            check_levels(b.level, level)?;
            Ok(b)
        } else {
            BraidWord::parse(text, level)
        }
    }
}

impl SimplicialSection for BraidWord {
    fn section(perm: &Perm) -> Self {
        permutation_braid(perm)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.word_string(), self.level)
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `word@level`, e.g. `s1 s2^-1@2`.
impl FromStr for BraidWord {
    type Err = CsgError;

    fn from_str(s: &str) -> Result<Self> {
        let (word, level) = s.rsplit_once('@').ok_or(CsgError::Parse {
            position: s.len(),
            message: "expected `word@level`".into(),
        })?;
        let level = level.trim().parse().map_err(|_| CsgError::Parse {
            position: word.len() + 1,
            message: format!("bad level `{}`", level.trim()),
        })?;
        BraidWord::parse(word, level)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::csg::{check_crossed_identities, check_simplicial_identities};

    fn b(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        let w = b("s1 s2^-1 s1@2");
        assert_eq!(w.len(), 3);
        assert_eq!(w.letters()[1], Letter::neg(1));
        assert_eq!(w.to_string(), "s1 s2^-1 s1@2");
        assert_eq!(b("e@3"), BraidWord::identity(3));
        assert_eq!(b("@0"), BraidWord::identity(0));
        assert!("s3@2".parse::<BraidWord>().is_err());
        assert!("s0@2".parse::<BraidWord>().is_err());
        assert!("s1^2@2".parse::<BraidWord>().is_err());
        assert!("s1".parse::<BraidWord>().is_err());
        let err = BraidWord::parse("s1 t2", 2).unwrap_err();
        assert!(matches!(err, CsgError::Parse { position: 3, .. }));
    }

    #[test]
    fn serde_round_trip() {
        let w = b("s2 s1^-1@3");
        let json = serde_json::to_string(&w).unwrap();
        assert_eq!(json, r#"{"level":3,"word":"s2 s1^-1"}"#);
        assert_eq!(serde_json::from_str::<BraidWord>(&json).unwrap(), w);
    }

    #[test]
    fn projection_examples() {
        assert_eq!(b("s1 s2@2").permutation().images(), &[1, 2, 0]);
        assert_eq!(b("s1@1").permutation().images(), &[1, 0]);
        assert!(b("e@4").permutation().is_identity());
    }

    #[test]
    fn equality_examples() {
        assert!(braids_equal(&b("s1 s2 s1@2"), &b("s2 s1 s2@2")).unwrap());
        assert!(braids_equal(&b("s1 s3@3"), &b("s3 s1@3")).unwrap());
        assert!(!braids_equal(&b("s1@1"), &b("s1^-1@1")).unwrap());
        assert!(braids_equal(&b("s1 s1^-1@1"), &b("e@1")).unwrap());
        assert!(!braids_equal(&b("s1 s2@2"), &b("s2 s1@2")).unwrap());
        // same permutation, different braids
        assert!(!braids_equal(&b("s1 s1@1"), &b("e@1")).unwrap());
        assert!(braids_equal(&b("s1@1"), &b("s1@2")).is_err());
    }

    #[test]
    fn face_examples() {
        assert_eq!(b("s1@1").face_braid(0).unwrap(), b("e@0"));
        assert_eq!(b("e@3").face_braid(2).unwrap(), b("e@2"));
        assert_eq!(b("s1 s2@2").face_braid(2).unwrap(), b("s1@1"));
        assert!(b("e@0").face_braid(0).is_err());
        assert!(b("e@2").face_braid(3).is_err());
    }

    #[test]
    fn degeneracy_examples() {
        assert_eq!(b("e@2").degeneracy_braid(1).unwrap(), b("e@3"));
        let d = b("s1@1").degeneracy_braid(0).unwrap();
        assert_eq!(d, b("s2 s1@2"));
        assert_eq!(d.permutation().images(), &[2, 0, 1]);
        assert_eq!(b("s1@1").degeneracy_braid(1).unwrap(), b("s1 s2@2"));
    }

    #[test]
    fn end_insertions() {
        assert_eq!(b("s1@1").s_right_braid(), b("s1@2"));
        assert_eq!(b("s1@1").s_left_braid(), b("s2@2"));
        assert_eq!(b("e@0").s_left_braid(), b("e@1"));
    }

    /// Each cabling letter admits two orders; only one satisfies the
    /// projection and crossed identities on all of level 1 and 2.
    #[test]
    fn cabling_order_is_forced() {
        let swapped = |w: &BraidWord, i: usize| -> BraidWord {
            let d = w.degeneracy_braid(i).unwrap();
            let mut letters = d.letters().to_vec();
            // reverse every two-letter block produced by a crossing
            let mut out = Vec::new();
            let mut p = i;
            let mut idx = 0;
            for l in w.letters() {
                let k = l.gen;
                if k == p || k + 1 == p {
                    out.push(letters[idx + 1]);
                    out.push(letters[idx]);
                    idx += 2;
                    p = if k == p { k + 1 } else { k };
                } else {
                    out.push(letters[idx]);
                    idx += 1;
                }
            }
            letters = out;
            BraidWord::new(d.level(), letters).unwrap()
        };
        let mut alternative_fails = false;
        for level in 1..=2 {
            for sigma in Perm::all(level) {
                let w = permutation_braid(&sigma);
                for i in 0..=level {
                    let ours = w.degeneracy_braid(i).unwrap();
                    assert_eq!(ours.permutation(), sigma.degeneracy(i).unwrap());
                    if swapped(&w, i).permutation() != sigma.degeneracy(i).unwrap() {
                        alternative_fails = true;
                    }
                }
            }
        }
        assert!(alternative_fails);
    }

    #[test]
    fn permutation_braid_examples() {
        assert!(permutation_braid(&Perm::identity(3)).is_empty());
        assert_eq!(permutation_braid(&"[1,0]".parse().unwrap()), b("s1@1"));
        let rev = permutation_braid(&"[2,1,0]".parse().unwrap());
        assert!(braids_equal(&rev, &b("s1 s2 s1@2")).unwrap());
        assert_eq!(rev.permutation().images(), &[2, 1, 0]);
    }

    #[test]
    fn permutation_braid_is_minimal_and_positive() {
        for n in 0..=4 {
            for sigma in Perm::all(n) {
                let w = permutation_braid(&sigma);
                assert_eq!(w.permutation(), sigma);
                assert_eq!(w.len(), sigma.inversions());
                assert!(w.letters().iter().all(|l| l.sign == Sign::Pos));
            }
        }
    }

    #[test]
    fn section_is_simplicial_small_levels() {
        for n in 0..=3 {
            for sigma in Perm::all(n) {
                for i in 0..=n {
                    assert!(section_is_simplicial(&sigma, i).unwrap(), "{sigma} at {i}");
                }
            }
        }
    }

    #[test]
    fn axioms_on_generators() {
        for n in 1..=3 {
            for k in 0..n {
                for sign in [Letter::pos(k), Letter::neg(k)] {
                    let g = BraidWord::new(n, vec![sign]).unwrap();
                    assert!(check_simplicial_identities(&g).passed());
                    for other in 0..n {
                        let h = BraidWord::generator(n, other).unwrap();
                        for i in 0..=n {
                            let report = check_crossed_identities(&g, &h, i);
                            assert!(report.passed(), "{:?}", report.violations);
                        }
                    }
                }
            }
        }
    }

    /// Faces and cabling respect the braid relations, so they descend to
    /// the braid group.
    #[test]
    fn operators_respect_relations() {
        for n in 2..=4 {
            for k in 0..n - 1 {
                let lhs =
                    BraidWord::new(n, vec![Letter::pos(k), Letter::pos(k + 1), Letter::pos(k)])
                        .unwrap();
                let rhs = BraidWord::new(
                    n,
                    vec![Letter::pos(k + 1), Letter::pos(k), Letter::pos(k + 1)],
                )
                .unwrap();
                for i in 0..=n {
                    assert!(lhs
                        .face_braid(i)
                        .unwrap()
                        .group_eq(&rhs.face_braid(i).unwrap()));
                    assert!(lhs
                        .degeneracy_braid(i)
                        .unwrap()
                        .group_eq(&rhs.degeneracy_braid(i).unwrap()));
                }
            }
        }
    }

    #[test]
    fn hash_depends_on_braid_only() {
        assert_eq!(b("s1 s2 s1@2").braid_hash(), b("s2 s1 s2@2").braid_hash());
        assert_ne!(b("s1@2").braid_hash(), b("s2@2").braid_hash());
    }
}
