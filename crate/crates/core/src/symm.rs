//! The symmetric crossed simplicial group `S_n = Bij({0, ..., n})`.
//!
//! Permutations are stored in one-line notation `[σ(0), ..., σ(n)]` and
//! compose as functions: `(g·h)(x) = g(h(x))`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::csg::CsgElement;
use crate::error::{check_index, check_levels, CsgError, Result};

/// A bijection of `{0, ..., n}`; an element of `S_n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        if images.is_empty() {
            return Err(CsgError::InvalidPerm(images));
        }
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x >= images.len() || seen[x] {
                return Err(CsgError::InvalidPerm(images));
            }
            seen[x] = true;
        }
        Ok(Perm { images })
    }

    pub(crate) fn from_vec_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Perm::new(images.clone()).is_ok(), "{images:?}");
        Perm { images }
    }

    pub fn identity(level: usize) -> Self {
        Perm {
            images: (0..=level).collect(),
        }
    }

    /// The simplicial degree `n`; the permutation acts on `n + 1` points.
    pub fn level(&self) -> usize {
        self.images.len() - 1
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// `σ^{-1}(x)`.
    pub fn preimage(&self, x: usize) -> usize {
        self.images
            .iter()
            .position(|&y| y == x)
            .expect("permutation is a bijection")
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        check_levels(self.level(), other.level())?;
        Ok(Perm {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        })
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Perm { images: inv }
    }

    /// Number of pairs `p < q` with `σ(p) > σ(q)`.
    pub fn inversions(&self) -> usize {
        let v = &self.images;
        (0..v.len())
            .flat_map(|p| (p + 1..v.len()).map(move |q| (p, q)))
            .filter(|&(p, q)| v[p] > v[q])
            .count()
    }

    /// Deletes source position `σ^{-1}(i)` and target value `i`, renumbering
    /// both gaps.
    pub fn face(&self, i: usize) -> Result<Perm> {
        let n = self.level();
        if n == 0 {
            return Err(CsgError::FaceOfLevelZero);
        }
        check_index(i, n, n)?;
        let a = self.preimage(i);
        let images = (0..n)
            .map(|j| {
                let src = if j < a { j } else { j + 1 };
                let v = self.images[src];
                if v > i {
                    v - 1
                } else {
                    v
                }
            })
            .collect();
        Ok(Perm { images })
    }

    /// Duplicates source position `σ^{-1}(i)` onto the adjacent target pair
    /// `i, i + 1`.
    pub fn degeneracy(&self, i: usize) -> Result<Perm> {
        let n = self.level();
        check_index(i, n, n)?;
        let a = self.preimage(i);
        let shift = |v: usize| if v > i { v + 1 } else { v };
        let images = (0..=n + 1)
            .map(|j| {
                if j < a {
                    shift(self.images[j])
                } else if j == a || j == a + 1 {
                    i + (j - a)
                } else {
                    shift(self.images[j - 1])
                }
            })
            .collect();
        Ok(Perm { images })
    }

    /// Adds a new fixed point `0` and shifts everything else up by one.
    pub fn s_left(&self) -> Perm {
        let images = std::iter::once(0)
            .chain(self.images.iter().map(|&x| x + 1))
            .collect();
        Perm { images }
    }

    /// Adds a new fixed point `n + 1`.
    pub fn s_right(&self) -> Perm {
        let mut images = self.images.clone();
        images.push(images.len());
        Perm { images }
    }

    /// Iterates over all of `S_n` in lexicographic order.
    pub fn all(level: usize) -> impl Iterator<Item = Perm> {
        let mut next = Some((0..=level).collect::<Vec<_>>());
        std::iter::from_fn(move || {
            let current = next.take()?;
            let mut v = current.clone();
            if next_permutation(&mut v) {
                next = Some(v);
            }
            Some(Perm { images: current })
        })
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Substitutes `τ` into the block of `σ` at value `i`: the independent
/// closed-form for partial composition on `S_*`.
pub fn block_substitute(sigma: &Perm, i: usize, tau: &Perm) -> Result<Perm> {
    let n = sigma.level();
    let m = tau.level();
    check_index(i, n, n)?;
    let a = sigma.preimage(i);
    let shift = |v: usize| if v > i { v + m } else { v };
    let images = (0..=n + m)
        .map(|p| {
            if p < a {
                shift(sigma.apply(p))
            } else if p <= a + m {
                i + tau.apply(p - a)
            } else {
                shift(sigma.apply(p - m))
            }
        })
        .collect();
    Ok(Perm { images })
}

impl CsgElement for Perm {
    const INSTANCE: &'static str = "symm";

    fn level(&self) -> usize {
        Perm::level(self)
    }

    fn one(level: usize) -> Self {
        Perm::identity(level)
    }

    fn mul(&self, other: &Self) -> Result<Self> {
        self.compose(other)
    }

    fn inv(&self) -> Self {
        self.inverse()
    }

    fn face(&self, i: usize) -> Result<Self> {
        Perm::face(self, i)
    }

    fn degeneracy(&self, i: usize) -> Result<Self> {
        Perm::degeneracy(self, i)
    }

    fn underlying_perm(&self) -> Perm {
        self.clone()
    }

    fn s_left(&self) -> Self {
        Perm::s_left(self)
    }

    fn s_right(&self) -> Self {
        Perm::s_right(self)
    }

    fn group_eq(&self, other: &Self) -> bool {
        self == other
    }

    fn parse_at(text: &str, level: usize) -> Result<Self> {
        let p: Perm = text.parse()?;
        check_levels(p.level(), level)?;
        Ok(p)
    }
}

impl TryFrom<Vec<usize>> for Perm {
    type Error = CsgError;

    fn try_from(images: Vec<usize>) -> Result<Self> {
        Perm::new(images)
    }
}

impl From<Perm> for Vec<usize> {
    fn from(p: Perm) -> Self {
        p.images
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, x) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Perm {
    type Err = CsgError;

    /// Parses the bracketed list form `[1,0,2]`.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let inner = trimmed
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| CsgError::Parse {
                position: 0,
                message: format!("expected a bracketed list, got {trimmed:?}"),
            })?;
        let mut images = Vec::new();
        let mut offset = 1;
        for part in inner.split(',') {
            let value = part.trim().parse::<usize>().map_err(|_| CsgError::Parse {
                position: offset,
                message: format!("expected a non-negative integer, got {:?}", part.trim()),
            })?;
            images.push(value);
            offset += part.len() + 1;
        }
        Perm::new(images)
    }
}

/// The case-split identities describing how faces and degeneracies of `σ`
/// move the preimages of other values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum IndexIdentity {
    /// `d_i(σ)^{-1}(j-1)` for `i < j`.
    FaceLowerInverse,
    /// `d_j(σ)^{-1}(i)` for `i < j`.
    FaceUpperInverse,
    /// `s_j(σ)^{-1}(i)` for `i < j`.
    DegeneracyUpperInverse,
    /// `s_i(σ)^{-1}(j + 1)` for `i < j`.
    DegeneracyLowerInverse,
}

impl IndexIdentity {
    pub const ALL: [IndexIdentity; 4] = [
        IndexIdentity::FaceLowerInverse,
        IndexIdentity::FaceUpperInverse,
        IndexIdentity::DegeneracyUpperInverse,
        IndexIdentity::DegeneracyLowerInverse,
    ];

    pub fn label(self) -> &'static str {
        match self {
            IndexIdentity::FaceLowerInverse => "d_i(s)^-1(j-1)",
            IndexIdentity::FaceUpperInverse => "d_j(s)^-1(i)",
            IndexIdentity::DegeneracyUpperInverse => "s_j(s)^-1(i)",
            IndexIdentity::DegeneracyLowerInverse => "s_i(s)^-1(j+1)",
        }
    }
}

/// Checks one identity at indices `i < j <= n`. Returns `Ok(false)` on a
/// violation.
pub fn index_identity_holds(item: IndexIdentity, sigma: &Perm, i: usize, j: usize) -> Result<bool> {
    let n = sigma.level();
    check_index(j, n, n)?;
    if i >= j {
        return Err(CsgError::IndexOutOfRange {
            index: i,
            level: n,
            max: j.saturating_sub(1),
        });
    }
    let si = sigma.preimage(i);
    let sj = sigma.preimage(j);
    Ok(match item {
        IndexIdentity::FaceLowerInverse => {
            let lhs = sigma.face(i)?.preimage(j - 1);
            lhs == if si < sj { sj - 1 } else { sj }
        }
        IndexIdentity::FaceUpperInverse => {
            let lhs = sigma.face(j)?.preimage(i);
            lhs == if sj < si { si - 1 } else { si }
        }
        IndexIdentity::DegeneracyUpperInverse => {
            let lhs = sigma.degeneracy(j)?.preimage(i);
            lhs == if sj < si { si + 1 } else { si }
        }
        IndexIdentity::DegeneracyLowerInverse => {
            let lhs = sigma.degeneracy(i)?.preimage(j + 1);
            lhs == if sj < si { sj } else { sj + 1 }
        }
    })
}

/// `(σ ∘_i τ)^{-1}(i + j) = σ^{-1}(i) + τ^{-1}(j)` for a given composite.
pub fn block_inverse_holds(composite: &Perm, sigma: &Perm, i: usize, tau: &Perm, j: usize) -> bool {
    composite.preimage(i + j) == sigma.preimage(i) + tau.preimage(j)
}
