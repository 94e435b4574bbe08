//! Horn filling for `G_* → N_*` along a simplicial section.
//!
//! Every element splits uniquely as `g = p · s` with `p` pure and `s` in the
//! image of the section. Pure elements form a simplicial group, where horns
//! are filled by the classical degeneracy sweep; a lift of a horn over a
//! base simplex is then the kernel filler times the section of the base.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::csg::{CheckReport, CsgElement, SimplicialSection};
use crate::error::{check_index, CsgError, Result};
use crate::symm::Perm;

#[derive(Debug, Clone)]
pub struct Decomposition<G> {
    pub pure: G,
    pub section: G,
}

impl<G: CsgElement> Decomposition<G> {
    pub fn reconstruct(&self) -> G {
        self.pure.mul(&self.section).expect("levels agree")
    }
}

pub fn decompose<G: SimplicialSection>(g: &G) -> Decomposition<G> {
    let section = G::section(&g.underlying_perm());
    let pure = g.mul(&section.inv()).expect("levels agree");
    Decomposition { pure, section }
}

/// A horn `Λ^n_k` in `G_*` over a base simplex in `N_n`.
#[derive(Debug, Clone)]
pub struct Horn<G> {
    pub level: usize,
    pub missing: usize,
    pub faces: BTreeMap<usize, G>,
    pub base: Perm,
}

impl<G: CsgElement> Horn<G> {
    /// Faces of `g` except the `k`-th, over the projection of `g`.
    pub fn from_filler(g: &G, k: usize) -> Result<Self> {
        let n = g.level();
        if n == 0 {
            return Err(CsgError::FaceOfLevelZero);
        }
        check_index(k, n, n)?;
        let faces = (0..=n)
            .filter(|&r| r != k)
            .map(|r| Ok((r, g.face(r)?)))
            .collect::<Result<_>>()?;
        Ok(Horn {
            level: n,
            missing: k,
            faces,
            base: g.underlying_perm(),
        })
    }

    /// Index ranges, face levels, pairwise compatibility and projection.
    pub fn validate(&self) -> Result<()> {
        let (n, k) = (self.level, self.missing);
        let bad = |msg: String| Err(CsgError::IncompatibleHorn(msg));
        if n == 0 {
            return bad("horns need level at least 1".into());
        }
        if k > n || self.base.level() != n {
            return bad(format!(
                "missing index {k} or base {} does not fit level {n}",
                self.base
            ));
        }
        let expected: Vec<usize> = (0..=n).filter(|&r| r != k).collect();
        if self.faces.keys().copied().collect::<Vec<_>>() != expected {
            return bad(format!("expected faces {expected:?}"));
        }
        for (&r, y) in &self.faces {
            if y.level() != n - 1 {
                return bad(format!(
                    "face {r} has level {}, expected {}",
                    y.level(),
                    n - 1
                ));
            }
            if y.underlying_perm() != self.base.face(r)? {
                return bad(format!("face {r} does not project onto d_{r} of the base"));
            }
        }
        for (&r, yr) in &self.faces {
            for (&t, yt) in self.faces.range(r + 1..) {
                if !yt.face(r)?.group_eq(&yr.face(t - 1)?) {
                    return bad(format!("d_{r} y_{t} != d_{} y_{r}", t - 1));
                }
            }
        }
        Ok(())
    }
}

/// Fills a horn of pure elements inside the kernel simplicial group.
pub fn moore_fill<G: CsgElement>(faces: &BTreeMap<usize, G>, n: usize, k: usize) -> Result<G> {
    if n == 0 {
        return Err(CsgError::FaceOfLevelZero);
    }
    check_index(k, n, n)?;
    for (&r, p) in faces {
        if !p.is_pure() {
            return Err(CsgError::IncompatibleHorn(format!(
                "face {r} = {p} is not pure"
            )));
        }
    }
    let face = |r: usize| {
        faces
            .get(&r)
            .ok_or_else(|| CsgError::IncompatibleHorn(format!("face {r} missing")))
    };
    let mut w = G::one(n);
    for r in 0..k {
        let z = w.face(r)?.inv().mul(face(r)?)?;
        w = w.mul(&z.degeneracy(r)?)?;
    }
    for r in (k + 1..=n).rev() {
        let z = w.face(r)?.inv().mul(face(r)?)?;
        w = w.mul(&z.degeneracy(r - 1)?)?;
    }
    for (&r, p) in faces {
        if r != k && !w.face(r)?.group_eq(p) {
            return Err(CsgError::FillerFailed(format!(
                "d_{r} of the filler is not {p}"
            )));
        }
    }
    if !w.is_pure() {
        return Err(CsgError::FillerFailed("filler is not pure".into()));
    }
    Ok(w)
}

/// `Φ = P · section(base)` with `d_r Φ = y_r` for `r ≠ k` and `π(Φ) = base`.
pub fn lift_horn<G: SimplicialSection>(horn: &Horn<G>) -> Result<G> {
    horn.validate()?;
    let s = G::section(&horn.base);
    let mut kernel = BTreeMap::new();
    for (&r, y) in &horn.faces {
        let p = y.mul(&s.face(r)?.inv())?;
        if !p.is_pure() {
            return Err(CsgError::IncompatibleHorn(format!(
                "kernel part of face {r} is not pure; the section does not commute with d_{r}"
            )));
        }
        kernel.insert(r, p);
    }
    let phi = moore_fill(&kernel, horn.level, horn.missing)?.mul(&s)?;
    for (&r, y) in &horn.faces {
        if !phi.face(r)?.group_eq(y) {
            return Err(CsgError::FillerFailed(format!(
                "d_{r} of the lift is not {y}"
            )));
        }
    }
    if phi.underlying_perm() != horn.base {
        return Err(CsgError::FillerFailed(
            "lift does not project onto the base".into(),
        ));
    }
    Ok(phi)
}

/// Decomposition round trip, purity of kernel parts, and a lift of every
/// horn of `g`.
pub fn check_kan<G: SimplicialSection>(g: &G) -> CheckReport {
    let mut report = CheckReport::default();
    let inputs = || format!("g={g}");
    let d = decompose(g);
    report.expect(d.reconstruct().group_eq(g), "p · s = g", inputs);
    report.expect(d.pure.is_pure(), "p is pure", inputs);
    report.expect(
        d.section.group_eq(&G::section(&g.underlying_perm())),
        "s = section(π g)",
        inputs,
    );
    let n = g.level();
    if n == 0 {
        return report;
    }
    for k in 0..=n {
        let inputs = || format!("g={g}, k={k}");
        let Some(horn) = report.expect_ok(Horn::from_filler(g, k), "horn of g", inputs) else {
            continue;
        };
        report.expect_ok(
            lift_horn(&horn),
            "lift exists and restricts to the horn",
            inputs,
        );
        let pure_faces: BTreeMap<usize, G> = horn
            .faces
            .keys()
            .map(|&r| (r, d.pure.face(r).expect("valid index")))
            .collect();
        report.expect_ok(moore_fill(&pure_faces, n, k), "kernel horn fills", inputs);
    }
    report
}

/// One face of a horn file: index and the element in surface syntax.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceSpec {
    pub index: usize,
    pub word: String,
}

/// Horn file format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HornSpec {
    pub level: usize,
    pub k: usize,
    pub faces: Vec<FaceSpec>,
    pub base: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub instance: Option<String>,
}

impl HornSpec {
    pub fn to_horn<G: CsgElement>(&self) -> Result<Horn<G>> {
        if self.level == 0 {
            return Err(CsgError::IncompatibleHorn(
                "horns need level at least 1".into(),
            ));
        }
        let mut faces = BTreeMap::new();
        for f in &self.faces {
            if faces
                .insert(f.index, G::parse_at(&f.word, self.level - 1)?)
                .is_some()
            {
                return Err(CsgError::IncompatibleHorn(format!(
                    "face {} given twice",
                    f.index
                )));
            }
        }
        Ok(Horn {
            level: self.level,
            missing: self.k,
            faces,
            base: Perm::parse_at(&self.base, self.level)?,
        })
    }

    pub fn from_horn<G: CsgElement>(horn: &Horn<G>, word: impl Fn(&G) -> String) -> Self {
        HornSpec {
            level: horn.level,
            k: horn.missing,
            faces: horn
                .faces
                .iter()
                .map(|(&index, y)| FaceSpec {
                    index,
                    word: word(y),
                })
                .collect(),
            base: horn.base.to_string(),
            instance: Some(G::INSTANCE.into()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;

    fn b(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    #[test]
    fn decomposition_examples() {
        let pure = b("s1 s1@1");
        let d = decompose(&pure);
        assert!(d.pure.group_eq(&pure));
        assert!(d.section.is_empty());
        let sec = b("s1 s2@2");
        let d = decompose(&sec);
        assert!(d.pure.group_eq(&BraidWord::identity(2)));
        assert_eq!(d.section, sec);
        let g = b("s1 s1 s1@1");
        let d = decompose(&g);
        assert!(d.pure.group_eq(&b("s1 s1@1")));
        assert_eq!(d.section, b("s1@1"));
        assert!(d.reconstruct().group_eq(&g));
    }

    #[test]
    fn trivial_fill() {
        let faces: BTreeMap<usize, BraidWord> = [0, 2, 3]
            .into_iter()
            .map(|r| (r, BraidWord::identity(2)))
            .collect();
        let w = moore_fill(&faces, 3, 1).unwrap();
        assert!(w.group_eq(&BraidWord::identity(3)));
    }

    #[test]
    fn fill_from_known_pure_element() {
        let q = b("s1 s1 s2^-1 s2^-1@2");
        assert!(q.is_pure());
        for k in 0..=2 {
            let horn = Horn::from_filler(&q, k).unwrap();
            let p = moore_fill(&horn.faces, 2, k).unwrap();
            for (&r, y) in &horn.faces {
                assert!(p.face(r).unwrap().group_eq(y));
            }
        }
    }

    #[test]
    fn lift_from_known_braid() {
        let g = b("s1 s2^-1 s1 s2@2");
        for k in 0..=2 {
            let horn = Horn::from_filler(&g, k).unwrap();
            let phi = lift_horn(&horn).unwrap();
            assert_eq!(phi.underlying_perm(), g.underlying_perm());
        }
        let identity = Horn::from_filler(&BraidWord::identity(2), 0).unwrap();
        assert!(lift_horn(&identity)
            .unwrap()
            .group_eq(&BraidWord::identity(2)));
    }

    #[test]
    fn symmetric_lift_is_the_base() {
        for sigma in Perm::all(3) {
            for k in 0..=3 {
                let horn = Horn::from_filler(&sigma, k).unwrap();
                assert_eq!(lift_horn(&horn).unwrap(), sigma);
            }
        }
    }

    #[test]
    fn incompatible_horns_are_rejected() {
        let mut horn = Horn::from_filler(&b("s1 s2@2"), 1).unwrap();
        horn.faces.insert(0, b("s1@1"));
        assert!(matches!(
            lift_horn(&horn),
            Err(CsgError::IncompatibleHorn(_))
        ));
        let mut horn = Horn::from_filler(&b("s1 s1@2"), 1).unwrap();
        // compatibility is vacuous at level 0, so this horn still fills
        horn.faces.insert(2, b("s1 s1 s1 s1@1"));
        let phi = lift_horn(&horn).unwrap();
        assert!(phi.face(2).unwrap().group_eq(&b("s1 s1 s1 s1@1")));
        let faces: BTreeMap<usize, BraidWord> = [(0, b("s1@1")), (2, b("e@1"))].into();
        assert!(moore_fill(&faces, 2, 1).is_err());
    }

    #[test]
    fn horn_spec_round_trip() {
        let horn = Horn::from_filler(&b("s1 s2^-1 s1@2"), 0).unwrap();
        let spec = HornSpec::from_horn(&horn, |y| y.word_string());
        let json = serde_json::to_string(&spec).unwrap();
        let back: HornSpec = serde_json::from_str(&json).unwrap();
        let parsed: Horn<BraidWord> = back.to_horn().unwrap();
        assert_eq!(parsed.faces, horn.faces);
        assert_eq!(parsed.base, horn.base);
        assert!(lift_horn(&parsed).is_ok());
    }
}
