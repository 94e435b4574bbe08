//! The action groupoid `Γ_n = G_n // P_n`.
//!
//! Objects are permutations; an arrow `[σ, f]` runs from `σ` to `σ π(f)^{-1}`
//! and composes by `[σ f^{-1}, g] · [σ, f] = [σ, gf]`. Faces and
//! degeneracies are
//!
//! ```text
//! d_i[σ, f] = [d_i σ, d_{σ^{-1}(i)}(f^{-1})^{-1}]
//! ```
//!
//! and likewise for `s_i`. `S_n` acts freely by left multiplication on the
//! source.

use std::collections::BTreeSet;
use std::fmt;
use std::fmt::Write as _;

use serde::Serialize;

use crate::csg::{CheckReport, CsgElement, SimplicialSection};
use crate::error::{check_index, check_levels, CsgError, Result};
use crate::simplicial::{check_simplicial_laws, Simplicial};
use crate::symm::Perm;

#[derive(Clone, Debug)]
pub struct GroupoidArrow<G> {
    source: Perm,
    f: G,
}

impl<G: CsgElement> GroupoidArrow<G> {
    pub fn new(source: Perm, f: G) -> Result<Self> {
        check_levels(source.level(), f.level())?;
        Ok(GroupoidArrow { source, f })
    }

    pub fn identity(object: Perm) -> Self {
        let f = G::one(object.level());
        GroupoidArrow { source: object, f }
    }

    pub fn source(&self) -> &Perm {
        &self.source
    }

    pub fn element(&self) -> &G {
        &self.f
    }

    pub fn level(&self) -> usize {
        self.source.level()
    }

    pub fn target(&self) -> Perm {
        self.source
            .compose(&self.f.underlying_perm().inverse())
            .expect("levels agree")
    }

    pub fn inverse(&self) -> Self {
        GroupoidArrow {
            source: self.target(),
            f: self.f.inv(),
        }
    }

    /// `self ∘ a`: first `a`, then `self`.
    pub fn compose(&self, a: &Self) -> Result<Self> {
        let mid = a.target();
        if mid != self.source {
            return Err(CsgError::NotComposable {
                target: mid.to_string(),
                start: self.source.to_string(),
            });
        }
        Ok(GroupoidArrow {
            source: a.source.clone(),
            f: self.f.mul(&a.f)?,
        })
    }

    pub fn face(&self, i: usize) -> Result<Self> {
        if self.level() == 0 {
            return Err(CsgError::FaceOfLevelZero);
        }
        check_index(i, self.level(), self.level())?;
        let a = self.source.preimage(i);
        Ok(GroupoidArrow {
            source: self.source.face(i)?,
            f: self.f.inv().face(a)?.inv(),
        })
    }

    pub fn degeneracy(&self, i: usize) -> Result<Self> {
        check_index(i, self.level(), self.level())?;
        let a = self.source.preimage(i);
        Ok(GroupoidArrow {
            source: self.source.degeneracy(i)?,
            f: self.f.inv().degeneracy(a)?.inv(),
        })
    }

    /// `τ · [σ, f] = [τσ, f]`.
    pub fn act(&self, tau: &Perm) -> Result<Self> {
        Ok(GroupoidArrow {
            source: tau.compose(&self.source)?,
            f: self.f.clone(),
        })
    }

    pub fn is_automorphism(&self) -> bool {
        self.f.is_pure()
    }

    pub fn same(&self, other: &Self) -> bool {
        self.source == other.source && self.f.group_eq(&other.f)
    }
}

impl<G: SimplicialSection> GroupoidArrow<G> {
    /// An arrow `from → to`, built from the section of `to^{-1} from`.
    pub fn connecting(from: &Perm, to: &Perm) -> Result<Self> {
        let ratio = to.inverse().compose(from)?;
        GroupoidArrow::new(from.clone(), G::section(&ratio))
    }
}

impl<G: CsgElement> fmt::Display for GroupoidArrow<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.source, self.f)
    }
}

impl<G: CsgElement> Simplicial for GroupoidArrow<G> {
    fn dim(&self) -> usize {
        self.level()
    }

    fn face_op(&self, i: usize) -> Option<Self> {
        self.face(i).ok()
    }

    fn degeneracy_op(&self, i: usize) -> Option<Self> {
        self.degeneracy(i).ok()
    }

    fn same(&self, other: &Self) -> bool {
        GroupoidArrow::same(self, other)
    }

    fn describe(&self) -> String {
        self.to_string()
    }
}

/// An `m`-simplex of the nerve of `Γ_n`: a start object and `m` composable
/// arrows, the `k`-th being `[x_{k-1}, f_k]`.
#[derive(Clone, Debug)]
pub struct NerveSimplex<G> {
    start: Perm,
    chain: Vec<G>,
}

impl<G: CsgElement> NerveSimplex<G> {
    pub fn new(start: Perm, chain: Vec<G>) -> Result<Self> {
        for f in &chain {
            check_levels(start.level(), f.level())?;
        }
        Ok(NerveSimplex { start, chain })
    }

    pub fn start(&self) -> &Perm {
        &self.start
    }

    pub fn chain(&self) -> &[G] {
        &self.chain
    }

    pub fn dimension(&self) -> usize {
        self.chain.len()
    }

    /// Vertices `x_0 = σ, x_k = x_{k-1} π(f_k)^{-1}`.
    pub fn objects(&self) -> Vec<Perm> {
        let mut out = vec![self.start.clone()];
        for f in &self.chain {
            let last = out.last().expect("nonempty");
            out.push(
                last.compose(&f.underlying_perm().inverse())
                    .expect("levels agree"),
            );
        }
        out
    }

    pub fn arrows(&self) -> Vec<GroupoidArrow<G>> {
        self.objects()
            .into_iter()
            .zip(&self.chain)
            .map(|(source, f)| GroupoidArrow {
                source,
                f: f.clone(),
            })
            .collect()
    }

    pub fn face(&self, i: usize) -> Result<Self> {
        let m = self.dimension();
        if m == 0 {
            return Err(CsgError::FaceOfLevelZero);
        }
        check_index(i, m, m)?;
        let mut chain = self.chain.clone();
        let start = if i == 0 {
            let arrows = self.arrows();
            chain.remove(0);
            arrows[0].target()
        } else if i == m {
            chain.pop();
            self.start.clone()
        } else {
            let merged = chain[i].mul(&chain[i - 1])?;
            chain.splice(i - 1..=i, [merged]);
            self.start.clone()
        };
        Ok(NerveSimplex { start, chain })
    }

    pub fn degeneracy(&self, i: usize) -> Result<Self> {
        let m = self.dimension();
        check_index(i, m, m)?;
        let mut chain = self.chain.clone();
        chain.insert(i, G::one(self.start.level()));
        Ok(NerveSimplex {
            start: self.start.clone(),
            chain,
        })
    }

    pub fn act(&self, tau: &Perm) -> Result<Self> {
        Ok(NerveSimplex {
            start: tau.compose(&self.start)?,
            chain: self.chain.clone(),
        })
    }

    /// Forgets the start object: `(f_m, ..., f_1)`.
    pub fn quotient_map(&self) -> Vec<G> {
        self.chain.iter().rev().cloned().collect()
    }

    pub fn same(&self, other: &Self) -> bool {
        self.start == other.start && tuples_equal(&self.chain, &other.chain)
    }

    /// Whether both simplices lie in one `S_n`-orbit.
    pub fn same_orbit(&self, other: &Self) -> bool {
        tuples_equal(&self.quotient_map(), &other.quotient_map())
    }
}

impl<G: CsgElement> fmt::Display for NerveSimplex<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.start)?;
        for g in &self.chain {
            write!(f, " {g}")?;
        }
        Ok(())
    }
}

impl<G: CsgElement> Simplicial for NerveSimplex<G> {
    fn dim(&self) -> usize {
        self.dimension()
    }

    fn face_op(&self, i: usize) -> Option<Self> {
        self.face(i).ok()
    }

    fn degeneracy_op(&self, i: usize) -> Option<Self> {
        self.degeneracy(i).ok()
    }

    fn same(&self, other: &Self) -> bool {
        NerveSimplex::same(self, other)
    }

    fn describe(&self) -> String {
        self.to_string()
    }
}

pub fn tuples_equal<G: CsgElement>(a: &[G], b: &[G]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x.group_eq(y))
}

/// Face `d_i` on the tuple side of the quotient map: the nerve of the
/// opposite group, vertices numbered from the far end.
pub fn tuple_face<G: CsgElement>(t: &[G], i: usize) -> Result<Vec<G>> {
    let m = t.len();
    if m == 0 {
        return Err(CsgError::FaceOfLevelZero);
    }
    check_index(i, m, m)?;
    let mut out = t.to_vec();
    if i == 0 {
        out.pop();
    } else if i == m {
        out.remove(0);
    } else {
        let p = m - i - 1;
        let merged = t[p].mul(&t[p + 1])?;
        out.splice(p..=p + 1, [merged]);
    }
    Ok(out)
}

pub fn tuple_degeneracy<G: CsgElement>(t: &[G], i: usize, level: usize) -> Result<Vec<G>> {
    let m = t.len();
    check_index(i, m, m)?;
    let mut out = t.to_vec();
    out.insert(m - i, G::one(level));
    Ok(out)
}

/// Composition, identities and inverses of two composable arrows
/// `a: x → y`, `b: y → z`, and functoriality of every `d_i`, `s_i` on them.
pub fn check_groupoid_functoriality<G: CsgElement>(
    b: &GroupoidArrow<G>,
    a: &GroupoidArrow<G>,
) -> CheckReport {
    let mut report = CheckReport::default();
    let n = a.level();
    let inputs = || format!("b={b}, a={a}");
    let Some(ba) = report.expect_ok(b.compose(a), "b∘a defined", inputs) else {
        return report;
    };
    report.expect(ba.target() == b.target(), "target(b∘a) = target(b)", inputs);
    let id_src = GroupoidArrow::identity(a.source.clone());
    let id_tgt = GroupoidArrow::identity(a.target());
    report.expect(
        a.compose(&id_src).is_ok_and(|x| x.same(a)) && id_tgt.compose(a).is_ok_and(|x| x.same(a)),
        "identity arrows are units",
        inputs,
    );
    report.expect(
        a.inverse().compose(a).is_ok_and(|x| x.same(&id_src)),
        "a^-1 ∘ a = id",
        inputs,
    );
    for i in 0..=n {
        let inputs = || format!("b={b}, a={a}, i={i}");
        if n > 0 {
            let lhs = ba.face(i).ok();
            let rhs = b
                .face(i)
                .and_then(|db| a.face(i).and_then(|da| db.compose(&da)))
                .ok();
            report.expect(
                matches!((lhs, rhs), (Some(l), Some(r)) if l.same(&r)),
                "d_i(b∘a) = d_i b ∘ d_i a",
                inputs,
            );
            report.expect(
                id_src
                    .face(i)
                    .is_ok_and(|x| x.same(&GroupoidArrow::identity(a.source.face(i).unwrap()))),
                "d_i id = id",
                inputs,
            );
            report.expect(
                a.face(i)
                    .is_ok_and(|x| x.target() == a.target().face(i).unwrap()),
                "target(d_i a) = d_i target(a)",
                inputs,
            );
        }
        let lhs = ba.degeneracy(i).ok();
        let rhs = b
            .degeneracy(i)
            .and_then(|sb| a.degeneracy(i).and_then(|sa| sb.compose(&sa)))
            .ok();
        report.expect(
            matches!((lhs, rhs), (Some(l), Some(r)) if l.same(&r)),
            "s_i(b∘a) = s_i b ∘ s_i a",
            inputs,
        );
        report.expect(
            a.degeneracy(i)
                .is_ok_and(|x| x.target() == a.target().degeneracy(i).unwrap()),
            "target(s_i a) = s_i target(a)",
            inputs,
        );
    }
    report
}

/// Simplicial identities on an arrow, equivariance of the `S_n`-action and
/// closure of automorphisms under faces and degeneracies.
pub fn check_groupoid_simplicial<G: CsgElement>(x: &GroupoidArrow<G>, tau: &Perm) -> CheckReport {
    let mut report = check_simplicial_laws(x);
    let n = x.level();
    let Some(tx) = report.expect_ok(x.act(tau), "τ·x defined", || format!("x={x}, τ={tau}"))
    else {
        return report;
    };
    for i in 0..=n {
        let inputs = || format!("x={x}, τ={tau}, i={i}");
        let a = tau.preimage(i);
        if n > 0 {
            let lhs = tx.face(i).ok();
            let rhs = tau
                .face(i)
                .and_then(|dt| x.face(a).and_then(|dx| dx.act(&dt)))
                .ok();
            report.expect(
                matches!((lhs, rhs), (Some(l), Some(r)) if l.same(&r)),
                "d_i(τx) = d_i(τ) d_{τ^-1 i}(x)",
                inputs,
            );
        }
        let lhs = tx.degeneracy(i).ok();
        let rhs = tau
            .degeneracy(i)
            .and_then(|st| x.degeneracy(a).and_then(|sx| sx.act(&st)))
            .ok();
        report.expect(
            matches!((lhs, rhs), (Some(l), Some(r)) if l.same(&r)),
            "s_i(τx) = s_i(τ) s_{τ^-1 i}(x)",
            inputs,
        );
        if x.is_automorphism() {
            if n > 0 {
                report.expect(
                    x.face(i).is_ok_and(|y| y.is_automorphism()),
                    "faces of automorphisms are automorphisms",
                    inputs,
                );
            }
            report.expect(
                x.degeneracy(i).is_ok_and(|y| y.is_automorphism()),
                "degeneracies of automorphisms are automorphisms",
                inputs,
            );
        }
    }
    report.expect(
        x.is_automorphism() == (x.target() == *x.source()),
        "automorphism iff source = target",
        || format!("x={x}"),
    );
    report
}

/// Nerve simplicial identities, orbit constancy of the quotient map and its
/// commutation with faces and degeneracies.
pub fn check_quotient<G: CsgElement>(s: &NerveSimplex<G>, tau: &Perm) -> CheckReport {
    let mut report = check_simplicial_laws(s);
    let m = s.dimension();
    let t = s.quotient_map();
    let inputs = || format!("s={s}, τ={tau}");
    report.expect(
        s.act(tau)
            .is_ok_and(|x| x.same_orbit(s) && tuples_equal(&x.quotient_map(), &t)),
        "q(τ·s) = q(s)",
        inputs,
    );
    for i in 0..=m {
        let inputs = || format!("s={s}, i={i}");
        if m > 0 {
            let lhs = s.face(i).map(|x| x.quotient_map()).ok();
            let rhs = tuple_face(&t, i).ok();
            report.expect(
                matches!((lhs, rhs), (Some(l), Some(r)) if tuples_equal(&l, &r)),
                "q(d_i s) = d_i q(s)",
                inputs,
            );
        }
        {
            let lhs = s.degeneracy(i).map(|x| x.quotient_map()).ok();
            let rhs = tuple_degeneracy(&t, i, s.start.level()).ok();
            report.expect(
                matches!((lhs, rhs), (Some(l), Some(r)) if tuples_equal(&l, &r)),
                "q(s_i s) = s_i q(s)",
                inputs,
            );
        }
    }
    report
}

/// Every object of `Γ_n` is reachable from every other one.
pub fn is_connected<G: SimplicialSection>(level: usize) -> bool {
    let objects: Vec<Perm> = Perm::all(level).collect();
    objects.iter().all(|from| {
        objects.iter().all(|to| {
            GroupoidArrow::<G>::connecting(from, to)
                .is_ok_and(|a| a.source() == from && a.target() == *to)
        })
    })
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct ArrowRecord {
    pub source: String,
    pub word: String,
    pub target: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SimplexRecord {
    pub start: String,
    pub chain: Vec<String>,
    pub objects: Vec<String>,
    pub quotient: Vec<String>,
}

impl SimplexRecord {
    pub fn of<G: CsgElement>(s: &NerveSimplex<G>) -> Self {
        SimplexRecord {
            start: s.start.to_string(),
            chain: s.chain.iter().map(|g| g.to_string()).collect(),
            objects: s.objects().iter().map(|p| p.to_string()).collect(),
            quotient: s.quotient_map().iter().map(|g| g.to_string()).collect(),
        }
    }
}

/// Objects, arrows and simplices of a finite piece of the nerve.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NerveSkeleton {
    pub instance: String,
    pub level: usize,
    pub objects: Vec<String>,
    pub arrows: Vec<ArrowRecord>,
    pub simplices: Vec<SimplexRecord>,
}

fn arrow_record<G: CsgElement>(a: &GroupoidArrow<G>) -> ArrowRecord {
    ArrowRecord {
        source: a.source.to_string(),
        word: a.f.to_string(),
        target: a.target().to_string(),
    }
}

impl NerveSkeleton {
    /// The skeleton spanned by the given simplices.
    pub fn from_simplices<G: CsgElement>(level: usize, simplices: &[NerveSimplex<G>]) -> Self {
        let mut objects = BTreeSet::new();
        let mut arrows = BTreeSet::new();
        let mut records = Vec::new();
        for s in simplices {
            let vertices = s.objects();
            objects.extend(vertices.iter().cloned());
            arrows.extend(s.arrows().iter().map(arrow_record));
            records.push(SimplexRecord::of(s));
        }
        NerveSkeleton {
            instance: G::INSTANCE.into(),
            level,
            objects: objects.iter().map(|p| p.to_string()).collect(),
            arrows: arrows.into_iter().collect(),
            simplices: records,
        }
    }

    /// The full 1-skeleton of the symmetric instance: `(n+1)!^2` arrows.
    pub fn symmetric(level: usize) -> Self {
        let objects: Vec<Perm> = Perm::all(level).collect();
        let arrows = objects
            .iter()
            .flat_map(|s| {
                objects
                    .iter()
                    .map(move |f| arrow_record(&GroupoidArrow::new(s.clone(), f.clone()).unwrap()))
            })
            .collect();
        NerveSkeleton {
            instance: Perm::INSTANCE.into(),
            level,
            objects: objects.iter().map(|p| p.to_string()).collect(),
            arrows,
            simplices: Vec::new(),
        }
    }

    /// Graphviz rendering of objects and arrows; simplices are not drawn.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        writeln!(out, "digraph gamma_{} {{", self.level).unwrap();
        for o in &self.objects {
            writeln!(out, "  \"{o}\";").unwrap();
        }
        for a in &self.arrows {
            writeln!(
                out,
                "  \"{}\" -> \"{}\" [label=\"{}\"];",
                a.source, a.target, a.word
            )
            .unwrap();
        }
        out.push_str("}\n");
        out
    }
}
