//! The crossed simplicial group interface and its axiom checkers.
//!
//! An instance is a family of groups `G_n` acting on `[n] = {0, ..., n}`
//! through a structural projection onto `S_n`, with faces and degeneracies
//! satisfying the crossed identities
//!
//! ```text
//! d_i(gh) = d_i(g) d_{g^{-1}(i)}(h),    s_i(gh) = s_i(g) s_{g^{-1}(i)}(h)
//! ```
//!
//! and two extra degeneracies `s_left`, `s_right` adding a trivial point at
//! either end. Everything else (padding, block sum, partial composition) is
//! derived from those operations.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{check_index, Result};
use crate::simplicial::{check_simplicial_laws, Simplicial};
use crate::symm::Perm;

/// An element of a crossed simplicial group; the type selects the instance.
pub trait CsgElement: Clone + fmt::Debug + fmt::Display + Send + Sync + Sized {
    /// Instance name used in reports.
    const INSTANCE: &'static str;

    fn level(&self) -> usize;
    fn one(level: usize) -> Self;
    fn mul(&self, other: &Self) -> Result<Self>;
    fn inv(&self) -> Self;
    fn face(&self, i: usize) -> Result<Self>;
    fn degeneracy(&self, i: usize) -> Result<Self>;
    /// The structural projection onto `S_n`.
    fn underlying_perm(&self) -> Perm;
    fn s_left(&self) -> Self;
    fn s_right(&self) -> Self;
    /// Equality in the group (not of representatives).
    fn group_eq(&self, other: &Self) -> bool;
    /// Reads an element written in the instance's surface syntax, expected
    /// at `level`.
    fn parse_at(text: &str, level: usize) -> Result<Self>;

    fn is_pure(&self) -> bool {
        self.underlying_perm().is_identity()
    }

    /// `g^{-1}(i)`, computed through the projection of `g^{-1}`.
    fn act_inverse(&self, i: usize) -> usize {
        self.underlying_perm().preimage(i)
    }
}

/// A set-theoretic section of the projection that commutes with faces and
/// degeneracies.
pub trait SimplicialSection: CsgElement {
    fn section(perm: &Perm) -> Self;
}

impl SimplicialSection for Perm {
    fn section(perm: &Perm) -> Self {
        perm.clone()
    }
}

/// `s_left^left ∘ s_right^right (g)`: the element written `1_left ⊞ g ⊞ 1_right`.
pub fn pad<G: CsgElement>(g: &G, left: usize, right: usize) -> G {
    let mut out = g.clone();
    for _ in 0..right {
        out = out.s_right();
    }
    for _ in 0..left {
        out = out.s_left();
    }
    out
}

/// Block sum `G_n × G_m → G_{n+m+1}`.
pub fn boxplus<G: CsgElement>(g: &G, h: &G) -> G {
    let (n, m) = (g.level(), h.level());
    pad(g, 0, m + 1)
        .mul(&pad(h, n + 1, 0))
        .expect("padded levels agree")
}

/// `s_i` applied `times` times, each at the literal index `i`.
pub fn iterate_degeneracy<G: CsgElement>(g: &G, i: usize, times: usize) -> Result<G> {
    check_index(i, g.level(), g.level())?;
    let mut out = g.clone();
    for _ in 0..times {
        out = out.degeneracy(i)?;
    }
    Ok(out)
}

/// One failed identity, with the inputs that broke it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Violation {
    pub identity: String,
    pub inputs: String,
}

/// Outcome of an axiom checker: empty means every identity held.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub violations: Vec<Violation>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn expect(&mut self, holds: bool, identity: &str, inputs: impl FnOnce() -> String) {
        if !holds {
            self.violations.push(Violation {
                identity: identity.to_string(),
                inputs: inputs(),
            });
        }
    }

    /// Records an evaluation error as a violation of `identity`.
    pub fn expect_ok<T>(
        &mut self,
        value: Result<T>,
        identity: &str,
        inputs: impl FnOnce() -> String,
    ) -> Option<T> {
        match value {
            Ok(v) => Some(v),
            Err(e) => {
                let inputs = inputs();
                self.violations.push(Violation {
                    identity: identity.to_string(),
                    inputs: format!("{inputs} ({e})"),
                });
                None
            }
        }
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.violations.extend(other.violations);
    }
}

fn eq_opt<G: CsgElement>(a: Option<G>, b: Option<G>) -> bool {
    match (a, b) {
        (Some(a), Some(b)) => a.group_eq(&b),
        _ => false,
    }
}

/// Group axioms on a triple at a common level.
pub fn check_group_axioms<G: CsgElement>(g: &G, h: &G, k: &G) -> CheckReport {
    let mut report = CheckReport::default();
    let n = g.level();
    let inputs = || format!("g={g}, h={h}, k={k}");
    let one = G::one(n);
    report.expect(g.mul(&one).is_ok_and(|x| x.group_eq(g)), "g*1 = g", inputs);
    report.expect(one.mul(g).is_ok_and(|x| x.group_eq(g)), "1*g = g", inputs);
    report.expect(
        g.inv().mul(g).is_ok_and(|x| x.group_eq(&one)),
        "g^-1*g = 1",
        inputs,
    );
    let lhs = g.mul(h).and_then(|gh| gh.mul(k)).ok();
    let rhs = h.mul(k).and_then(|hk| g.mul(&hk)).ok();
    report.expect(eq_opt(lhs, rhs), "(gh)k = g(hk)", inputs);
    let proj = g.mul(h).map(|gh| gh.underlying_perm());
    let expected = g.underlying_perm().compose(&h.underlying_perm());
    report.expect(
        matches!((proj, expected), (Ok(a), Ok(b)) if a == b),
        "pi(gh) = pi(g)pi(h)",
        inputs,
    );
    report
}

/// Both crossed identities for `g, h` at index `i`, plus projection
/// compatibility of `d_i` and `s_i`.
pub fn check_crossed_identities<G: CsgElement>(g: &G, h: &G, i: usize) -> CheckReport {
    let mut report = CheckReport::default();
    let inputs = || format!("g={g}, h={h}, i={i}");
    let Some(gh) = report.expect_ok(g.mul(h), "g*h defined", inputs) else {
        return report;
    };
    let a = g.act_inverse(i);
    if g.level() > 0 {
        let lhs = gh.face(i).ok();
        let rhs = g
            .face(i)
            .and_then(|dg| h.face(a).and_then(|dh| dg.mul(&dh)))
            .ok();
        report.expect(eq_opt(lhs, rhs), "d_i(gh) = d_i(g) d_{g^-1 i}(h)", inputs);
        report.expect(
            projection_commutes(g, |x| x.face(i), |p| p.face(i)),
            "pi(d_i g) = d_i(pi g)",
            inputs,
        );
    }
    let lhs = gh.degeneracy(i).ok();
    let rhs = g
        .degeneracy(i)
        .and_then(|sg| h.degeneracy(a).and_then(|sh| sg.mul(&sh)))
        .ok();
    report.expect(eq_opt(lhs, rhs), "s_i(gh) = s_i(g) s_{g^-1 i}(h)", inputs);
    report.expect(
        projection_commutes(g, |x| x.degeneracy(i), |p| p.degeneracy(i)),
        "pi(s_i g) = s_i(pi g)",
        inputs,
    );
    report
}

fn projection_commutes<G: CsgElement>(
    g: &G,
    op: impl Fn(&G) -> Result<G>,
    perm_op: impl Fn(&Perm) -> Result<Perm>,
) -> bool {
    match (op(g), perm_op(&g.underlying_perm())) {
        (Ok(x), Ok(p)) => x.underlying_perm() == p,
        _ => false,
    }
}

/// Every simplicial identity on `g` at every admissible index pair.
pub fn check_simplicial_identities<G: CsgElement>(g: &G) -> CheckReport {
    check_simplicial_laws(&Elem(g.clone()))
}

struct Elem<G>(G);

impl<G: CsgElement> Simplicial for Elem<G> {
    fn dim(&self) -> usize {
        self.0.level()
    }

    fn face_op(&self, i: usize) -> Option<Self> {
        self.0.face(i).ok().map(Elem)
    }

    fn degeneracy_op(&self, i: usize) -> Option<Self> {
        self.0.degeneracy(i).ok().map(Elem)
    }

    fn same(&self, other: &Self) -> bool {
        self.0.group_eq(&other.0)
    }

    fn describe(&self) -> String {
        self.0.to_string()
    }
}

/// `s_left` as an extra degeneracy `s_{-1}`, `s_right` as `s_{n+1}`, both
/// homomorphic and compatible with the projection.
pub fn check_extra_degeneracy<G: CsgElement>(g: &G, h: &G) -> CheckReport {
    let mut report = CheckReport::default();
    let n = g.level();
    let inputs = || format!("g={g}");
    let left = g.s_left();
    let right = g.s_right();

    report.expect(
        eq_opt(left.face(0).ok(), Some(g.clone())),
        "d_0 sL = id",
        inputs,
    );
    report.expect(
        eq_opt(right.face(n + 1).ok(), Some(g.clone())),
        "d_{n+1} sR = id",
        inputs,
    );
    for i in 0..=n {
        if n > 0 {
            let lhs = left.face(i + 1).ok();
            let rhs = g.face(i).ok().map(|x| x.s_left());
            report.expect(eq_opt(lhs, rhs), "d_{i+1} sL = sL d_i", || {
                format!("g={g}, i={i}")
            });
            let lhs = right.face(i).ok();
            let rhs = g.face(i).ok().map(|x| x.s_right());
            report.expect(eq_opt(lhs, rhs), "d_i sR = sR d_i", || {
                format!("g={g}, i={i}")
            });
        }
        let lhs = left.degeneracy(i + 1).ok();
        let rhs = g.degeneracy(i).ok().map(|x| x.s_left());
        report.expect(eq_opt(lhs, rhs), "s_{i+1} sL = sL s_i", || {
            format!("g={g}, i={i}")
        });
        let lhs = right.degeneracy(i).ok();
        let rhs = g.degeneracy(i).ok().map(|x| x.s_right());
        report.expect(eq_opt(lhs, rhs), "s_i sR = sR s_i", || {
            format!("g={g}, i={i}")
        });
    }
    report.expect(
        left.underlying_perm() == g.underlying_perm().s_left(),
        "pi sL = sL pi",
        inputs,
    );
    report.expect(
        right.underlying_perm() == g.underlying_perm().s_right(),
        "pi sR = sR pi",
        inputs,
    );
    if h.level() == n {
        let inputs = || format!("g={g}, h={h}");
        let gh = g.mul(h).ok();
        let lhs = gh.as_ref().map(|x| x.s_left());
        let rhs = left.mul(&h.s_left()).ok();
        report.expect(eq_opt(lhs, rhs), "sL(gh) = sL(g) sL(h)", inputs);
        let lhs = gh.map(|x| x.s_right());
        let rhs = right.mul(&h.s_right()).ok();
        report.expect(eq_opt(lhs, rhs), "sR(gh) = sR(g) sR(h)", inputs);
    }
    report
}

/// `pad(g, 0, m+1)` and `pad(h, n+1, 0)` commute; block sum projects to the
/// block sum of permutations.
pub fn check_monoidal<G: CsgElement>(g: &G, h: &G) -> CheckReport {
    let mut report = CheckReport::default();
    let (n, m) = (g.level(), h.level());
    let inputs = || format!("g={g}, h={h}");
    let a = pad(g, 0, m + 1);
    let b = pad(h, n + 1, 0);
    report.expect(
        eq_opt(a.mul(&b).ok(), b.mul(&a).ok()),
        "pad(g) pad(h) = pad(h) pad(g)",
        inputs,
    );
    let projected = boxplus(&g.underlying_perm(), &h.underlying_perm());
    report.expect(
        boxplus(g, h).underlying_perm() == projected,
        "pi(g ⊞ h) = pi(g) ⊞ pi(h)",
        inputs,
    );
    report
}

/// `pad(h, i, n-i) · s_i^m(g) = s_i^m(g) · pad(h, a, n-a)` with `a = g^{-1}(i)`.
pub fn check_operadic<G: CsgElement>(g: &G, h: &G, i: usize) -> CheckReport {
    let mut report = CheckReport::default();
    let (n, m) = (g.level(), h.level());
    let inputs = || format!("g={g}, h={h}, i={i}");
    let Some(cable) = report.expect_ok(iterate_degeneracy(g, i, m), "s_i^m(g) defined", inputs)
    else {
        return report;
    };
    let a = g.act_inverse(i);
    let lhs = pad(h, i, n - i).mul(&cable).ok();
    let rhs = cable.mul(&pad(h, a, n - a)).ok();
    report.expect(
        eq_opt(lhs, rhs),
        "(1_i ⊞ h ⊞ 1) s_i^m(g) = s_i^m(g) (1_a ⊞ h ⊞ 1)",
        inputs,
    );
    report
}
