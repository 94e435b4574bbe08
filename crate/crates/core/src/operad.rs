//! Operadic structure on `G_*` and on the action groupoids `Γ_*`.
//!
//! Both are shifted operads: `U(n)` sits at level `n`, with partial
//! compositions `∘_i : U(n) × U(m) → U(n+m)` for `0 <= i <= n` and the faces
//! of the simplicial structure. On elements
//!
//! ```text
//! α ∘_i β = (1_i ⊞ β ⊞ 1_{n-i}) · s_i^m(α)
//! ```
//!
//! and on arrows `[σ, f] ∘_i [τ, g] = [σ ∘_i τ, (f^{-1} ∘_{σ^{-1}(i)} g^{-1})^{-1}]`.

use std::fmt;

use serde::Serialize;

use crate::csg::{iterate_degeneracy, pad, CheckReport, CsgElement};
use crate::error::{check_index, CsgError, Result};
use crate::groupoid::GroupoidArrow;
use crate::symm::Perm;

pub fn circ_set<G: CsgElement>(alpha: &G, i: usize, beta: &G) -> Result<G> {
    let n = alpha.level();
    check_index(i, n, n)?;
    let cable = iterate_degeneracy(alpha, i, beta.level())?;
    pad(beta, i, n - i).mul(&cable)
}

pub fn circ_gpd<G: CsgElement>(
    a: &GroupoidArrow<G>,
    i: usize,
    b: &GroupoidArrow<G>,
) -> Result<GroupoidArrow<G>> {
    let n = a.level();
    check_index(i, n, n)?;
    let source = circ_set(a.source(), i, b.source())?;
    let j = a.source().preimage(i);
    let f = circ_set(&a.element().inv(), j, &b.element().inv())?.inv();
    GroupoidArrow::new(source, f)
}

/// `(α ∘_i β)(α' ∘_{α^{-1}(i)} β') = αα' ∘_i ββ'`.
pub fn operadic_mult_holds<G: CsgElement>(
    alpha: &G,
    alpha2: &G,
    i: usize,
    beta: &G,
    beta2: &G,
) -> Result<bool> {
    let lhs = circ_set(alpha, i, beta)?.mul(&circ_set(alpha2, alpha.act_inverse(i), beta2)?)?;
    let rhs = circ_set(&alpha.mul(alpha2)?, i, &beta.mul(beta2)?)?;
    Ok(lhs.group_eq(&rhs))
}

/// A shifted operad: a semi-simplicial family with partial compositions.
pub trait ShiftedOperad: Clone + fmt::Display + Sized {
    fn level(&self) -> usize;
    /// The unit `id ∈ U(0)`.
    fn unit() -> Self;
    fn circ(&self, i: usize, other: &Self) -> Result<Self>;
    fn face(&self, i: usize) -> Result<Self>;
    fn same(&self, other: &Self) -> bool;
}

/// The Set-operad on the elements of a crossed simplicial group.
#[derive(Clone, Debug)]
pub struct SetOp<G>(pub G);

impl<G: CsgElement> ShiftedOperad for SetOp<G> {
    fn level(&self) -> usize {
        self.0.level()
    }

    fn unit() -> Self {
        SetOp(G::one(0))
    }

    fn circ(&self, i: usize, other: &Self) -> Result<Self> {
        circ_set(&self.0, i, &other.0).map(SetOp)
    }

    fn face(&self, i: usize) -> Result<Self> {
        self.0.face(i).map(SetOp)
    }

    fn same(&self, other: &Self) -> bool {
        self.0.group_eq(&other.0)
    }
}

impl<G: CsgElement> fmt::Display for SetOp<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl<G: CsgElement> ShiftedOperad for GroupoidArrow<G> {
    fn level(&self) -> usize {
        GroupoidArrow::level(self)
    }

    fn unit() -> Self {
        GroupoidArrow::identity(Perm::identity(0))
    }

    fn circ(&self, i: usize, other: &Self) -> Result<Self> {
        circ_gpd(self, i, other)
    }

    fn face(&self, i: usize) -> Result<Self> {
        GroupoidArrow::face(self, i)
    }

    fn same(&self, other: &Self) -> bool {
        GroupoidArrow::same(self, other)
    }
}

fn same_res<U: ShiftedOperad>(a: Result<U>, b: Result<U>) -> bool {
    matches!((a, b), (Ok(a), Ok(b)) if a.same(&b))
}

/// Unit, associativity, commutativity and both face-compatibility families
/// on `λ ∈ U(l), μ ∈ U(m), ν ∈ U(n)`, every admissible index.
pub fn check_shifted_axioms<U: ShiftedOperad>(lambda: &U, mu: &U, nu: &U) -> CheckReport {
    let mut report = CheckReport::default();
    let (l, m) = (lambda.level(), mu.level());
    let show = || format!("λ={lambda}, μ={mu}, ν={nu}");

    report.expect(
        same_res(U::unit().circ(0, nu), Ok(nu.clone())),
        "id ∘_0 ν = ν",
        show,
    );
    for i in 0..=m {
        report.expect(
            same_res(mu.circ(i, &U::unit()), Ok(mu.clone())),
            "μ ∘_i id = μ",
            || format!("μ={mu}, i={i}"),
        );
    }
    for i in 0..=l {
        for j in 0..=m {
            let lhs = lambda.circ(i, mu).and_then(|x| x.circ(i + j, nu));
            let rhs = mu.circ(j, nu).and_then(|x| lambda.circ(i, &x));
            report.expect(
                same_res(lhs, rhs),
                "(λ ∘_i μ) ∘_{i+j} ν = λ ∘_i (μ ∘_j ν)",
                || format!("{}, i={i}, j={j}", show()),
            );
            if m > 0 {
                let lhs = lambda.circ(i, mu).and_then(|x| x.face(i + j));
                let rhs = mu.face(j).and_then(|x| lambda.circ(i, &x));
                report.expect(
                    same_res(lhs, rhs),
                    "d_{i+j}(λ ∘_i μ) = λ ∘_i d_j(μ)",
                    || format!("{}, i={i}, j={j}", show()),
                );
            }
        }
    }
    for k in 1..=l {
        for i in 0..k {
            let inputs = || format!("{}, i={i}, k={k}", show());
            let lhs = lambda.circ(i, mu).and_then(|x| x.circ(k + m, nu));
            let rhs = lambda.circ(k, nu).and_then(|x| x.circ(i, mu));
            report.expect(
                same_res(lhs, rhs),
                "(λ ∘_i μ) ∘_{k+m} ν = (λ ∘_k ν) ∘_i μ",
                inputs,
            );
            let lhs = lambda.circ(k, nu).and_then(|x| x.face(i));
            let rhs = lambda.face(i).and_then(|x| x.circ(k - 1, nu));
            report.expect(
                same_res(lhs, rhs),
                "d_i(λ ∘_k ν) = d_i(λ) ∘_{k-1} ν",
                inputs,
            );
            let lhs = lambda.circ(i, mu).and_then(|x| x.face(k + m));
            let rhs = lambda.face(k).and_then(|x| x.circ(i, mu));
            report.expect(
                same_res(lhs, rhs),
                "d_{k+m}(λ ∘_i μ) = d_k(λ) ∘_i μ",
                inputs,
            );
        }
    }
    report
}

/// `∘_i` on `Γ` is a functor: it preserves identities and composition of
/// composable pairs, and sends sources and targets to their composites.
pub fn check_gpd_functoriality<G: CsgElement>(
    a1: &GroupoidArrow<G>,
    a2: &GroupoidArrow<G>,
    i: usize,
    b1: &GroupoidArrow<G>,
    b2: &GroupoidArrow<G>,
) -> CheckReport {
    let mut report = CheckReport::default();
    let inputs = || format!("a1={a1}, a2={a2}, i={i}, b1={b1}, b2={b2}");
    let Some(first) = report.expect_ok(circ_gpd(a1, i, b1), "a1 ∘_i b1 defined", inputs) else {
        return report;
    };
    report.expect(
        circ_set(&a1.target(), i, &b1.target()).is_ok_and(|t| t == first.target()),
        "target(a ∘_i b) = target(a) ∘_i target(b)",
        inputs,
    );
    let id = circ_gpd::<G>(
        &GroupoidArrow::identity(a1.source().clone()),
        i,
        &GroupoidArrow::identity(b1.source().clone()),
    );
    report.expect(
        id.is_ok_and(|x| x.same(&GroupoidArrow::identity(first.source().clone()))),
        "id ∘_i id = id",
        inputs,
    );
    let lhs = a2
        .compose(a1)
        .and_then(|a| b2.compose(b1).and_then(|b| circ_gpd(&a, i, &b)));
    let rhs = circ_gpd(a2, i, b2).and_then(|second| second.compose(&first));
    report.expect(
        matches!((lhs, rhs), (Ok(l), Ok(r)) if l.same(&r)),
        "(a2 a1) ∘_i (b2 b1) = (a2 ∘_i b2)(a1 ∘_i b1)",
        inputs,
    );
    report
}

/// An ordinary operad `O(n) = U(n-1)`, with `O(0)` the single point `*`.
/// Compositions are 1-based and `x ∘_i *` is the face `d_{i-1}`.
#[derive(Clone, Debug)]
pub enum Unshifted<U> {
    Nullary,
    Op(U),
}

impl<U: ShiftedOperad> Unshifted<U> {
    pub fn arity(&self) -> usize {
        match self {
            Unshifted::Nullary => 0,
            Unshifted::Op(u) => u.level() + 1,
        }
    }

    pub fn unit() -> Self {
        Unshifted::Op(U::unit())
    }

    pub fn circ(&self, i: usize, other: &Self) -> Result<Self> {
        let arity = self.arity();
        if i == 0 || i > arity {
            return Err(CsgError::IndexOutOfRange {
                index: i,
                level: arity,
                max: arity,
            });
        }
        let Unshifted::Op(u) = self else {
            unreachable!("arity 0 has no inputs")
        };
        match other {
            Unshifted::Nullary if u.level() == 0 => Ok(Unshifted::Nullary),
            Unshifted::Nullary => u.face(i - 1).map(Unshifted::Op),
            Unshifted::Op(v) => u.circ(i - 1, v).map(Unshifted::Op),
        }
    }

    pub fn same(&self, other: &Self) -> bool {
        match (self, other) {
            (Unshifted::Nullary, Unshifted::Nullary) => true,
            (Unshifted::Op(a), Unshifted::Op(b)) => a.same(b),
            _ => false,
        }
    }
}

impl<U: ShiftedOperad> fmt::Display for Unshifted<U> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Unshifted::Nullary => write!(f, "*"),
            Unshifted::Op(u) => write!(f, "{u}"),
        }
    }
}

fn same_unshifted<U: ShiftedOperad>(a: Result<Unshifted<U>>, b: Result<Unshifted<U>>) -> bool {
    matches!((a, b), (Ok(a), Ok(b)) if a.same(&b))
}

/// Operad axioms in 1-based form on `λ, μ, ν`, any of which may be `*`.
pub fn check_unshifted_axioms<U: ShiftedOperad>(
    lambda: &Unshifted<U>,
    mu: &Unshifted<U>,
    nu: &Unshifted<U>,
) -> CheckReport {
    let mut report = CheckReport::default();
    let (l, m) = (lambda.arity(), mu.arity());
    let show = || format!("λ={lambda}, μ={mu}, ν={nu}");
    let id = Unshifted::<U>::unit();
    report.expect(
        same_unshifted(id.circ(1, nu), Ok(nu.clone())),
        "id ∘_1 ν = ν",
        show,
    );
    for i in 1..=m {
        report.expect(
            same_unshifted(mu.circ(i, &id), Ok(mu.clone())),
            "μ ∘_i id = μ",
            || format!("μ={mu}, i={i}"),
        );
    }
    for i in 1..=l {
        for j in 1..=m {
            let lhs = lambda.circ(i, mu).and_then(|x| x.circ(i + j - 1, nu));
            let rhs = mu.circ(j, nu).and_then(|x| lambda.circ(i, &x));
            report.expect(
                same_unshifted(lhs, rhs),
                "(λ ∘_i μ) ∘_{i+j-1} ν = λ ∘_i (μ ∘_j ν)",
                || format!("{}, i={i}, j={j}", show()),
            );
        }
    }
    for k in 2..=l {
        for i in 1..k {
            let lhs = lambda.circ(i, mu).and_then(|x| x.circ(k - 1 + m, nu));
            let rhs = lambda.circ(k, nu).and_then(|x| x.circ(i, mu));
            report.expect(
                same_unshifted(lhs, rhs),
                "(λ ∘_i μ) ∘_{k-1+m} ν = (λ ∘_k ν) ∘_i μ",
                || format!("{}, i={i}, k={k}", show()),
            );
        }
    }
    report
}

/// How `G_n` acts on the right of `U(n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum RightAction {
    /// `x^β = x β`.
    RightMul,
    /// `x^β = β^{-1} x`.
    InverseLeftMul,
}

/// Which index replaces `i` on the right side of the second condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum ShiftedIndex {
    /// `π(β)(i)`
    Image,
    /// `π(β)^{-1}(i)`
    Preimage,
}

/// Candidates for the level-raising element `β''`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Cabling {
    /// `s_i^n β`
    AtIndex,
    /// `s_{π(β)(i)}^n β`
    AtImage,
    /// `s_{π(β)^{-1}(i)}^n β`
    AtPreimage,
    /// `s_i^n(β^{-1})^{-1}`
    InverseAtIndex,
}

impl RightAction {
    pub const ALL: [RightAction; 2] = [RightAction::RightMul, RightAction::InverseLeftMul];
}

impl ShiftedIndex {
    pub const ALL: [ShiftedIndex; 2] = [ShiftedIndex::Image, ShiftedIndex::Preimage];
}

impl Cabling {
    pub const ALL: [Cabling; 4] = [
        Cabling::AtIndex,
        Cabling::AtImage,
        Cabling::AtPreimage,
        Cabling::InverseAtIndex,
    ];
}

/// One reading of the equivariance conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Interpretation {
    pub action: RightAction,
    pub index: ShiftedIndex,
    pub cabling: Cabling,
}

impl Interpretation {
    pub fn all() -> Vec<Interpretation> {
        let mut out = Vec::new();
        for action in RightAction::ALL {
            for index in ShiftedIndex::ALL {
                for cabling in Cabling::ALL {
                    out.push(Interpretation {
                        action,
                        index,
                        cabling,
                    });
                }
            }
        }
        out
    }

    /// The reading that holds on both carriers.
    pub fn calibrated() -> Interpretation {
        Interpretation {
            action: RightAction::InverseLeftMul,
            index: ShiftedIndex::Image,
            cabling: Cabling::AtImage,
        }
    }

    pub fn label(&self) -> String {
        format!("{:?}/{:?}/{:?}", self.action, self.index, self.cabling)
    }
}

/// A shifted operad with a right `G_n`-action on `U(n)`.
pub trait ActedOn<G: CsgElement>: ShiftedOperad {
    fn act(&self, beta: &G, action: RightAction) -> Result<Self>;
}

impl<G: CsgElement> ActedOn<G> for SetOp<G> {
    fn act(&self, beta: &G, action: RightAction) -> Result<Self> {
        match action {
            RightAction::RightMul => self.0.mul(beta).map(SetOp),
            RightAction::InverseLeftMul => beta.inv().mul(&self.0).map(SetOp),
        }
    }
}

impl<G: CsgElement> ActedOn<G> for GroupoidArrow<G> {
    fn act(&self, beta: &G, action: RightAction) -> Result<Self> {
        let p = beta.underlying_perm();
        match action {
            RightAction::RightMul => GroupoidArrow::new(
                self.source().compose(&p)?,
                beta.inv().mul(self.element())?.mul(beta)?,
            ),
            RightAction::InverseLeftMul => self.act(&p.inverse()),
        }
    }
}

/// `μ ∘_i ν^β = (μ ∘_i ν)^{β'}` with `β' = 1_i ⊞ β ⊞ 1_{m-i}`, for
/// `μ ∈ U(m)`, `ν, β` at level `n`.
pub fn g_like_first_holds<G: CsgElement, U: ActedOn<G>>(
    mu: &U,
    nu: &U,
    beta: &G,
    i: usize,
    action: RightAction,
) -> Result<bool> {
    let m = mu.level();
    check_index(i, m, m)?;
    let lhs = mu.circ(i, &nu.act(beta, action)?)?;
    let rhs = mu.circ(i, nu)?.act(&pad(beta, i, m - i), action)?;
    Ok(lhs.same(&rhs))
}

/// `μ^β ∘_i ν = (μ ∘_{i'} ν)^{β''}` for `μ, β` at level `m`, `ν ∈ U(n)`,
/// with `i'` and `β''` chosen by the interpretation.
pub fn g_like_second_holds<G: CsgElement, U: ActedOn<G>>(
    mu: &U,
    nu: &U,
    beta: &G,
    i: usize,
    reading: Interpretation,
) -> Result<bool> {
    let m = mu.level();
    let n = nu.level();
    check_index(i, m, m)?;
    let p = beta.underlying_perm();
    let index = match reading.index {
        ShiftedIndex::Image => p.apply(i),
        ShiftedIndex::Preimage => p.preimage(i),
    };
    let cabled = match reading.cabling {
        Cabling::AtIndex => iterate_degeneracy(beta, i, n)?,
        Cabling::AtImage => iterate_degeneracy(beta, p.apply(i), n)?,
        Cabling::AtPreimage => iterate_degeneracy(beta, p.preimage(i), n)?,
        Cabling::InverseAtIndex => iterate_degeneracy(&beta.inv(), i, n)?.inv(),
    };
    let lhs = mu.act(beta, reading.action)?.circ(i, nu)?;
    let rhs = mu.circ(index, nu)?.act(&cabled, reading.action)?;
    Ok(lhs.same(&rhs))
}

/// Outcome of one interpretation over a batch of inputs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CandidateVerdict {
    pub interpretation: Interpretation,
    pub label: String,
    pub first_condition: bool,
    pub second_condition: bool,
    pub first_counterexample: Option<String>,
    pub second_counterexample: Option<String>,
}

impl CandidateVerdict {
    pub fn holds(&self) -> bool {
        self.first_condition && self.second_condition
    }
}

/// One input for the equivariance search: `μ ∈ U(m)`, `ν ∈ U(n)`, `β` at
/// level `n` for the first condition and `β₂` at level `m` for the second.
#[derive(Debug, Clone)]
pub struct EquivarianceInput<G, U> {
    pub mu: U,
    pub nu: U,
    pub beta: G,
    pub beta2: G,
    pub i: usize,
}

/// Runs every interpretation over the inputs.
pub fn g_like_search<G: CsgElement, U: ActedOn<G>>(
    inputs: &[EquivarianceInput<G, U>],
) -> Vec<CandidateVerdict> {
    let show = |x: &EquivarianceInput<G, U>| {
        format!(
            "μ={}, ν={}, β={}, β₂={}, i={}",
            x.mu, x.nu, x.beta, x.beta2, x.i
        )
    };
    Interpretation::all()
        .into_iter()
        .map(|reading| {
            let first = inputs.iter().find(|x| {
                !g_like_first_holds(&x.mu, &x.nu, &x.beta, x.i, reading.action).unwrap_or(false)
            });
            let second = inputs.iter().find(|x| {
                !g_like_second_holds(&x.mu, &x.nu, &x.beta2, x.i, reading).unwrap_or(false)
            });
            CandidateVerdict {
                interpretation: reading,
                label: reading.label(),
                first_condition: first.is_none(),
                second_condition: second.is_none(),
                first_counterexample: first.map(show),
                second_counterexample: second.map(show),
            }
        })
        .collect()
}

/// All inputs of the symmetric Set-operad with `m, n <= max_level`.
pub fn symmetric_equivariance_inputs(
    max_level: usize,
) -> Vec<EquivarianceInput<Perm, SetOp<Perm>>> {
    let mut out = Vec::new();
    for m in 0..=max_level {
        for n in 0..=max_level {
            for mu in Perm::all(m) {
                for nu in Perm::all(n) {
                    for beta in Perm::all(n) {
                        for beta2 in Perm::all(m) {
                            for i in 0..=m {
                                out.push(EquivarianceInput {
                                    mu: SetOp(mu.clone()),
                                    nu: SetOp(nu.clone()),
                                    beta: beta.clone(),
                                    beta2: beta2.clone(),
                                    i,
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    out
}
