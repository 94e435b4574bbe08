//! The simplicial identities, checked on any graded object given its faces
//! and degeneracies.

use crate::csg::CheckReport;

/// Face and degeneracy operators on a graded family `X_m`.
pub trait Simplicial: Sized {
    fn dim(&self) -> usize;
    fn face_op(&self, i: usize) -> Option<Self>;
    fn degeneracy_op(&self, i: usize) -> Option<Self>;
    fn same(&self, other: &Self) -> bool;
    fn describe(&self) -> String;
}

fn same_opt<X: Simplicial>(a: Option<X>, b: Option<X>) -> bool {
    matches!((a, b), (Some(a), Some(b)) if a.same(&b))
}

/// All five families of simplicial identities at `x`, every admissible
/// index pair.
pub fn check_simplicial_laws<X: Simplicial>(x: &X) -> CheckReport {
    let mut report = CheckReport::default();
    let n = x.dim();
    let inputs = |i: usize, j: usize| move || format!("x={}, i={i}, j={j}", x.describe());

    if n >= 2 {
        for j in 1..=n {
            for i in 0..j {
                let lhs = x.face_op(j).and_then(|y| y.face_op(i));
                let rhs = x.face_op(i).and_then(|y| y.face_op(j - 1));
                report.expect(same_opt(lhs, rhs), "d_i d_j = d_{j-1} d_i", inputs(i, j));
            }
        }
    }
    for j in 0..=n {
        let Some(sj) = x.degeneracy_op(j) else {
            report.expect(false, "s_j defined", inputs(j, j));
            continue;
        };
        for i in 0..=n + 1 {
            let lhs = sj.face_op(i);
            let (label, holds) = if i < j {
                let rhs = x.face_op(i).and_then(|y| y.degeneracy_op(j - 1));
                ("d_i s_j = s_{j-1} d_i", same_opt(lhs, rhs))
            } else if i == j || i == j + 1 {
                ("d_i s_j = id", matches!(&lhs, Some(l) if l.same(x)))
            } else {
                let rhs = x.face_op(i - 1).and_then(|y| y.degeneracy_op(j));
                ("d_i s_j = s_j d_{i-1}", same_opt(lhs, rhs))
            };
            report.expect(holds, label, inputs(i, j));
        }
        for i in 0..=j {
            let lhs = sj.degeneracy_op(i);
            let rhs = x.degeneracy_op(i).and_then(|y| y.degeneracy_op(j + 1));
            report.expect(same_opt(lhs, rhs), "s_i s_j = s_{j+1} s_i", inputs(i, j));
        }
    }
    report
}
