use csg_core::barcx::{bar_action, BarTuple, CoordinateAction};
use csg_core::braid::artin_act;
use csg_core::groupoid::{GroupoidArrow, NerveSimplex};
use csg_core::kan::decompose;
use csg_core::operad::circ_set;
use csg_core::suites::{lift_matches, run_suite, Instance, Suite, SuiteParams};
use csg_core::symm::block_substitute;
use csg_core::word::Letter;
use csg_core::{braids_equal, permutation_braid, BraidWord, CsgElement, Perm};
use proptest::prelude::*;

fn perm(level: usize) -> impl Strategy<Value = Perm> {
    Just((0..=level).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Perm::new(v).unwrap())
}

fn braid(level: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    let letter = (0..level.max(1), any::<bool>()).prop_map(|(k, pos)| {
        if pos {
            Letter::pos(k)
        } else {
            Letter::neg(k)
        }
    });
    prop::collection::vec(letter, 0..=if level == 0 { 0 } else { max_len })
        .prop_map(move |letters| BraidWord::new(level, letters).unwrap())
}

fn braid_pair(max_level: usize) -> impl Strategy<Value = (BraidWord, BraidWord)> {
    (1..=max_level).prop_flat_map(|n| (braid(n, 10), braid(n, 10)))
}

/// `a` with a braid relation spliced in at a random position: equal to `a`
/// as a braid, different as a word.
fn disguise(a: &BraidWord, at: usize, gen: usize) -> BraidWord {
    let n = a.level();
    let k = gen % (n - 1);
    let r = BraidWord::new(n, vec![Letter::pos(k), Letter::pos(k + 1), Letter::pos(k)]).unwrap();
    let s = BraidWord::new(
        n,
        vec![Letter::pos(k + 1), Letter::pos(k), Letter::pos(k + 1)],
    )
    .unwrap();
    let cut = at % (a.len() + 1);
    let head = BraidWord::new(n, a.letters()[..cut].to_vec()).unwrap();
    let tail = BraidWord::new(n, a.letters()[cut..].to_vec()).unwrap();
    [r, s.inverse(), tail]
        .iter()
        .fold(head, |acc, w| acc.concat(w).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn word_problem_is_a_congruence(
        (a, c) in (2..=5usize).prop_flat_map(|n| (braid(n, 10), braid(n, 10))),
        at in 0usize..20,
        gen in 0usize..8,
    ) {
        let b = disguise(&a, at, gen);
        prop_assert!(braids_equal(&a, &b).unwrap());
        prop_assert!(braids_equal(&b, &a).unwrap());
        prop_assert!(braids_equal(&a.concat(&c).unwrap(), &b.concat(&c).unwrap()).unwrap());
        prop_assert!(braids_equal(&c.concat(&a).unwrap(), &c.concat(&b).unwrap()).unwrap());
        prop_assert!(braids_equal(&a.freely_reduced(), &a).unwrap());
        prop_assert!(braids_equal(&a.concat(&a.inverse()).unwrap(), &BraidWord::one(a.level())).unwrap());
        prop_assert_eq!(a.braid_hash(), b.braid_hash());
    }

    #[test]
    fn a_crossing_changes_the_braid(a in (1..=5usize).prop_flat_map(|n| braid(n, 10)), k in 0usize..5) {
        let g = BraidWord::generator(a.level(), k % a.level()).unwrap();
        prop_assert!(!braids_equal(&a, &a.concat(&g).unwrap()).unwrap());
        let twice = a.concat(&g).unwrap().concat(&g).unwrap();
        prop_assert!(!braids_equal(&a, &twice).unwrap());
    }

    #[test]
    fn projection_is_multiplicative((a, b) in braid_pair(5)) {
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(ab.underlying_perm(), a.underlying_perm().compose(&b.underlying_perm()).unwrap());
        prop_assert_eq!(a.inv().underlying_perm(), a.underlying_perm().inverse());
    }

    #[test]
    fn artin_images_of_inverse_pairs_cancel(a in (1..=4usize).prop_flat_map(|n| braid(n, 8))) {
        let id = artin_act(&BraidWord::one(a.level()));
        prop_assert_eq!(artin_act(&a.concat(&a.inverse()).unwrap()), id.clone());
        prop_assert_eq!(artin_act(&a.inverse().concat(&a).unwrap()), id);
    }

    #[test]
    fn permutation_braids_are_positive_and_minimal(sigma in (0..=6usize).prop_flat_map(perm)) {
        let w = permutation_braid(&sigma);
        prop_assert!(w.letters().iter().all(|l| *l == Letter::pos(l.gen)));
        prop_assert_eq!(w.len(), sigma.inversions());
        prop_assert_eq!(w.underlying_perm(), sigma);
    }

    #[test]
    fn circ_set_matches_block_substitution(
        (sigma, tau, i) in (0..=5usize, 0..=5usize)
            .prop_flat_map(|(n, m)| (perm(n), perm(m), 0..=n)),
    ) {
        prop_assert_eq!(circ_set(&sigma, i, &tau).unwrap(), block_substitute(&sigma, i, &tau).unwrap());
    }

    #[test]
    fn arrows_compose_associatively(
        (sigma, f, g, h) in (1..=4usize).prop_flat_map(|n| (perm(n), braid(n, 8), braid(n, 8), braid(n, 8))),
    ) {
        let a = GroupoidArrow::new(sigma.clone(), f.clone()).unwrap();
        prop_assert_eq!(a.target(), sigma.compose(&f.underlying_perm().inverse()).unwrap());
        let b = GroupoidArrow::new(a.target(), g).unwrap();
        let c = GroupoidArrow::new(b.target(), h).unwrap();
        let left = c.compose(&b).unwrap().compose(&a).unwrap();
        let right = c.compose(&b.compose(&a).unwrap()).unwrap();
        prop_assert!(left.same(&right));
        prop_assert!(GroupoidArrow::identity(a.target()).compose(&a).unwrap().same(&a));
    }

    #[test]
    fn object_action_is_free(
        (tau, sigma, f) in (1..=4usize).prop_flat_map(|n| (perm(n), perm(n), braid(n, 6))),
    ) {
        let x = GroupoidArrow::new(sigma, f).unwrap();
        let moved = x.act(&tau).unwrap();
        prop_assert_eq!(moved.same(&x), tau.is_identity());
        let s = NerveSimplex::new(x.source().clone(), vec![x.element().clone()]).unwrap();
        prop_assert!(s.same_orbit(&s.act(&tau).unwrap()));
    }

    #[test]
    fn decomposition_and_lifts(g in (1..=4usize).prop_flat_map(|n| braid(n, 10))) {
        let d = decompose(&g);
        prop_assert!(d.reconstruct().group_eq(&g));
        prop_assert!(d.pure.is_pure());
        for k in 0..=g.level() {
            let report = lift_matches(&g, k);
            prop_assert!(report.passed(), "{:?}", report.violations);
        }
    }

    #[test]
    fn coordinate_action_is_an_action(
        (g, h, entries) in (0..=4usize).prop_flat_map(|n| {
            (perm(n), perm(n), prop::collection::vec(0usize..3, n + 1))
        }),
    ) {
        let t = BarTuple::new(entries);
        let forward = CoordinateAction::Forward;
        let backward = CoordinateAction::Backward;
        let gh = g.compose(&h).unwrap();
        prop_assert_eq!(
            bar_action(&g, &bar_action(&h, &t, forward).unwrap(), forward).unwrap(),
            bar_action(&gh, &t, forward).unwrap()
        );
        // Backward is the right action t ↦ t∘σ.
        prop_assert_eq!(
            bar_action(&h, &bar_action(&g, &t, backward).unwrap(), backward).unwrap(),
            bar_action(&gh, &t, backward).unwrap()
        );
        for action in [forward, backward] {
            prop_assert_eq!(bar_action(&Perm::one(g.level()), &t, action).unwrap(), t.clone());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn reports_are_reproducible_and_consistent(seed in any::<u64>(), which in 0usize..14) {
        let suite = Suite::ALL[which];
        let params = SuiteParams { max_level: 2, trials: 10, seed, length: 6 };
        let a = run_suite(suite, Instance::Braid, &params, None);
        let b = run_suite(suite, Instance::Braid, &params, None);
        prop_assert_eq!(a.to_json(), b.to_json());
        prop_assert_eq!(a.passed(), a.counterexamples.is_empty());
        prop_assert_eq!(a.counterexample_count == 0, a.passed());
    }
}
