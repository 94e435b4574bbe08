//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

use std::time::Instant;

use csg_core::barcx::FiniteMonoid;
use csg_core::braid::artin_act;
use csg_core::operad::circ_set;
use csg_core::random::{random_braid, rng};
use csg_core::suites::{lift_matches, run_suite, Instance, Suite, SuiteParams, SuiteReport};
use csg_core::symm::block_substitute;
use csg_core::{braids_equal, BraidWord, CheckReport, Perm};
use rand::Rng;

struct Gate {
    failed: usize,
    started: Instant,
}

impl Gate {
    fn record(&mut self, n: usize, title: &str, passed: bool, detail: String) {
        if !passed {
            self.failed += 1;
        }
        println!(
            "{} criterion {n:>2}: {title} [{detail}] ({:.1}s)",
            if passed { "PASS" } else { "FAIL" },
            self.started.elapsed().as_secs_f64()
        );
    }
}

fn symm(max_level: usize) -> SuiteParams {
    SuiteParams {
        max_level,
        trials: 0,
        seed: 0,
        length: 12,
    }
}

fn braid(max_level: usize, trials: usize, seed: u64) -> SuiteParams {
    SuiteParams {
        max_level,
        trials,
        seed,
        length: 12,
    }
}

/// Runs each suite, printing the first counterexample of any failure.
fn suites(runs: &[(Suite, Instance, SuiteParams)]) -> (bool, String) {
    let reports: Vec<SuiteReport> = runs
        .iter()
        .map(|(s, i, p)| run_suite(*s, *i, p, None))
        .collect();
    summarize(&reports)
}

fn summarize(reports: &[SuiteReport]) -> (bool, String) {
    let mut ok = true;
    let mut parts = Vec::new();
    for r in reports {
        ok &= r.passed();
        parts.push(format!(
            "{}/{}: {} cases, {} cex",
            r.suite, r.instance, r.cases, r.counterexample_count
        ));
        if let Some(v) = r.counterexamples.first() {
            println!(
                "    {} {}: {} | {}",
                r.suite, r.instance, v.identity, v.inputs
            );
        }
    }
    (ok, parts.join("; "))
}

fn main() {
    let mut gate = Gate {
        failed: 0,
        started: Instant::now(),
    };

    let (ok, detail) = suites(&[(Suite::IndexIdentities, Instance::Symm, symm(4))]);
    gate.record(
        1,
        "preimage and block identities on S_n, n <= 4",
        ok,
        detail,
    );

    let mut runs = Vec::new();
    for suite in [Suite::Crossed, Suite::Simplicial, Suite::ExtraDegeneracy] {
        runs.push((suite, Instance::Symm, symm(3)));
        runs.push((suite, Instance::Braid, braid(5, 1000, 11)));
    }
    let (ok, detail) = suites(&runs);
    gate.record(
        2,
        "crossed, simplicial and extra degeneracy identities",
        ok,
        detail,
    );

    let mut runs = Vec::new();
    for suite in [Suite::Monoidal, Suite::Operadic] {
        runs.push((suite, Instance::Symm, symm(2)));
        runs.push((suite, Instance::Braid, braid(5, 500, 12)));
    }
    let (ok, detail) = suites(&runs);
    gate.record(3, "monoidal and operadic axioms", ok, detail);

    let mut oracle = CheckReport::default();
    let mut compared = 0;
    for n in 0..=3 {
        for m in 0..=3 {
            for sigma in Perm::all(n) {
                for tau in Perm::all(m) {
                    for i in 0..=n {
                        compared += 1;
                        let a = circ_set(&sigma, i, &tau).ok();
                        let b = block_substitute(&sigma, i, &tau).ok();
                        oracle.expect(
                            a.is_some() && a == b,
                            "circ_set = block substitution",
                            || format!("σ={sigma}, i={i}, τ={tau}"),
                        );
                    }
                }
            }
        }
    }
    let (ok, detail) = suites(&[
        (Suite::ShiftedOperad, Instance::Symm, symm(2)),
        (Suite::ShiftedOperad, Instance::Braid, braid(3, 300, 13)),
        (Suite::UnshiftedOperad, Instance::Symm, symm(2)),
        (Suite::UnshiftedOperad, Instance::Braid, braid(3, 300, 13)),
    ]);
    gate.record(
        4,
        "set operad against the block oracle, shifted and unshifted axioms",
        ok && oracle.passed(),
        format!(
            "oracle: {compared} compositions, {} cex; {detail}",
            oracle.violations.len()
        ),
    );

    let (ok, detail) = suites(&[
        (Suite::OperadicMult, Instance::Symm, symm(2)),
        (Suite::OperadicMult, Instance::Braid, braid(3, 300, 14)),
    ]);
    gate.record(
        5,
        "multiplicativity and functoriality of the groupoid composition",
        ok,
        detail,
    );

    let (ok, detail) = suites(&[
        (Suite::GammaSimplicial, Instance::Symm, symm(3)),
        (Suite::GammaSimplicial, Instance::Braid, braid(3, 300, 15)),
    ]);
    gate.record(6, "simplicial groupoid and its object action", ok, detail);

    let (ok, detail) = suites(&[
        (Suite::Quotient, Instance::Symm, symm(3)),
        (Suite::Quotient, Instance::Braid, braid(3, 200, 16)),
    ]);
    gate.record(7, "quotient map of the nerve", ok, detail);

    let (ok, detail) = suites(&[
        (Suite::Section, Instance::Symm, braid(5, 200, 17)),
        (Suite::Section, Instance::Braid, braid(5, 200, 17)),
    ]);
    let mut lifts = CheckReport::default();
    let mut r = rng(18);
    let mut horns = 0;
    for _ in 0..200 {
        let n = r.gen_range(2..=3);
        let g = random_braid(&mut r, n, 12);
        for k in 0..=n {
            horns += 1;
            lifts.merge(lift_matches(&g, k));
        }
    }
    if let Some(v) = lifts.violations.first() {
        println!("    lift: {} | {}", v.identity, v.inputs);
    }
    gate.record(
        8,
        "simplicial section and horn lifting",
        ok && lifts.passed(),
        format!(
            "{detail}; {horns} braid horns lifted, {} cex",
            lifts.violations.len()
        ),
    );

    let b = |s: &str| s.parse::<BraidWord>().expect("valid braid");
    let mut relations = 0;
    let mut relations_ok = true;
    for level in 2..=6 {
        let g = |k: usize| BraidWord::generator(level, k).expect("in range");
        for i in 0..level {
            if i + 1 < level {
                let lhs = g(i).concat(&g(i + 1)).and_then(|x| x.concat(&g(i)));
                let rhs = g(i + 1).concat(&g(i)).and_then(|x| x.concat(&g(i + 1)));
                relations += 1;
                relations_ok &= braids_equal(&lhs.unwrap(), &rhs.unwrap()).unwrap_or(false);
            }
            for j in i + 2..level {
                relations += 1;
                let lhs = g(i).concat(&g(j)).unwrap();
                let rhs = g(j).concat(&g(i)).unwrap();
                relations_ok &= braids_equal(&lhs, &rhs).unwrap_or(false);
            }
        }
    }
    let artin_differs = |x: &str, y: &str| artin_act(&b(x)) != artin_act(&b(y));
    let distinguished = artin_differs("s1@2", "s1^-1@2")
        && artin_differs("s1 s2@2", "s2 s1@2")
        && !braids_equal(&b("s1@2"), &b("s1^-1@2")).unwrap_or(true)
        && !braids_equal(&b("s1 s2@2"), &b("s2 s1@2")).unwrap_or(true)
        && braids_equal(&b("s1 s2 s1@2"), &b("s2 s1 s2@2")).unwrap_or(false);
    gate.record(
        9,
        "braid relations and the word problem",
        relations_ok && distinguished,
        format!("{relations} relations checked, distinctions {distinguished}"),
    );

    let bar_reports = [
        run_suite(Suite::Bar, Instance::Symm, &symm(3), None),
        run_suite(Suite::Bar, Instance::Braid, &braid(3, 200, 19), None),
    ];
    let (ok, detail) = summarize(&bar_reports);
    let survivor = bar_reports[0]
        .details
        .as_ref()
        .and_then(|d| d["calibration"]["survivor"].as_str().map(String::from));
    let monoid = FiniteMonoid::left_zero();
    gate.record(
        10,
        "bar construction over finite monoids",
        ok && survivor.is_some() && !monoid.is_commutative(),
        format!("{detail}; surviving convention {survivor:?}"),
    );

    let g_reports = [
        run_suite(Suite::GLike, Instance::Symm, &braid(2, 300, 20), None),
        run_suite(Suite::GLike, Instance::Braid, &braid(3, 300, 20), None),
    ];
    let (ok, detail) = summarize(&g_reports);
    let holding = |r: &SuiteReport| -> Vec<String> {
        r.details.as_ref().map_or(Vec::new(), |d| {
            d["readings_holding_on_both_carriers"]
                .as_array()
                .map(|xs| {
                    xs.iter()
                        .filter_map(|x| x.as_str().map(String::from))
                        .collect()
                })
                .unwrap_or_default()
        })
    };
    let on_both: Vec<String> = holding(&g_reports[0])
        .into_iter()
        .filter(|x| holding(&g_reports[1]).contains(x))
        .collect();
    let literal = g_reports
        .iter()
        .map(|r| {
            r.details
                .as_ref()
                .map(|d| d["first_condition_right_multiplication"].clone())
        })
        .collect::<Vec<_>>();
    gate.record(
        11,
        "equivariance conditions",
        ok && !on_both.is_empty(),
        format!(
            "{detail}; readings holding on both instances {on_both:?}; first condition under x·β {literal:?}"
        ),
    );

    let params = braid(3, 100, 21);
    let mut identical = true;
    let mut compared = 0;
    let single = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .expect("pool");
    for suite in Suite::ALL {
        for instance in [Instance::Symm, Instance::Braid] {
            let p = if instance == Instance::Symm {
                symm(2)
            } else {
                params
            };
            let a = run_suite(suite, instance, &p, None).to_json();
            let b = single.install(|| run_suite(suite, instance, &p, None).to_json());
            compared += 1;
            identical &= a == b;
        }
    }
    gate.record(
        12,
        "byte-identical reports on rerun",
        identical,
        format!("{compared} suite runs repeated, one of them single-threaded"),
    );

    println!(
        "{} of 12 criteria passed in {:.1}s",
        12 - gate.failed,
        gate.started.elapsed().as_secs_f64()
    );
    if gate.failed > 0 {
        std::process::exit(1);
    }
}
