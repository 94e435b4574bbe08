use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn csg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_csg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn fixture(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name]
        .iter()
        .collect();
    path.to_string_lossy().into_owned()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("valid json")
}

#[test]
fn eval_permutation_expressions() {
    let o = csg(&["eval", "circ_0([1,0],[1,0])"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "[2,1,0]");
    assert_eq!(
        stdout(&csg(&["eval", "boxplus([1,0],[0])"])).trim(),
        "[1,0,2]"
    );
    assert_eq!(stdout(&csg(&["eval", "d_0([1,2,0])"])).trim(), "[0,1]");
    assert_eq!(stdout(&csg(&["eval", "sL([1,0])"])).trim(), "[0,2,1]");
}

#[test]
fn eval_braid_expressions() {
    let o = csg(&["eval", "--format", "json", "mul(inv(s1@1), s1@1)"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["instance"], "braid");
    assert_eq!(v["identity"], true);
    assert_eq!(v["perm"], "[0,1]");

    let a = json(&csg(&["eval", "--format", "json", "s1 s2 s1@2"]));
    let b = json(&csg(&["eval", "--format", "json", "s2 s1 s2@2"]));
    assert_eq!(a["hash"], b["hash"]);
    assert_eq!(a["perm"], "[2,1,0]");

    let o = csg(&["eval", "s_0(s1@1)"]);
    assert!(stdout(&o).starts_with("s2 s1@2"));
}

#[test]
fn eval_errors_point_at_the_input() {
    let o = csg(&["eval", "mul([1,0], [1,0,2])"]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("error at position"), "{err}");
    assert!(err.contains('^'), "{err}");

    for bad in [
        "circ_0([1,0]",
        "[1,1]",
        "d_5([1,0])",
        "frob([0])",
        "mul([1,0], s1@1)",
    ] {
        assert_eq!(csg(&["eval", bad]).status.code(), Some(2), "{bad}");
    }
}

#[test]
fn check_passes_and_reports() {
    let o = csg(&["check", "lemma-a1", "--max-level", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("PASS"));

    let o = csg(&[
        "check",
        "operadic",
        "--instance",
        "braid",
        "--trials",
        "500",
        "--seed",
        "42",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    let o = csg(&["check", "crossed", "--max-level", "0", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["outcome"], "pass");
    assert_eq!(v["counterexample_count"], 0);
    assert_eq!(v["suite"], "crossed");
}

#[test]
fn check_json_is_reproducible() {
    let args = [
        "check",
        "g-like",
        "--instance",
        "braid",
        "--max-level",
        "3",
        "--trials",
        "50",
        "--seed",
        "7",
        "--format",
        "json",
    ];
    let a = csg(&args);
    let b = csg(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert!(v["details"]["readings_holding_on_both_carriers"]
        .as_array()
        .is_some());
}

#[test]
fn check_usage_errors() {
    assert_eq!(csg(&["check", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(
        csg(&["check", "crossed", "--instance", "cyclic"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        csg(&["check", "crossed", "--max-level", "x"]).status.code(),
        Some(2)
    );
    assert_eq!(csg(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn bar_suite_with_a_monoid_file() {
    let m = fixture("left_zero.json");
    let o = csg(&[
        "check",
        "bar",
        "--monoid",
        &m,
        "--max-level",
        "2",
        "--trials",
        "20",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v = json(&o);
    assert_eq!(v["details"]["calibration"]["monoid"]["elements"][1], "x");
    assert!(v["details"]["calibration"]["survivor"].is_string());

    let bad = fixture("not_associative.json");
    let o = csg(&["check", "bar", "--monoid", &bad]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("invalid monoid"));
    assert_eq!(
        csg(&["check", "bar", "--monoid", "/nonexistent.json"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn nerve_json_structure() {
    let o = csg(&[
        "nerve",
        "--instance",
        "braid",
        "--level",
        "2",
        "--dimension",
        "2",
        "--count",
        "4",
        "--seed",
        "3",
    ]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["seed"], 3);
    let ops = v["operators"].as_array().unwrap();
    assert_eq!(ops.len(), 4);
    for op in ops {
        let chain = op["simplex"]["chain"].as_array().unwrap();
        let m = chain.len();
        let faces = op["faces"].as_array().unwrap().len();
        assert_eq!(faces, if m == 0 { 0 } else { m + 1 });
        assert_eq!(op["degeneracies"].as_array().unwrap().len(), m + 1);
        for d in op["degeneracies"].as_array().unwrap() {
            assert_eq!(d["chain"].as_array().unwrap().len(), m + 1);
        }
    }
    assert_eq!(
        o.stdout,
        csg(&[
            "nerve",
            "--instance",
            "braid",
            "--level",
            "2",
            "--dimension",
            "2",
            "--count",
            "4",
            "--seed",
            "3"
        ])
        .stdout
    );
}

#[test]
fn nerve_dimension_zero_and_dot() {
    let v = json(&csg(&["nerve", "--dimension", "0", "--count", "2"]));
    for op in v["operators"].as_array().unwrap() {
        assert!(op["simplex"]["chain"].as_array().unwrap().is_empty());
        assert!(op["faces"].as_array().unwrap().is_empty());
    }
    let o = csg(&["nerve", "--format", "dot", "--count", "2"]);
    assert!(o.status.success());
    let dot = stdout(&o);
    assert!(dot.starts_with("digraph"), "{dot}");
    assert!(dot.trim_end().ends_with('}'));
}

#[test]
fn kan_lift_outcomes() {
    let o = csg(&["kan-lift", &fixture("horn.json"), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v = json(&o);
    assert_eq!(v["projection_holds"], true);
    assert_eq!(v["base"], "[2,1,0]");
    assert!(v["faces"]
        .as_array()
        .unwrap()
        .iter()
        .all(|f| f["holds"] == true));

    let o = csg(&["kan-lift", &fixture("horn.json")]);
    assert!(stdout(&o).starts_with("Φ = "));

    let o = csg(&["kan-lift", &fixture("incompatible_horn.json")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("incompatible horn"));

    assert_eq!(
        csg(&["kan-lift", &fixture("left_zero.json")]).status.code(),
        Some(2)
    );
    assert_eq!(
        csg(&["kan-lift", "/nonexistent.json"]).status.code(),
        Some(2)
    );
}

#[test]
fn kan_lift_symmetric_instance() {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join("symm_horn.json");
    std::fs::write(
        &path,
        r#"{"instance":"symm","level":2,"k":0,"faces":[{"index":1,"word":"[0,1]"},{"index":2,"word":"[0,1]"}],"base":"[0,2,1]"}"#,
    )
    .unwrap();
    let o = csg(&["kan-lift", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(json(&o)["lift"], "[0,2,1]");
}
