//! End-to-end subcommand tests against the compiled binary.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn bsymbol(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bsymbol"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn write_example(path: &Path) {
    fs::write(
        path,
        r#"{"field":{"p":2,"r":1,"modulus":[1,1]},"n":4,"k":2,"generator":[[1,1,0,0],[1,0,1,1]]}"#,
    )
    .unwrap();
}

#[test]
fn construct_prints_verdicts() {
    let out = bsymbol(&["construct", "thm5", "--q", "2", "--k", "3", "--b", "2"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("(7,4,5)^2_2 distance-optimal"));

    let out = bsymbol(&[
        "construct", "shi", "--q", "2", "--k", "3", "--b", "2", "--delta", "1",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("(7,3,6)^2_2 optimal (meets bound)"));
}

#[test]
fn construct_precondition_exit_code() {
    let out = bsymbol(&[
        "construct", "repeat", "--q", "3", "--k", "2", "--b", "2", "--s", "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("gcd"));
}

#[test]
fn construct_analyze_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let code = dir.path().join("thm6.json");
    let out = bsymbol(&[
        "construct", "thm6", "--q", "2", "--k", "3", "--b", "2", "--out",
        code.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("(8,4,6)^2_2 distance-optimal"));

    let out = bsymbol(&["analyze", code.to_str().unwrap(), "--b", "2"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["n"], 8);
    assert_eq!(report["k"], 4);
    assert_eq!(report["results"][0]["d_b"], 6);
    assert_eq!(report["results"][0]["bound"]["distance_optimal"], true);

    // Deterministic output bytes.
    let again = bsymbol(&["analyze", code.to_str().unwrap(), "--b", "2"]);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn analyze_example_with_csv() {
    let dir = tempfile::tempdir().unwrap();
    let code = dir.path().join("example.json");
    write_example(&code);
    let csv = dir.path().join("enum.csv");
    let out = bsymbol(&[
        "analyze",
        code.to_str().unwrap(),
        "--b",
        "2",
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["results"][0]["d_b"], 3);
    assert_eq!(report["results"][0]["bound"]["gap"], 1);
    assert_eq!(
        fs::read_to_string(csv).unwrap(),
        "weight,count\n0,1\n3,1\n4,2\n"
    );
}

#[test]
fn analyze_cap_exit_code() {
    let dir = tempfile::tempdir().unwrap();
    let code = dir.path().join("example.json");
    write_example(&code);
    let out = bsymbol(&["analyze", code.to_str().unwrap(), "--b", "2", "--cap", "2"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn bound_reports() {
    let out = bsymbol(&["bound", "--n", "7", "--k", "3", "--db", "6", "--b", "2", "--q", "2"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["lhs"], 21);
    assert_eq!(report["rhs"], 21);
    assert_eq!(report["optimal"], true);
    assert_eq!(report["conjecture"], "not-applicable");

    let out = bsymbol(&["bound", "--n", "3", "--k", "3", "--db", "3", "--b", "2", "--q", "2"]);
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["holds"], false);
}

#[test]
fn concat_matches_weight_law() {
    let dir = tempfile::tempdir().unwrap();
    let code = dir.path().join("example.json");
    let image = dir.path().join("ec.json");
    write_example(&code);
    let out = bsymbol(&[
        "concat",
        code.to_str().unwrap(),
        "--b",
        "2",
        "--out",
        image.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    // d_H(E(C)) = q^{b-1} d_2(C) = 6.
    let out = bsymbol(&["analyze", image.to_str().unwrap(), "--b", "1"]);
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["results"][0]["d_b"], 6);
}

#[test]
fn extend_from_seed_file() {
    let dir = tempfile::tempdir().unwrap();
    let code = dir.path().join("example.json");
    write_example(&code);
    let out = bsymbol(&[
        "construct", "extend", "--q", "2", "--b", "2", "--s", "2", "--seed",
        code.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("(10,2,9)^2_2"));
}

#[test]
fn verify_suites() {
    let out = bsymbol(&["verify", "example"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("[pass]"));

    let out = bsymbol(&["verify", "no-such-suite"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_code_file() {
    let dir = tempfile::tempdir().unwrap();
    let code = dir.path().join("bad.json");
    fs::write(&code, "{not json").unwrap();
    let out = bsymbol(&["analyze", code.to_str().unwrap(), "--b", "1"]);
    assert_eq!(out.status.code(), Some(2));
}
