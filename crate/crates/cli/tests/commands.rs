use std::path::Path;
use std::process::{Command, Output};

fn oreq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_oreq")).args(args).env_remove("OREQ_GUARDS").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn sum_of_derivation_and_integration_is_regular_on_both_sides() {
    let o = oreq(&["i1", "regular", "d+int"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("left-regular: true"));
    let o = oreq(&["i1", "regular", "d+int", "--side", "right"]);
    assert!(stdout(&o).starts_with("right-regular: true"));
}

#[test]
fn regularity_degree_matches_kernel() {
    // The core regularity tests check this value against the kernel oracle.
    let o = oreq(&["i1", "degree", "1 - e[0,0] + int^2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "1");
    let o = oreq(&["i1", "degree", "d"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn element_commands() {
    assert_eq!(stdout(&oreq(&["i1", "normalize", "d*int"])).trim(), "1");
    assert_eq!(stdout(&oreq(&["i1", "normalize", "int*d"])).trim(), "1 - e[0,0]");
    assert_eq!(stdout(&oreq(&["i1", "mul", "d", "x"])).trim(), "H");
    assert_eq!(stdout(&oreq(&["i1", "star", "d + 2*int"])).trim(), "2*d + int");
    assert_eq!(stdout(&oreq(&["i1", "act", "int", "--poly", "x"])).trim(), "1/2*x^2");
    assert_eq!(stdout(&oreq(&["i1", "project", "e[0,0] + d"])).trim(), "d");
    let o = oreq(&["i1", "regularize", "int"]);
    assert_eq!(o.status.code(), Some(0));
    let o = oreq(&["i1", "oresolve", "d", "int", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["verified"], true);
}

#[test]
fn fractions() {
    let o = oreq(&["frac", "eval", "d", "1", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["regular_denominator"].is_string());
    let o = oreq(&["frac", "eval", "e[0,0]", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn syntax_errors_are_input_errors() {
    let o = oreq(&["i1", "normalize", "d + foo"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("byte 4"));
    assert_eq!(oreq(&["i1", "bogus"]).status.code(), Some(2));
}

#[test]
fn ring_check_reports_goldie_for_cyclic_four() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("z4.json");
    assert_eq!(oreq(&["ring", "make", "Z4", "-o", path(&file)]).status.code(), Some(0));
    let o = oreq(&["ring", "check", path(&file), "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let goldie = v["theorems"].as_array().unwrap().iter().find(|t| t["name"] == "goldie").unwrap();
    assert_eq!(goldie["biconditional_ok"], true);
    assert_eq!(goldie["conclusion"], false);

    let o = oreq(&["ring", "check", path(&file), "--theorems", "goldie,finite_ring_collapse"]);
    assert_eq!(stdout(&o).lines().count(), 3);
    assert_eq!(oreq(&["ring", "check", path(&file), "--theorems", "nope"]).status.code(), Some(2));
}

#[test]
fn localization_of_cyclic_six() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("z6.json");
    oreq(&["ring", "make", "Z6", "-o", path(&file)]);
    let o = oreq(&["ring", "localize", path(&file), "--set", "1,3", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["order"], 2);
    assert_eq!(v["ass"], serde_json::json!([0, 2, 4]));
    // {1, 2} is not multiplicatively closed.
    assert_eq!(oreq(&["ring", "localize", path(&file), "--set", "1,2"]).status.code(), Some(2));
}

#[test]
fn corpus_from_directory_and_corrupted_table() {
    let dir = tempfile::tempdir().unwrap();
    for (spec, name) in [("Z4", "a.json"), ("triangular(F2,2)", "b.json")] {
        oreq(&["ring", "make", spec, "-o", path(&dir.path().join(name))]);
    }
    let o = oreq(&["corpus", "run", "--dir", path(dir.path())]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("rings: 2, falsifications: 0"));

    let bad = dir.path().join("c.json");
    let mut data: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("a.json")).unwrap()).unwrap();
    data["mul"][2][2] = serde_json::json!(1);
    std::fs::write(&bad, data.to_string()).unwrap();
    let o = oreq(&["corpus", "run", "--dir", path(dir.path())]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn guard_overrides_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("z8.json");
    let o = Command::new(env!("CARGO_BIN_EXE_oreq"))
        .args(["ring", "make", "Z8", "-o", path(&file)])
        .env("OREQ_GUARDS", "order=4")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_oreq"))
        .args(["ring", "make", "Z8", "-o", path(&file)])
        .env("OREQ_GUARDS", "order=lots")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}
