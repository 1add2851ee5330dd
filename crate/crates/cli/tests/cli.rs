use std::fs;
use std::process::{Command, Output};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_burau-forge")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("json output")
}

#[test]
fn burau_matrix_and_gamma_check() {
    let dir = tempfile::tempdir().unwrap();
    let o = bin(&["burau", "--word", "s1 s2^-1", "--n", "3"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["n"], 3);
    assert_eq!(v["field"], "q");
    let path = dir.path().join("m.json");
    fs::write(&path, &o.stdout).unwrap();
    let o = bin(&["check", "gamma", "--matrix", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["passed"], true);
}

#[test]
fn reduced_image_fails_gamma_prime_when_not_in_group() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.json");
    fs::write(&path, r#"{"n":3,"field":"q","entries":[["1","1","0"],["0","1","0"],["0","0","1"]]}"#).unwrap();
    let o = bin(&["check", "gamma-prime", "--matrix", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["passed"], false);
}

#[test]
fn similitude_commands() {
    let o = bin(&["similitude", "verify", "--rel", "h0-conj", "--r", "2", "--field", "fp:5"]);
    assert_eq!(o.status.code(), Some(0));
    let o = bin(&["similitude", "verify", "--rel", "additive-swap", "--f", "x^2+x", "--field", "fp:2"]);
    assert_eq!(o.status.code(), Some(0));
    let o = bin(&["similitude", "verify", "--rel", "h0-conj", "--field", "q"]);
    assert_eq!(o.status.code(), Some(2));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.json");
    fs::write(&path, r#"{"n":2,"field":"q","entries":[["t-1","1"],["-t^-1-t","t^-1-1"]]}"#).unwrap();
    let o = bin(&["similitude", "nf", "--matrix", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "g[1]");
}

#[test]
fn counterexample_run() {
    let o = bin(&["counterexample", "run"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
    assert!(v["a0_at_minus_one"].as_str().unwrap().contains("41616"));
}

#[test]
fn building_commands() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let dot = dir.path().join("g.dot");
    let o = bin(&[
        "building",
        "explore",
        "--gens",
        "d1",
        "--radius",
        "2",
        "--out",
        out.to_str().unwrap(),
        "--dot",
        dot.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["visited"], 5);
    assert!(fs::read_to_string(&dot).unwrap().starts_with("graph"));
    let o = bin(&["building", "verify", "--id", "lemma43", "--r", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let o = bin(&["building", "verify", "--id", "eq21", "--j", "4"]);
    assert_eq!(json(&o)["passed"], true);
    let o = bin(&["building", "verify", "--id", "nonsense"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn fold_reports_rank() {
    let dir = tempfile::tempdir().unwrap();
    let words = dir.path().join("w.txt");
    let graph = dir.path().join("g.json");
    fs::write(&words, "x1^2\nx1^3\n").unwrap();
    let o = bin(&[
        "fold",
        "--alphabet",
        "1",
        "--gens-file",
        words.to_str().unwrap(),
        "--emit-graph",
        graph.to_str().unwrap(),
        "--member",
        "x1",
    ]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["rank"], 1);
    assert_eq!(v["membership"][0][1], true);
    assert!(fs::read_to_string(&graph).unwrap().contains("edges"));
}

#[test]
fn verify_paper_filters() {
    let o = bin(&["verify-paper", "--filter", "eq21", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["rows"].as_array().unwrap().len(), 9);
    let o = bin(&["verify-paper", "--filter", "zzz"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0 checks"));
    let o = bin(&["verify-paper", "--filter", "counterexample"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("counterexample.a0.at-minus-one"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(bin(&["bogus"]).status.code(), Some(2));
    assert_eq!(bin(&["burau", "--word", "s9", "--n", "3"]).status.code(), Some(2));
    assert_eq!(bin(&["burau", "--word", "s1", "--n", "3", "--field", "fp:4"]).status.code(), Some(2));
}
