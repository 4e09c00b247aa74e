use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_splitfactor"))
        .args(args)
        .env_remove("SPLITFACTOR_JOBS")
        .output()
        .unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn phi_on_e1() {
    let v = json(&["phi", "-i", &data("e1.txt"), "--bipartition", "file"]);
    assert_eq!(v["deg"], 10);
    assert_eq!(v["bipartition_source"], "file");
    let edges = v["edges"].as_array().unwrap();
    assert_eq!(edges.len(), 2);
    assert_eq!(edges[0], serde_json::json!({"u": "a", "v": "b", "sigma": 4}));
    let dot = run(&["phi", "-i", &data("e1.txt"), "--format", "dot"]);
    assert!(String::from_utf8(dot.stdout)
        .unwrap()
        .contains("[label=\"6\", weight=6]"));
}

#[test]
fn auto_bipartition_is_first_by_k_mask() {
    // P4 has a single bipartition.
    let v = json(&["phi", "-i", &data("p4.txt")]);
    assert_eq!(v["bipartition"], serde_json::json!({"K": [1, 2], "I": [0, 3]}));
    assert_eq!(v["bipartition_source"], "auto");
}

#[test]
fn bipartition_from_json_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("b.json");
    std::fs::write(&path, r#"{"K":[1],"I":[0,2,3]}"#).unwrap();
    let bad = run(&["phi", "-i", &data("p4.txt"), "--bipartition", path.to_str().unwrap()]);
    assert!(!bad.status.success());
    assert!(stderr(&bad).contains("bipartition"));
    std::fs::write(&path, r#"{"K":[1,2],"I":[0,3]}"#).unwrap();
    let v = json(&["phi", "-i", &data("p4.txt"), "--bipartition", path.to_str().unwrap()]);
    assert_eq!(v["deg"], 1);
}

#[test]
fn classify_e3() {
    let v = json(&["classify", "-i", &data("e3.txt"), "--bipartition", "file"]);
    assert_eq!(v["active"], false);
    assert_eq!(v["factor_graph"]["simple"], true);
    assert_eq!(v["factor_graph"]["complete"], true);
    assert_eq!(v["universal"].as_array().unwrap().len(), 2);
    assert_eq!(v["simple_complete"]["failed_precondition"], "S is active");
}

#[test]
fn classify_non_split() {
    let v = json(&["classify", "-i", &data("c4.g6")]);
    assert_eq!(v["split"], false);
    assert_eq!(v["prime"], true);
    assert!(v["factor_graph"].is_null());
}

#[test]
fn phi_requires_a_split_graph() {
    let out = run(&["phi", "-i", &data("c4.g6")]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("not split"));
}

#[test]
fn switches_and_apply() {
    let v = json(&["switches", "-i", &data("c4.g6")]);
    assert_eq!(v["deg"], 2);
    let out = run(&["switches", "-i", &data("c4.g6"), "--apply", "0", "--format", "graph6"]);
    assert!(out.status.success());
    let code = String::from_utf8(out.stdout).unwrap();
    let g = splitfactor::io::parse_graph6(code.trim()).unwrap();
    assert_eq!(g.edge_count(), 4);
    let out = run(&["switches", "-i", &data("c4.g6"), "--apply", "5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn transforms() {
    let inv = json(&["invert", "-i", &data("e5.txt"), "--bipartition", "file"]);
    assert_eq!(inv["K"], serde_json::json!(["a", "b"]));
    assert_eq!(inv["graph"]["edges"].as_array().unwrap().len(), 5);
    let co = run(&[
        "coinvert",
        "-i",
        &data("e5.txt"),
        "--bipartition",
        "file",
        "--format",
        "edge-list",
    ]);
    let text = String::from_utf8(co.stdout).unwrap();
    assert!(text.contains("K=1,2,3\nI=a,b\n"));
    let c = json(&["compose", "-i", &data("p4.txt"), "--inner", &data("c4.g6")]);
    assert_eq!(c["n"], 8);
    assert_eq!(c["labels"][4], "inner.0");
    let d = json(&["decompose", "-i", &data("e3.txt")]);
    assert!(d["factors"].as_array().unwrap().len() > 1);
}

#[test]
fn stdin_input() {
    use std::io::Write;
    let mut child = Command::new(env!("CARGO_BIN_EXE_splitfactor"))
        .args(["deg", "-i", "-"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"Ch\n").unwrap();
    let out = child.wait_with_output().unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["deg"], 1);
}

#[test]
fn verify_small_range() {
    let dir = tempfile::tempdir().unwrap();
    let out_path: PathBuf = dir.path().join("report.json");
    let out = run(&[
        "verify",
        "--max-k",
        "3",
        "--max-alpha",
        "3",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(String::from_utf8(out.stdout).unwrap().contains("EQ1"));
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert!(report.as_array().unwrap().iter().all(|r| r["passed"] == true));
}

#[test]
fn verify_jobs_from_env_and_ids() {
    let out = Command::new(env!("CARGO_BIN_EXE_splitfactor"))
        .args(["verify", "--max-k", "2", "--max-alpha", "2", "--ids", "EQ1,D3.DEG"])
        .env("SPLITFACTOR_JOBS", "2")
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let ids: Vec<&str> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["property_id"].as_str().unwrap())
        .collect();
    assert_eq!(ids, ["EQ1", "D3.DEG"]);
}

#[test]
fn usage_errors() {
    assert_eq!(run(&["phi", "--bogus"]).status.code(), Some(2));
    let out = run(&["verify", "--ids", "NOPE"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("NOPE"));
    assert!(!run(&["deg", "-i", "/nonexistent/file"]).status.success());
}
