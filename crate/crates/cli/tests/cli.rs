use std::process::{Command, Output};

use serde_json::Value;

fn bseq<S: AsRef<str>>(args: &[S]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bseq")).args(args.iter().map(AsRef::as_ref)).output().expect("binary runs")
}

fn stdout<S: AsRef<str> + std::fmt::Debug>(args: &[S]) -> String {
    let out = bseq(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn fails_with<S: AsRef<str> + std::fmt::Debug>(args: &[S], code: i32, needle: &str) {
    let out = bseq(args);
    assert_eq!(out.status.code(), Some(code), "{args:?}");
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains(needle), "{args:?}: {err}");
}

const A2_121: [&str; 4] = ["--type", "A2", "--word", "1,2,1"];

fn a2<'a>(rest: &[&'a str]) -> Vec<&'a str> {
    A2_121.iter().copied().chain(rest.iter().copied()).collect()
}

#[test]
fn roots() {
    let out = stdout(&["--type", "A1", "roots"]);
    assert!(out.contains("positive roots: a1\n"));
    assert!(out.contains("longest word: 1\n"));
    let out = stdout(&["--type", "A2", "roots"]);
    assert!(out.contains("positive roots: a1, a2, a1 + a2\n"));
    assert!(out.contains("longest word: 1 2 1\n"));
    let json: Value = serde_json::from_str(&stdout(&["--type", "B2", "roots", "--json"])).unwrap();
    assert_eq!(json["schema"], 1);
    assert_eq!(json["longest_length"], 4);
}

#[test]
fn bad_cartan_file() {
    let dir = std::env::temp_dir().join(format!("bseq-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.json");
    std::fs::write(&path, r#"{"matrix": [[3, -1], [-1, 2]]}"#).unwrap();
    fails_with(&["--cartan", path.to_str().unwrap(), "roots"], 2, "InvalidCartan");
    std::fs::write(&path, r#"{"label": "A2", "matrix": [[2, -1], [-1, 2]]}"#).unwrap();
    assert!(stdout(&["--cartan", path.to_str().unwrap(), "roots"]).contains("1 2 1"));
    fails_with(&["--cartan", dir.join("missing.json").to_str().unwrap(), "roots"], 2, "Io");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn table() {
    assert_eq!(stdout(&["--type", "A1", "--word", "1", "table"]), "0: 1, 1\n1: 0, a1\n");
    let json: Value = serde_json::from_str(&stdout(&a2(&["table", "--json"]))).unwrap();
    assert_eq!(json["schema"], 1);
    assert_eq!(json["table"][7][7], "a1^2*a2 + a1*a2^2");
    assert_eq!(json["galleries"].as_array().unwrap().len(), 8);
    fails_with(&["--type", "A2", "--word", "1,3", "table"], 2, "IndexOutOfRange");
    fails_with(&["--type", "A1", "--word", "1,1,1", "--cap", "2", "table"], 2, "CapExceeded");
}

#[test]
fn product() {
    assert_eq!(stdout(&a2(&["product", "100", "001"])), "101: 1\n");
    assert_eq!(stdout(&a2(&["product", "001", "001"])), "001: a1, 101: -2, 011: 1\n");
    let checked = stdout(&a2(&["product", "010", "011", "--check"]));
    assert!(checked.ends_with("check: ok (generator 2, restrictions)\n"), "{checked}");
    fails_with(&a2(&["product", "10", "001"]), 2, "LengthMismatch");
    let json: Value = serde_json::from_str(&stdout(&a2(&["product", "001", "001", "--json"]))).unwrap();
    assert_eq!(json["coords"]["101"], "-2");
    assert_eq!(json["word"], serde_json::json!([1, 2, 1]));
}

#[test]
fn integrate() {
    assert_eq!(stdout(&a2(&["integrate", "100", "--class", "100"])), "1\n");
    assert_eq!(stdout(&a2(&["integrate", "100", "--class", "000"])), "0\n");
    assert_eq!(stdout(&a2(&["integrate", "111", "--class", "111"])), "1\n");
    let class = r#"{"word": [1, 2, 1], "coords": {"000": "a1", "100": "1"}}"#;
    assert_eq!(stdout(&a2(&["integrate", "100", "--class", class])), "1\n");
    assert_eq!(stdout(&a2(&["integrate", "000", "--class", class])), "a1\n");
}

#[test]
fn restrict() {
    let out = stdout(&a2(&["restrict", "--class", "001"]));
    assert_eq!(out.lines().nth(5), Some("101: -a1"));
    assert_eq!(stdout(&a2(&["restrict", "--class", "111", "--at", "111"])), "a1^2*a2 + a1*a2^2\n");
    // a product written as JSON restricts to the product of restrictions
    let json = stdout(&a2(&["product", "001", "001", "--json"]));
    assert_eq!(stdout(&a2(&["restrict", "--class", json.trim(), "--at", "101"])), "a1^2\n");
}

#[test]
fn billey() {
    assert_eq!(stdout(&["--type", "A2", "billey", "--w", "1", "--v", "1,2,1"]), "a1 + a2\n");
    assert_eq!(stdout(&["--type", "A2", "billey", "--w", "", "--v", "1,2,1"]), "1\n");
    assert_eq!(stdout(&["--type", "A2", "billey", "--w", "1,2", "--v", "1,2,1"]), "a1^2 + a1*a2\n");
    fails_with(&["--type", "A2", "billey", "--w", "1", "--v", "1,1"], 2, "NotReducedWord");
    let out = stdout(&["--type", "B2", "billey", "--w", "2", "--v", "1,2,1,2", "--verify"]);
    assert!(out.contains("0 failed"), "{out}");
    fails_with(&["--type", "A2", "--word", "1,2", "billey", "--w", "1", "--v", "1", "--verify"], 2, "NotLongestWord");
}

#[test]
fn ordinary() {
    let out = stdout(&a2(&["ordinary"]));
    assert_eq!(out, "x1^2 = 0\nx2^2 - x1*x2 = 0\nx3^2 + 2*x1*x3 - x2*x3 = 0\n");
    let out = stdout(&a2(&["ordinary", "--product", "001", "001"]));
    assert!(out.ends_with("-2*x_{101} + x_{011}\n"));
    assert_eq!(stdout(&["--type", "A1", "--word", "1", "ordinary"]), "x1^2 = 0\n");
    let json: Value = serde_json::from_str(&stdout(&a2(&["ordinary", "--product", "100", "010", "--json"]))).unwrap();
    assert_eq!(json["product"]["coords"]["110"], 1);
}

#[test]
fn missing_cartan_source() {
    fails_with(&["roots"], 2, "Usage");
}

#[test]
fn deterministic_output() {
    let args = a2(&["table", "--json"]);
    assert_eq!(stdout(&args), stdout(&args));
}
