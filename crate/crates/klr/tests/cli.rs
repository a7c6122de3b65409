use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_klr-cli")).args(args).output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn text(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn shuffle_example() {
    let v = json(&["shuffle", "--type", "A", "--rank", "2", "--words", "1|2"]);
    assert_eq!(v["schema"], "klr.cli.v1");
    assert_eq!(v["command"], "shuffle");
    let terms = v["character"]["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 2);
    assert_eq!(terms[0]["word"], serde_json::json!([2, 1]));
    assert_eq!(terms[0]["coeff"], serde_json::json!({"1": "1"}));
    assert_eq!(terms[1]["word"], serde_json::json!([1, 2]));
    let t = text(&["shuffle", "--type", "A", "--rank", "2", "--words", "1|1", "--format", "text"]);
    assert_eq!(t.trim(), "(1 + q^-2)(1,1)");
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["roots", "--type", "F", "--rank", "4"][..],
        &["goodwords", "--type", "B", "--rank", "3", "--weight", "2,2,1"][..],
        &["cuspidal", "--type", "G", "--rank", "2", "--root", "3,2", "--module"][..],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout);
    }
}

#[test]
fn g2_roots_table() {
    let t = text(&["roots", "--type", "G", "--rank", "2", "--format", "text"]);
    let rows: Vec<Vec<String>> = t
        .lines()
        .map(|l| {
            let mut it = l.split_whitespace();
            let root = it.next().unwrap().to_string();
            let word = it.next().unwrap().to_string();
            vec![root, word, it.collect::<Vec<_>>().join(" ")]
        })
        .collect();
    assert!(rows.contains(&vec!["2a1+a2".into(), "(1,1,2)".into(), "q + q^-1".into()]));
    assert!(rows.contains(&vec!["3a1+2a2".into(), "(1,1,2,1,2)".into(), "q^3 + 2q + 2q^-1 + q^-3".into()]));
    assert_eq!(rows.len(), 6);
}

#[test]
fn exit_codes() {
    let out = run(&["roots", "--type", "Q", "--rank", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("usage error"));
    assert_eq!(run(&["shuffle", "--type", "A", "--rank", "2", "--words", "1|x"]).status.code(), Some(2));
    assert_eq!(run(&["roots"]).status.code(), Some(2));
    let out = run(&["cuspidal", "--type", "E", "--rank", "8", "--root", "2,2,3,4,3,2,1,0"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let out = run(&["cuspidal", "--type", "E", "--rank", "8", "--root", "2,3,4,6,5,4,3,2"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(String::from_utf8_lossy(&out.stderr).trim(), "error: unsupported root (𝓔 set)");
}

#[test]
fn verify_module_round_trip() {
    let m = run(&["cuspidal", "--type", "G", "--rank", "2", "--root", "2,1", "--module"]);
    assert!(m.status.success());
    let mut child = Command::new(env!("CARGO_BIN_EXE_klr-cli"))
        .args(["verify-module", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(&m.stdout).unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], true);

    // flip an entry and expect a located failure
    let broken = String::from_utf8(m.stdout).unwrap().replacen("\"-1\"", "\"1\"", 1);
    let path = std::env::temp_dir().join(format!("klr-cli-broken-{}.json", std::process::id()));
    std::fs::write(&path, broken).unwrap();
    let out = run(&["verify-module", path.to_str().unwrap()]);
    let _ = std::fs::remove_file(&path);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], false);
    assert!(v["first_failure"]["relation"].is_string());
}

#[test]
fn oracle_and_standard() {
    let v = json(&["oracle", "--type", "G", "--rank", "2", "--weight", "2,1"]);
    assert_eq!(v["agree"], true);
    let v = json(&["standard", "--type", "G", "--rank", "2", "--word", "1,1,2,1,2"]);
    assert_eq!(v["command"], "standard");
    let t = text(&["hook", "--type", "D", "--rank", "5", "--word", "1,3,4,5,2,3,4", "--format", "text"]);
    assert!(t.contains('5'));
}
