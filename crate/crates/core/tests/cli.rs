use std::path::PathBuf;
use std::process::{Command, Output};

fn forklab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_forklab")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn file(name: &str, text: &str) -> String {
    let dir = std::env::temp_dir().join(format!("forklab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path: PathBuf = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn models_as_json() {
    let p = file("two.lp", "a | b. a | c.");
    let o = forklab(&["--json", "models", &p, "--semantics", "sm,fork,jm"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["semantics"]["sm"], serde_json::json!([["a"], ["b", "c"]]));
    assert_eq!(v["semantics"]["fork"].as_array().unwrap().len(), 4);
    assert_eq!(v["semantics"]["fork"], v["semantics"]["jm"]);
    assert_eq!(v["violations"], serde_json::json!([]));
    assert!(v["witnesses"]["jm"].is_array());
}

#[test]
fn models_as_text_with_extra_atoms() {
    let p = file("two-text.lp", "a | b. a | c.");
    let o = forklab(&["--alphabet", "x,y", "models", &p, "--semantics", "sm"]);
    let out = stdout(&o);
    assert!(out.contains("alphabet: {a,b,c,x,y}"), "{out}");
    assert!(out.contains("sm:         [{a} {b,c}]"), "{out}");
}

#[test]
fn entailment_and_strict_exit_codes() {
    let disj = file("disj.fk", "a v b");
    let fork = file("fork.fk", "a ; b");
    assert!(stdout(&forklab(&["entails", &disj, &fork])).starts_with("entails"));
    let o = forklab(&["entails", &fork, &disj]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("T = {a,b}"));
    let o = forklab(&["--strict", "--json", "entails", &fork, &disj]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["entails"], false);
    assert_eq!(v["there"], serde_json::json!(["a", "b"]));
}

#[test]
fn translate_pf() {
    let p = file("pf.lp", "a | b. a | c.");
    let o = forklab(&["translate", "pf", &p]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 6, "{out}");
    assert!(out.lines().any(|l| l == "a :- __f1_1."), "{out}");
}

#[test]
fn explain_emits_dot() {
    let p = file("loop.lp", "l1: p :- p.");
    let o = forklab(&["explain", &p, "--model", "{p}", "--cyclic"]);
    let out = stdout(&o);
    assert!(out.contains("digraph \"{p}\""), "{out}");
    assert!(out.contains("\"p\" -> \"p\";"), "{out}");
    assert_eq!(forklab(&["--strict", "explain", &p, "--model", "{p}"]).status.code(), Some(1));
}

#[test]
fn fuzz_runs_and_reports_failures() {
    let o = forklab(&["fuzz", "--iterations", "25", "--seed", "3"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("jm-fork"));
    let o = forklab(&["--strict", "--json", "fuzz", "--iterations", "300", "--seed", "7", "--checks", "ssm-minimal"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["checks"][0]["failed"].as_u64().unwrap() > 0);
}

#[test]
fn errors_exit_with_two() {
    let bad = file("bad.lp", "a | .");
    let o = forklab(&["models", &bad]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("syntax error"));
    assert_eq!(forklab(&["models", "/no/such/file"]).status.code(), Some(2));
}
