use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_changpi")).args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_changpi"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn pi_prints_the_group() {
    let o = run(&["pi", "--space", "C2^{7,3}", "--m", "9"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "Z2 + Z8 + Z8");
    let o = run(&["pi", "--space", "M1^{5}", "--m", "7", "--trace"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.starts_with("Z4"));
    assert!(s.contains("R6"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["pi", "--space", "X^{4}", "--m", "7"]).status.code(), Some(1));
    assert_eq!(run(&["pi", "--space", "C1^{6,1}", "--m", "12"]).status.code(), Some(3));
    assert_eq!(run(&["table", "--which", "7"]).status.code(), Some(1));
}

#[test]
fn json_output_is_deterministic() {
    let args = ["pi", "--space", "C3^{6,2}", "--m", "8", "--trace", "--format", "json"];
    let a = stdout(&run(&args));
    let b = stdout(&run(&args));
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["pretty"], "Z2 + Z4 + Z8 + Z8");
    assert!(v["trace"]["steps"].as_array().unwrap().len() > 1);
}

#[test]
fn replay_accepts_a_trace() {
    let json = stdout(&run(&["pi", "--space", "C2^{6}", "--m", "8", "--trace", "--format", "json"]));
    let o = run_stdin(&["replay"], &json);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o).trim(), "replayed: Z2 + Z8");
    let mut forged: serde_json::Value = serde_json::from_str(&json).unwrap();
    forged["trace"]["result"]["torsion_exponents"] = serde_json::json!([3, 2]);
    assert!(!run_stdin(&["replay"], &forged.to_string()).status.success());
}

#[test]
fn snf_round_trip() {
    let o = run_stdin(&["snf"], r#"{"rows": 2, "cols": 2, "entries": [2, 4, 6, 8]}"#);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["diagonal"], serde_json::json!([2, 4]));
    let o = run_stdin(&["snf"], r#"{"rows": 1, "cols": 2, "entries": ["-123456789012345678901234567890", 0]}"#);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["diagonal"], serde_json::json!(["123456789012345678901234567890"]));
    assert_eq!(run_stdin(&["snf"], "{").status.code(), Some(1));
    assert_eq!(run_stdin(&["snf"], r#"{"rows": 1, "cols": 1, "entries": [1.5]}"#).status.code(), Some(1));
}

#[test]
fn table_and_verify() {
    let o = run(&["table", "--which", "1", "--r", "1,2", "--s", "1"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("n=4"));
    assert_eq!(stdout(&o), stdout(&run(&["table", "--which", "1", "--r", "1,2", "--s", "1"])));
    let o = run(&["verify", "--which", "1"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("table 1: 129/129 derived cells match"));
}
