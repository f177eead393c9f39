use std::process::{Command, Output};

use coxtw::cli::BallListing;
use coxtw::order::HasseGraph;
use serde_json::{json, Value};

fn coxtw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coxtw")).args(args).env_remove("COXTW_MAX_BALL").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn a1_figure_is_golden() {
    let o = coxtw(&["--type", "A~1", "figure", "a1-twist", "--format", "dot"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), include_str!("golden/a1_twist.dot"));
    let again = coxtw(&["figure", "a1-twist", "--format", "dot"]);
    assert_eq!(again.stdout, o.stdout);
}

#[test]
fn a2_figure_json() {
    let o = coxtw(&["--type", "A~2", "figure", "a2-twist", "--format", "json"]);
    let g = HasseGraph::from_json(&stdout(&o)).unwrap();
    assert_eq!((g.nodes.len(), g.edges.len()), (21, 25));
}

#[test]
fn ball_and_hasse_round_trip() {
    let o = coxtw(&["--type", "A2", "ball", "3", "--format", "json"]);
    let b: BallListing = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(b.elements.len(), 6);
    let o = coxtw(&["--type", "A~2", "--biclosed", "hat 0,1,0::", "hasse", "--radius", "3", "--format", "json"]);
    let text = stdout(&o);
    let g = HasseGraph::from_json(&text).unwrap();
    assert_eq!(g.to_json() + "\n", text);
    assert_eq!(g.nodes.len(), 19);
}

#[test]
fn classify_reports() {
    let o = coxtw(&["--type", "A~1", "classify", "--biclosed", "complement(empty)", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v, json!({"kind": "neither", "witness": [[1, 1], [-1, 1]]}));
    let o = coxtw(&["--type", "A~1", "classify", "--biclosed", "hat 0::", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["kind"], "infinite");
    let o = coxtw(&["--type", "B2", "classify", "--biclosed", "invset 0,1", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["witness"], json!([0, 1]));
}

#[test]
fn order_queries() {
    let b = ["--type", "A~1", "--biclosed", "hat 0::"];
    let run = |rest: &[&str]| stdout(&coxtw(&[&b[..], rest].concat()));
    assert_eq!(run(&["tlen", "1,0"]), "-2\n");
    assert_eq!(run(&["le", "1", "0"]), "true\n");
    assert_eq!(run(&["chain", "1", "0"]), "s_{δ-a}\ne\ns_a\n");
    assert_eq!(run(&["interval", "1,0", "0"]).lines().count(), 4);
    assert_eq!(run(&["meet", "0", "1"]), "s_{δ-a}\n");
    assert_eq!(run(&["meet", "0", "1", "--join"]), "s_a\n");
    assert_eq!(run(&["invset", "1,0"]), "-a+δ\n-a+2δ\n");
    assert!(run(&["check", "--format", "json"]).contains("\"status\": \"ok\""));
}

#[test]
fn exit_codes_and_caps() {
    assert_eq!(coxtw(&["--type", "A2", "frobnicate"]).status.code(), Some(1));
    assert_eq!(coxtw(&["ball"]).status.code(), Some(1));
    assert_eq!(coxtw(&["--type", "A2", "--biclosed", "hat (", "tlen", "0"]).status.code(), Some(1));
    assert_eq!(coxtw(&["--type", "A2", "tlen", "0", "--format", "dot"]).status.code(), Some(1));
    assert_eq!(coxtw(&["--type", "A~1", "--biclosed", "hat 0::", "chain", "0", "1"]).status.code(), Some(2));
    assert_eq!(coxtw(&["--type", "A~2", "meet", "0", "1,2", "--biclosed", "full"]).status.code(), Some(2));
    assert_eq!(stdout(&coxtw(&["--type", "A~2", "meet", "0", "1", "--biclosed", "full"])), "s_a s_b s_a (within ball(3))\n");
    assert_eq!(coxtw(&["--type", "A~1", "ball", "9"]).status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_coxtw"))
        .args(["--type", "A~1", "ball", "9"])
        .env("COXTW_MAX_BALL", "12")
        .output()
        .unwrap();
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 19);
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("coxtw-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("fig.dot");
    let o = coxtw(&["figure", "a1-twist", "--format", "dot", "--out", path.to_str().unwrap()]);
    assert!(o.status.success() && o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), include_str!("golden/a1_twist.dot"));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn cartan_file_and_selftest() {
    let dir = std::env::temp_dir().join(format!("coxtw-cartan-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("b2.txt");
    std::fs::write(&path, "rank 2\n2 -2\n-1 2\n").unwrap();
    let o = coxtw(&["--cartan", path.to_str().unwrap(), "ball", "4"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o).lines().count(), 8);
    std::fs::remove_dir_all(dir).unwrap();
    let o = coxtw(&["--type", "A~1", "selftest", "--format", "json"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["mismatches"], 0);
}
