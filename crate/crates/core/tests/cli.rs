use std::io::Write;
use std::process::{Command, Output, Stdio};

use kgraph::{fixtures, GraphDocument};
use serde_json::Value;

fn kgraph(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_kgraph"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn fixture_json(name: &str) -> String {
    let out = kgraph(&["fixture", name], "");
    assert_eq!(out.status.code(), Some(0));
    String::from_utf8(out.stdout).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn fixtures_round_trip_through_validate() {
    for name in fixtures::NAMES {
        let text = fixture_json(name);
        assert_eq!(GraphDocument::from_json(&text).unwrap(), fixtures::document(name).unwrap());
        let out = kgraph(&["validate", "-"], &text);
        assert_eq!(out.status.code(), Some(0), "{name}");
        assert_eq!(json(&out)["valid"], Value::Bool(true));
    }
}

#[test]
fn verdict_exit_codes() {
    let t2 = fixture_json("T2");
    let d = fixture_json("D");
    let p2 = fixture_json("P2");

    let out = kgraph(&["aperiodic", "-", "--bound", "1"], &t2);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["verdict"], "periodic");
    assert_eq!(json(&out)["bound"], 1);

    let out = kgraph(&["aperiodic", "-", "--bound", "2"], &p2);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["verdict"], "aperiodic_up_to_bound");

    let out = kgraph(&["cofinal", "-"], &d);
    assert_eq!(out.status.code(), Some(1));
    let out = kgraph(&["cofinal", "-"], &t2);
    assert_eq!(out.status.code(), Some(0));

    let out = kgraph(&["simple", "-"], &d);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["reason"], "not_cofinal");

    let out = kgraph(&["--jobs", "2", "simple", "-", "--bound", "2"], &p2);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["verdict"], "simple_up_to_bound");
    assert_eq!(json(&out)["bound"], 2);
}

#[test]
fn ideals_and_quotients() {
    let d2 = fixture_json("D2");
    let out = kgraph(&["ideals", "-", "--bound", "2"], &d2);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["saturated_hereditary"], serde_json::json!([[], ["u"], ["u", "w"]]));
    let offenders: Vec<&Value> = v["gauge"]["offenders"].as_array().unwrap().iter().map(|o| &o["set"]).collect();
    assert!(offenders.contains(&&serde_json::json!(["u"])));

    let out = kgraph(&["quotient", "-", "--set", "u"], &d2);
    assert_eq!(out.status.code(), Some(0));
    let q = GraphDocument::from_json(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    let t2 = kgraph(&["aperiodic", "-", "--bound", "1"], &q.to_json());
    assert_eq!(t2.status.code(), Some(1));
}

#[test]
fn invalid_input_exits_three() {
    for (args, input) in [
        (vec!["validate", "-"], "not json"),
        (vec!["simple", "-"], r#"{"k": 2, "vertices": ["v"], "edges": []}"#),
        (vec!["fixture", "X"], ""),
        (vec!["aperiodic", "-", "--bound", "zero"], ""),
    ] {
        let out = kgraph(&args, input);
        assert_eq!(out.status.code(), Some(3), "{args:?}");
        assert!(!out.stderr.is_empty() || !out.stdout.is_empty());
    }
    let out = kgraph(&["validate", "-"], r#"{"k": 2, "vertices": ["v"], "edges": []}"#);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(json(&out)["valid"], Value::Bool(false));
}

#[test]
fn text_mode_reports_bound() {
    let out = kgraph(&["--text", "aperiodic", "-", "--bound", "2"], &fixture_json("P2"));
    assert_eq!(out.status.code(), Some(0));
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.contains("bound 2"), "{s}");
}
