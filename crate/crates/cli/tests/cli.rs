use std::process::{Command, Output};

fn birestr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_birestr")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn decide_exit_codes() {
    let eq = birestr(&["decide", "M(x) x^*", "x"]);
    assert_eq!(eq.status.code(), Some(0));
    assert_eq!(stdout(&eq), "equal\n");

    let ne = birestr(&["decide", "M(x) M(y)", "M(x y)"]);
    assert_eq!(ne.status.code(), Some(1));
    assert_eq!(stdout(&ne), "unequal\n");

    let p = birestr(&["--variety", "p", "decide", "M(x) M(y)", "M(x y)"]);
    assert_eq!(p.status.code(), Some(0));
}

#[test]
fn errors_exit_two() {
    let bad = birestr(&["decide", "x z", "x"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).starts_with("error:"));

    let suite = birestr(&["--variety", "free", "suite", "eunitary"]);
    assert_eq!(suite.status.code(), Some(2));
}

#[test]
fn idempotent_depends_on_variety() {
    let free = birestr(&["--alphabet", "x", "idempotent", "[x] [xx]' [x]"]);
    assert_eq!(free.status.code(), Some(1));
    let ls = birestr(&["--alphabet", "x", "--variety", "ls", "idempotent", "[x] [xx]' [x]"]);
    assert_eq!(ls.status.code(), Some(0));
    assert_eq!(stdout(&ls), "true\n");
}

#[test]
fn closure_writes_dot_and_trace() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("g.dot");
    let trace = dir.path().join("t.txt");
    let out = birestr(&[
        "--dot",
        dot.to_str().unwrap(),
        "--trace",
        trace.to_str().unwrap(),
        "closure",
        "[x] [y]",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("trace "));
    let dot_text = std::fs::read_to_string(&dot).unwrap();
    assert!(dot_text.starts_with("digraph"));
    assert!(!std::fs::read_to_string(&trace).unwrap().is_empty());
}

#[test]
fn decide_json_schema() {
    let out = birestr(&["--format", "json", "decide", "x^+", "x x^*"]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["variety"], "free");
    assert_eq!(v["verdicts"]["equal"], false);
    for side in ["left", "right"] {
        let rec = &v[side];
        assert!(rec["u"].is_string());
        let graph = rec["graph"].as_str().unwrap();
        assert!(hex::decode(graph).is_ok());
        assert!(rec["verdicts"].is_object());
    }
}

#[test]
fn suite_json_is_deterministic() {
    let args = ["--seed", "7", "--format", "json", "suite", "confluence"];
    let a = birestr(&args);
    let b = birestr(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["suite"], "confluence");
    assert_eq!(v["failed"], 0);
    assert!(v["cases"].as_array().unwrap().len() > 0);
}

#[test]
fn crosscheck_pair() {
    let out = birestr(&["--variety", "p", "crosscheck", "M(x y)", "M(x) M(y)"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "equal (both models)\n");
    let partial = birestr(&["crosscheck", "x"]);
    assert_eq!(partial.status.code(), Some(2));
}
