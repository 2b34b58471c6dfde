//! End-to-end tests running the compiled binary.

use std::path::PathBuf;
use std::process::{Command, Output};

fn latframe(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_latframe"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn graphs_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../graphs")
        .canonicalize()
        .expect("graphs directory exists")
}

#[test]
fn lattice_json_on_the_hexagon() {
    let out = latframe(&["lattice", "oruga:3", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["elements"].as_array().unwrap().len(), 6);
    assert_eq!(value["covers"].as_array().unwrap().len(), 6);
}

#[test]
fn reconstruct_prints_both_stages() {
    let out = latframe(&["reconstruct", "oruga:2", "--bricks", "[1:u1|d1>·<u2|d2:1]"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("stage 1"));
    assert!(text.contains("[1:u1|d1>·u2"));
    assert!(text.contains("stage 2"));
    for route in ["u1-u2", "d1-u2", "d1-d2"] {
        assert!(text.contains(route), "missing {route} in {text}");
    }
}

#[test]
fn check_passes_on_builtins_and_files() {
    for input in ["caracol:2", "oruga:3", "random:7"] {
        let out = latframe(&["check", input]);
        assert_eq!(exit_code(&out), 0, "check {input}: {}", stdout(&out));
        assert!(stdout(&out).contains("all checks passed"));
    }
    let path = graphs_dir().join("skip.fg");
    let out = latframe(&["check", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
}

#[test]
fn routes_from_a_file() {
    let path = graphs_dir().join("oruga2.fg");
    let out = latframe(&["routes", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines, vec!["u1-u2", "u1-d2", "d1-u2", "d1-d2"]);
}

#[test]
fn exit_codes_are_distinct() {
    // Usage: unknown subcommand.
    let out = latframe(&["frobnicate", "oruga:2"]);
    assert_eq!(exit_code(&out), 1);
    // Usage: bad builtin size.
    let out = latframe(&["routes", "oruga:zero"]);
    assert_eq!(exit_code(&out), 1);
    // Parse error in a file.
    let dir = std::env::temp_dir();
    let bad = dir.join("latframe-bad-test.fg");
    std::fs::write(&bad, "vertices 2 base1\nedge a 2 1\n").unwrap();
    let out = latframe(&["routes", bad.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 2);
    // Missing file.
    let out = latframe(&["routes", "/nonexistent/graph.fg"]);
    assert_eq!(exit_code(&out), 2);
    // Route limit.
    let out = latframe(&["lattice", "oruga:6", "--route-limit", "10"]);
    assert_eq!(exit_code(&out), 3);
    // Invalid element reference.
    let out = latframe(&["bricks", "oruga:2", "99"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn compare_by_route_list_and_witness() {
    let out = latframe(&["compare", "oruga:2", "u1-u2,d1-u2,d1-d2", "0"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("greater"));
    assert!(text.contains("witness"));
}

#[test]
fn dot_export_is_stable() {
    let a = latframe(&["export-dot", "caracol:3"]);
    let b = latframe(&["export-dot", "caracol:3"]);
    assert_eq!(exit_code(&a), 0);
    assert_eq!(stdout(&a), stdout(&b));
    assert!(stdout(&a).starts_with("digraph framing_lattice {"));
    assert!(stdout(&a).contains("->"));
}

#[test]
fn coords_json_shape() {
    let out = latframe(&["coords", "caracol:2", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["left_corners"].as_array().unwrap().len(), 1);
    assert_eq!(value["elements"].as_array().unwrap().len(), 2);
}
