use std::process::{Command, Output};

use serde_json::Value;

fn tautilt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tautilt")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = tautilt(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("JSON output")
}

#[test]
fn enumerate_a3() {
    let v = json(&["enumerate", "--preset", "A3"]);
    assert_eq!(v["count"], 14);
    let sizes: Vec<u64> = v["by_module_count"].as_array().unwrap().iter().map(|r| r["count"].as_u64().unwrap()).collect();
    assert_eq!(sizes, vec![5, 5, 3, 1]);
}

#[test]
fn enumerate_e6_tilting() {
    let v = json(&["enumerate", "--preset", "E6", "--tilting-only"]);
    assert_eq!(v["count"], 418);
}

#[test]
fn infinite_preset_needs_depth() {
    assert_eq!(tautilt(&["enumerate", "--preset", "K2"]).status.code(), Some(2));
}

#[test]
fn a2_graph_is_a_pentagon() {
    let out = tautilt(&["graph", "--preset", "A2", "--format", "dot"]);
    assert!(out.status.success());
    let dot = String::from_utf8(out.stdout).unwrap();
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches(" -> ").count(), 5);
    assert_eq!(dot.matches("label=").count(), 10);
}

#[test]
fn kronecker_chain() {
    let v = json(&["graph", "--preset", "K2", "--depth", "4"]);
    let labels: Vec<&str> = v["vertices"].as_array().unwrap().iter().map(|x| x["label"].as_str().unwrap()).collect();
    for l in ["(1,0)+(2,1)", "(2,1)+(3,2)", "(3,2)+(4,3)", "(4,3)+(5,4)", "(1,0) | P{2}", "0 | P{1,2}", "(0,1) | P{1}", "(1,2)+(0,1)"] {
        assert!(labels.contains(&l), "{l} missing from {labels:?}");
    }
    assert_eq!(v["exhaustive"], false);
}

#[test]
fn d4_tilting_quiver() {
    let v = json(&["graph", "--preset", "D4", "--tilting-only"]);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 20);
    assert_eq!(v["edges"].as_array().unwrap().len(), 32);
}

#[test]
fn w4_coxeter_matrix() {
    let v = json(&["coxeter", "--preset", "W4"]);
    assert_eq!(v["coxeter"], serde_json::json!([[-1, 2, 0, 0], [-2, 3, 1, 0], [-2, 3, 1, -1], [0, 0, 1, -1]]));
}

#[test]
fn a2_complements() {
    let v = json(&["complements", "--preset", "A2", "--module", "1,1"]);
    assert_eq!(v["complements"].as_array().unwrap().len(), 2);
    assert_eq!(v["exchange_sequence"]["valid"], true);
}

#[test]
fn mutate_and_bongartz() {
    let v = json(&["mutate", "--preset", "A3", "--at", "1,0,0"]);
    assert_eq!(v["mutations"][0]["added"], "(0,1,0)");
    let v = json(&["bongartz", "--preset", "A3", "--module", "0,1,0"]);
    assert_eq!(v["agree"], true);
}

#[test]
fn verify_a4_passes() {
    let out = tautilt(&["verify", "--preset", "A4", "--all"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], true);
}

#[test]
fn exit_codes() {
    assert_eq!(tautilt(&["enumerate", "--preset", "Z3"]).status.code(), Some(3));
    assert_eq!(tautilt(&["enumerate", "--preset", "E7"]).status.code(), Some(4));
    assert_eq!(tautilt(&["complements", "--preset", "A2", "--module", "2,2"]).status.code(), Some(3));
    assert_eq!(tautilt(&["enumerate", "--preset", "A2", "--out", "/nonexistent/dir/x.json"]).status.code(), Some(5));
    assert_eq!(tautilt(&["enumerate"]).status.code(), Some(2));
}

#[test]
fn dsl_input() {
    let path = std::env::temp_dir().join(format!("tautilt-cli-{}.quiver", std::process::id()));
    std::fs::write(&path, "quiver Q\nvertex 1 2 3\narrow a 2 1\narrow b 3 2\n").unwrap();
    let v = json(&["enumerate", "--input", path.to_str().unwrap()]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(v["count"], 14);
    std::fs::write(&path, "quiver C\nvertex 1 2\narrow a 1 2\narrow b 2 1\n").unwrap();
    let code = tautilt(&["enumerate", "--input", path.to_str().unwrap()]).status.code();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(code, Some(3));
}

#[test]
fn output_is_reproducible() {
    let a = tautilt(&["graph", "--preset", "D4", "--workers", "1"]).stdout;
    let b = tautilt(&["graph", "--preset", "D4", "--workers", "3"]).stdout;
    assert_eq!(a, b);
}
