use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn golden() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/tests/golden")
}

fn frieze(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_frieze"))
        .args(args)
        .env("FRIEZE_SEED_GOLDEN", golden())
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = frieze(args);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("json output")
}

#[test]
fn gen_square() {
    let v = json(&["gen", r#"{"n":4,"diagonals":[[1,3]]}"#, "--format", "json"]);
    assert_eq!(v["rows"], serde_json::json!([[2, 1, 2, 1]]));
    let text = frieze(&["gen", "--n", "4", "--diagonals", "1-3"]);
    assert_eq!(
        String::from_utf8(text.stdout).unwrap(),
        " 0 0 0 0\n  1 1 1 1\n 1 2 1 2\n  1 1 1 1\n 0 0 0 0\n"
    );
}

#[test]
fn pipelines_and_quiddity_agree() {
    let a = json(&[
        "gen",
        "--n",
        "7",
        "--diagonals",
        "1-3,1-5,3-5,5-7",
        "--format",
        "json",
        "--pipeline",
        "ccmap",
    ]);
    // Triangles at each vertex of 1-3, 1-5, 3-5, 5-7.
    let b = json(&["gen", "--quiddity", "3,1,3,1,4,1,2", "--format", "json"]);
    let c = json(&[
        "gen",
        "--n",
        "7",
        "--diagonals",
        "1-3,1-5,3-5,5-7",
        "--format",
        "json",
    ]);
    assert_eq!(a, b);
    assert_eq!(a, c);
}

#[test]
fn golden_delta() {
    let v = json(&[
        "delta",
        "triangulation_14.json",
        "--at",
        "1-6",
        "--arc",
        "4-8",
        "--format",
        "json",
    ]);
    assert_eq!(v["delta"], 3);
    assert_eq!(v["region"], "BC");
    assert_eq!(v["values"], serde_json::json!([3, 2, 8, 5]));
    let all = json(&[
        "delta",
        "triangulation_14.json",
        "--at",
        "1-6",
        "--format",
        "json",
    ]);
    assert_eq!(all.as_array().unwrap().len(), 14 * 13 / 2);
}

#[test]
fn flip_sequence_returns() {
    let v = json(&[
        "flip",
        "--n",
        "6",
        "--diagonals",
        "1-3,1-4,1-5",
        "--seq",
        "1-4,3-5",
        "--format",
        "json",
    ]);
    let steps = v.as_array().unwrap();
    assert_eq!(steps[0]["new_diagonal"], serde_json::json!([3, 5]));
    assert_eq!(
        steps[1]["triangulation"]["diagonals"],
        serde_json::json!([[1, 3], [1, 4], [1, 5]])
    );
}

#[test]
fn render_round_trips_gen() {
    let f = json(&[
        "gen",
        "--n",
        "8",
        "--diagonals",
        "1-3,1-4,4-8,5-8,6-8",
        "--format",
        "json",
    ]);
    let grid = frieze(&["render", &f.to_string()]);
    let direct = frieze(&["gen", "--n", "8", "--diagonals", "1-3,1-4,4-8,5-8,6-8"]);
    assert!(grid.status.success());
    assert_eq!(grid.stdout, direct.stdout);
}

#[test]
fn verify_small_polygons() {
    let out = frieze(&["verify", "--n-max", "8", "--jobs", "2"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let a = frieze(&["verify", "--n-max", "6", "--jobs", "1", "--format", "json"]);
    let b = frieze(&["verify", "--n-max", "6", "--jobs", "3", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn enumerate_counts() {
    let v = json(&["enumerate", "--n", "7", "--format", "json"]);
    assert_eq!(v.as_array().unwrap().len(), 42);
}

#[test]
fn exit_codes() {
    assert_eq!(
        frieze(&["gen", "--n", "4", "--diagonals", "2-5"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        frieze(&["gen", "--n", "5", "--diagonals", "1-3,2-4"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        frieze(&["gen", "--quiddity", "2,2,2,2"]).status.code(),
        Some(1)
    );
    assert_eq!(
        frieze(&["delta", "no_such.json", "--at", "1-3"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(frieze(&["bogus"]).status.code(), Some(1));
    let bad = frieze(&["render", r#"{"n":4,"rows":[[2,1,2,2]],"offset":[0]}"#]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("Diamond"));
}
