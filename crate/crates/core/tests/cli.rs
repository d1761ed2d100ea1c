use std::path::PathBuf;
use std::process::Command;

use fle_comb::cli::{self, Config, Outcome};
use serde_json::Value;

fn run(args: &[&str]) -> Outcome {
    let mut all = vec!["fle-comb"];
    all.extend_from_slice(args);
    cli::run(all)
}

fn schema(name: &str) -> Value {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("schemas")
        .join(format!("{name}.schema.json"));
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn assert_valid(name: &str, args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    let s = schema(name);
    let compiled = jsonschema::JSONSchema::compile(&s).unwrap();
    if let Err(errors) = compiled.validate(&v) {
        let msgs: Vec<String> = errors.map(|e| e.to_string()).collect();
        panic!("{name} output does not match its schema: {msgs:?}");
    }
    v
}

#[test]
fn rootdata_json_is_schema_valid() {
    let v = assert_valid("rootdata", &["rootdata", "B", "3", "--json"]);
    assert_eq!(v["rank"], 3);
    assert_eq!(v["constants"]["factors"][0]["dual_coxeter_number"], 5);
}

#[test]
fn rootdata_table_lists_constants() {
    let out = run(&["rootdata", "G", "2"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("dual coxeter number   4"));
    assert!(out.stdout.contains("lacing number r       3"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["rootdata", "A", "0"]).code, 2);
    assert_eq!(run(&["rootdata", "Q", "2"]).code, 2);
    assert_eq!(run(&["good", "--type", "A2", "--level", "-h+x"]).code, 2);
    assert_eq!(
        run(&["dual-level", "--type", "A2", "--level", "-h"]).code,
        2
    );
    assert_eq!(run(&["frobnicate"]).code, 2);
    assert_eq!(run(&["match", "--type", "B2", "--level", "-h+1/3"]).code, 2);
}

#[test]
fn help_exits_0() {
    let out = run(&["--help"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("verify-duality"));
}

#[test]
fn every_command_is_schema_valid() {
    assert_valid(
        "dual-level",
        &["dual-level", "--type", "G2", "--level", "-h-2/5", "--json"],
    );
    assert_valid(
        "dual-level",
        &["dual-level", "--type", "B3", "--level", "irr", "--json"],
    );
    let g = assert_valid(
        "good",
        &["good", "--type", "E8", "--level", "-h+1/7", "--json"],
    );
    assert_eq!(g["good"], true);
    assert_valid(
        "good",
        &["good", "--type", "C2", "--level", "-h-1/2", "--json"],
    );
    assert_valid(
        "intweyl",
        &[
            "intweyl", "--type", "B2", "--level", "-h-1/4", "--bound", "4", "--json",
        ],
    );
    assert_valid(
        "blocks",
        &[
            "blocks", "--type", "A2", "--level", "-h-1/3", "--bound", "5", "--json",
        ],
    );
    let m = assert_valid(
        "match",
        &[
            "match", "--type", "A1", "--level", "-h-1/3", "--bound", "8", "--json",
        ],
    );
    assert_eq!(m["summary"]["verdict"], "MATCH");
    let d = assert_valid(
        "verify-duality",
        &[
            "verify-duality",
            "--type",
            "B2",
            "--level",
            "-h+1/2",
            "--json",
        ],
    );
    assert_eq!(d["verdict"], "MATCH");
    assert_valid(
        "parahoric",
        &[
            "parahoric",
            "--type",
            "A2",
            "--subset",
            "0",
            "--bound",
            "5",
            "--json",
        ],
    );
}

#[test]
fn output_is_deterministic() {
    let args = [
        "match", "--type", "B2", "--level", "-h-1/3", "--bound", "6", "--json",
    ];
    assert_eq!(run(&args), run(&args));
    let args = ["blocks", "--type", "G2", "--level", "irr", "--bound", "5"];
    assert_eq!(run(&args), run(&args));
}

#[test]
fn inconclusive_oracle_exits_3() {
    let out = run(&["good", "--type", "F4", "--level", "-h-1", "--width", "6"]);
    assert_eq!(out.code, 3);
}

#[test]
fn ball_cap_exits_3() {
    let out = run(&[
        "blocks", "--type", "A2", "--level", "-h-1/3", "--bound", "8", "--cap", "10",
    ]);
    assert_eq!(out.code, 3);
    assert!(out.stderr.contains("cap"));
}

#[test]
fn config_file_sets_defaults() {
    assert_eq!(
        Config::parse("# defaults\nbound = 3\ncap=500\n").unwrap(),
        Config { bound: 3, cap: 500 }
    );
    assert!(Config::parse("depth = 3").is_err());
    let dir = std::env::temp_dir().join(format!("fle-comb-config-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("defaults.conf");
    std::fs::write(&path, "bound = 2\n").unwrap();
    let p = path.to_str().unwrap();
    let out = run(&[
        "--config", p, "blocks", "--type", "A1", "--level", "-h-1/3", "--json",
    ]);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["bound"], 2);
    let out = run(&[
        "--config", p, "blocks", "--type", "A1", "--level", "-h-1/3", "--bound", "4", "--json",
    ]);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["bound"], 4);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn binary_reports_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_fle-comb");
    let ok = Command::new(bin)
        .args(["match", "--type", "A1", "--level", "-h-1/3", "--bound", "8"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("MATCH"));
    let bad = Command::new(bin)
        .args(["rootdata", "A", "0"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(!bad.stderr.is_empty());
}

#[test]
fn schemas_reject_malformed_reports() {
    let s = schema("match");
    let compiled = jsonschema::JSONSchema::compile(&s).unwrap();
    let mut v: Value = serde_json::from_str(
        &run(&["match", "--type", "A1", "--level", "-h-1/3", "--json"]).stdout,
    )
    .unwrap();
    assert!(compiled.is_valid(&v));
    v["summary"]["verdict"] = Value::from("MAYBE");
    assert!(!compiled.is_valid(&v));
}
