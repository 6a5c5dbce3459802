use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn gbei(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gbei"))
        .args(args)
        .env_remove("GBEI_CAPS")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = gbei(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json output")
}

#[test]
fn bounds_on_strict_gap_fixture() {
    let v = json(&["bounds", "fig5", "--m", "2"]);
    assert_eq!(v["lower"], 6);
    assert_eq!(v["upper"], 8);
    assert_eq!(v["exact"], 7);
    assert_eq!(v["exactSource"], "StatedInstance");
}

#[test]
fn depth_with_oracle_on_cycle() {
    let v = json(&["depth", "cycle6", "--m", "2", "--oracle"]);
    assert_eq!(v["depth"], 6);
    assert_eq!(v["pd"], 6);
    assert_eq!(v["violations"], serde_json::json!([]));
}

#[test]
fn classify_reports_h1_witness() {
    let v = json(&["classify", "fig1"]);
    assert_eq!(v["h1"], true);
    assert_eq!(v["h1Witness"], serde_json::json!([1, 3, 4]));
}

#[test]
fn stats_and_cutsets() {
    let v = json(&["stats", "fig4"]);
    assert_eq!(v["invariants"]["n"], 5);
    let c = json(&["cutsets", "path3"]);
    assert!(c.is_object());
}

#[test]
fn decompose_verifies_path() {
    let v = json(&["decompose", "path4", "--m", "2"]);
    assert_eq!(v["verified"], true);
}

#[test]
fn export_scripts() {
    let out = gbei(&["export-cas", "path3", "--m", "2", "--dialect", "macaulay2"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("R = QQ[x_(1,1)..x_(2,3)];"));
    let out = gbei(&["export-cas", "path3", "--m", "2", "--dialect", "singular"]);
    assert!(String::from_utf8(out.stdout).unwrap().contains("minAssGTZ(I)"));
}

#[test]
fn graph_from_file_and_stdin() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.txt");
    std::fs::write(&path, "4\n1 2\n2 3\n3 4\n1 4\n").unwrap();
    let v = json(&["bounds", path.to_str().unwrap(), "--m", "2"]);
    assert_eq!(v["exact"], 4);

    let mut child = Command::new(env!("CARGO_BIN_EXE_gbei"))
        .args(["stats", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"3\n1 2\n2 3\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["invariants"]["n"], 3);
}

#[test]
fn fixtures_subcommand() {
    let out = gbei(&["fixtures", "list"]);
    let names = String::from_utf8(out.stdout).unwrap();
    assert!(names.lines().any(|l| l == "fig5"));
    let v = json(&["fixtures", "show", "fig4"]);
    assert_eq!(v["n"], 5);
}

#[test]
fn exit_codes() {
    assert_eq!(gbei(&["bounds", "fig5"]).status.code(), Some(2));
    assert_eq!(gbei(&["stats", "no-such-graph"]).status.code(), Some(2));
    assert_eq!(gbei(&["corpus", "--m", "2"]).status.code(), Some(2));
    let capped = Command::new(env!("CARGO_BIN_EXE_gbei"))
        .args(["depth", "fig5", "--m", "2", "--oracle"])
        .env("GBEI_CAPS", "gb_vars=8")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(3));
    let bad_caps = Command::new(env!("CARGO_BIN_EXE_gbei"))
        .args(["stats", "fig1"])
        .env("GBEI_CAPS", "bogus=1")
        .output()
        .unwrap();
    assert_eq!(bad_caps.status.code(), Some(2));
}

#[test]
fn corpus_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str, extra: &[&str]| -> Value {
        let out = dir.path().join(name);
        let mut args = vec!["corpus", "--n-range", "4..6", "--count", "6", "--m", "2,3", "--seed", "11", "--oracle"];
        args.extend_from_slice(extra);
        args.extend(["--out", out.to_str().unwrap()]);
        let status = gbei(&args).status;
        assert!(status.success());
        assert!(out.with_extension("csv").exists());
        let mut v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
        v.as_object_mut().unwrap().remove("generatedAt");
        v
    };
    let a = run("a.json", &[]);
    let b = run("b.json", &["--sequential"]);
    assert_eq!(a, b);
    assert_eq!(a["records"].as_array().unwrap().len(), 12);
    assert_eq!(a["schemaVersion"], 1);
}

#[test]
fn exhaustive_corpus_to_stdout() {
    let v = json(&["corpus", "--exhaustive", "--n", "4", "--m", "2"]);
    assert_eq!(v["records"].as_array().unwrap().len(), 6);
    assert_eq!(v["summary"]["violations"], 0);
}
