//! End-to-end runs of the `gkgraph` binary.

use std::path::Path;
use std::process::{Command, Output};

fn gkgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gkgraph")).args(args).env_remove("GKGRAPH_DATA").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn graph_file(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn classify_psl_graph_as_json() {
    let dir = tempfile::tempdir().unwrap();
    let psl = graph_file(dir.path(), "psl.txt", "2 3 7 13 ; 2-7 2-13 3-7 3-13 7-13");
    let o = gkgraph(&["--json", "classify-psl213", &psl]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["condition"], "2a");
    assert_eq!(v["X"], serde_json::json!([2, 3, 7, 13]));

    let k5 = graph_file(dir.path(), "k5.txt", "2 3 5 7 11 ; 2-3 2-5 2-7 2-11 3-5 3-7 3-11 5-7 5-11 7-11");
    assert_eq!(gkgraph(&["classify-psl213", &k5]).status.code(), Some(1));
}

#[test]
fn check_reports_triangles() {
    let dir = tempfile::tempdir().unwrap();
    let psl = graph_file(dir.path(), "psl.txt", "2 3 7 13 ; 2-7 2-13 3-7 3-13 7-13");
    let o = gkgraph(&["--json", "check", &psl]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["triangles"], serde_json::json!([[2, 7, 13], [3, 7, 13]]));
    assert_eq!(v["colorable"], true);
}

#[test]
fn realize_psl_and_path() {
    let dir = tempfile::tempdir().unwrap();
    let psl = graph_file(dir.path(), "psl.txt", "2 3 7 13 ; 2-7 2-13 3-7 3-13 7-13");
    let o = gkgraph(&["realize", &psl]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verification (symbolic): MATCH"));

    let path = graph_file(dir.path(), "path.txt", "2 3 7 ; 2-3 3-7");
    let o = gkgraph(&["realize", &path]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("verification (explicit): MATCH"), "{out}");
}

#[test]
fn enumerate_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("census");
    let o = gkgraph(&["enumerate", "--vertices", "2,3,7,13", "--out", out_dir.to_str().unwrap(), "--exemplars", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("total: 64"));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(out_dir.join("report.json")).unwrap()).unwrap();
    assert_eq!(report["total"], 64);
    assert!(out_dir.join("none_63.dot").exists());
    assert_eq!(gkgraph(&["enumerate", "--vertices", "2,3,5,7,11,13,17"]).status.code(), Some(2));
}

#[test]
fn applicability_and_data_override() {
    let o = gkgraph(&["applicability", "--group", "A_11"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("non-Fermat edge 7-11 on every triangle: PASS"));

    let bad = Command::new(env!("CARGO_BIN_EXE_gkgraph"))
        .args(["applicability", "--group", "A_11"])
        .env("GKGRAPH_DATA", "/nonexistent/groups.json")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).starts_with("error:"));
}

#[test]
fn help_and_usage_errors() {
    assert_eq!(gkgraph(&["--help"]).status.code(), Some(0));
    assert_eq!(gkgraph(&["no-such-command"]).status.code(), Some(2));
}
