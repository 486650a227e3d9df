use std::process::{Command, Output};

use burnside_cli::document::ReportDocument;

fn burnside(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_burnside"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn marks_of_c2() {
    let o = burnside(&["marks", "C2"]);
    assert!(o.status.success());
    let rows: Vec<Vec<String>> = stdout(&o)
        .lines()
        .skip(2)
        .map(|l| l.split_whitespace().map(String::from).collect())
        .collect();
    assert_eq!(rows, vec![vec!["B", "2", "0"], vec!["A", "1", "1"]]);
}

#[test]
fn marks_json() {
    let o = burnside(&["marks", "S3", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["order"], 6);
    assert_eq!(v["marks"].as_array().unwrap().len(), 4);
}

#[test]
fn quaternion_json_cokernel() {
    let o = burnside(&["analyze", "2D4", "--fields", "c", "--format", "json"]);
    assert!(o.status.success());
    let doc = ReportDocument::from_json(&stdout(&o)).unwrap();
    assert_eq!(doc.order, 8);
    assert_eq!(doc.cokernels.len(), 1);
    let c = &doc.cokernels[0];
    assert_eq!(c.free_rank, 0);
    assert_eq!(c.invariant_factors, vec![2]);
    assert_eq!(c.generators.len(), 1);
    assert_eq!(c.generators[0].order, 2);
    assert_eq!(c.generators[0].terms, vec![("rho5".to_string(), 1)]);
    assert_eq!(doc.surjective.get("C"), Some(&false));
}

#[test]
fn json_round_trips_through_the_binary() {
    let o = burnside(&["analyze", "2T", "--format", "json"]);
    let text = stdout(&o);
    let doc = ReportDocument::from_json(&text).unwrap();
    assert_eq!(doc.to_json(), text);
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s3.json");
    let o = burnside(&["analyze", "S3", "--format", "json", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let doc = ReportDocument::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc.group, "S3");
}

#[test]
fn group_file_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a4.group");
    std::fs::write(
        &path,
        "# alternating group on four points\nname: A4\ndomain: permutation 4\n1 2 0 3\n1 0 3 2\n",
    )
    .unwrap();
    let o = burnside(&["analyze", path.to_str().unwrap(), "--format", "json"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let doc = ReportDocument::from_json(&stdout(&o)).unwrap();
    assert_eq!(doc.group, "A4");
    assert_eq!(doc.order, 12);
    assert_eq!(doc.subgroups.len(), 5);
}

#[test]
fn malformed_group_file_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.group");
    std::fs::write(&path, "domain: permutation 3\n0 0 1\n").unwrap();
    let o = burnside(&["analyze", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

#[test]
fn exit_codes() {
    assert_eq!(burnside(&["list-groups"]).status.code(), Some(0));
    assert_eq!(burnside(&["analyze", "NoSuchGroup"]).status.code(), Some(2));
    assert_eq!(burnside(&["analyze", "C4", "--fields", "h"]).status.code(), Some(2));
    assert_eq!(burnside(&["frobnicate"]).status.code(), Some(2));
    let capped = Command::new(env!("CARGO_BIN_EXE_burnside"))
        .args(["analyze", "2I"])
        .env("BURNSIDE_ORDER_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&capped.stderr).starts_with("error: ["));
}

#[test]
fn latex_matches_golden() {
    let o = burnside(&["analyze", "2D4", "--format", "latex"]);
    assert!(o.status.success());
    let golden = include_str!("golden/2D4.tex");
    assert_eq!(stdout(&o), golden);
}

#[test]
fn chartab_fields() {
    let o = burnside(&["chartab", "S3", "--field", "q"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.trim_start().starts_with("rho")).count(), 3);
    let o = burnside(&["chartab", "C3", "--field", "int", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["table"]["rows"].as_array().unwrap().len(), 2);
}
