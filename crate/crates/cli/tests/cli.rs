use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use affcell::corpus::gen_hecke_kl;
use affcell::LaurentPoly;

fn affcell(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_affcell")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write_s3(dir: &Path) -> String {
    let path = dir.join("s3.json");
    let o = affcell(&["gen", "hecke", "--rank", "2", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    path.to_str().unwrap().to_string()
}

fn write_corrupted_s3(dir: &Path) -> String {
    let alg = gen_hecke_kl(2).unwrap();
    let s1 = alg.index_of("s1").unwrap();
    let value = &alg.structure_constant(s1, s1, s1) + &LaurentPoly::one();
    let bad = alg.with_structure_constant(s1, s1, s1, value).unwrap();
    let path = dir.join("s3-bad.json");
    fs::write(&path, bad.to_json()).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn analyze_s3_passes_and_is_byte_stable() {
    let dir = tempfile::tempdir().unwrap();
    let table = write_s3(dir.path());
    let first = affcell(&["analyze", &table, "--format", "structured"]);
    let second = affcell(&["analyze", &table, "--format", "structured"]);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let report: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(report["passed"], true);
    assert_eq!(report["cells"].as_array().unwrap().len(), 3);
}

#[test]
fn analyze_writes_report_file() {
    let dir = tempfile::tempdir().unwrap();
    let table = write_s3(dir.path());
    let out = dir.path().join("report.txt");
    let o = affcell(&["analyze", &table, "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "overall: PASS");
    assert!(fs::read_to_string(out).unwrap().contains("PASS"));
}

#[test]
fn corrupted_table_exits_one_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let table = write_corrupted_s3(dir.path());
    let o = affcell(&["analyze", &table]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("P3"), "{err}");
    assert!(err.contains("s1"), "{err}");
}

#[test]
fn malformed_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("junk.json");
    fs::write(&path, "{ not json").unwrap();
    assert_eq!(affcell(&["analyze", path.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(affcell(&["analyze", "/nonexistent/table.json"]).status.code(), Some(2));
    assert_eq!(affcell(&["gen", "hecke", "--rank", "9"]).status.code(), Some(2));
    assert_eq!(affcell(&["lr", "--lambda", "1,2", "--mu", "1", "--nu", "2,2"]).status.code(), Some(2));
    assert_eq!(affcell(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn gen_sizes() {
    for (args, rank) in [
        (vec!["gen", "hecke", "--rank", "1"], 2),
        (vec!["gen", "hecke", "--rank", "2"], 6),
        (vec!["gen", "qschur", "--n", "2", "--r", "2"], 10),
    ] {
        let o = affcell(&args);
        assert!(o.status.success());
        let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(doc["basis"].as_array().unwrap().len(), rank, "{args:?}");
    }
}

#[test]
fn lr_tensor_and_dual() {
    assert_eq!(stdout(&affcell(&["lr", "--lambda", "2,1", "--mu", "2,1", "--nu", "3,2,1"])).trim(), "2");
    let t = stdout(&affcell(&["tensor", "--left", "1,0", "--right", "1,0"]));
    assert_eq!(t.lines().count(), 2, "{t}");
    assert_eq!(stdout(&affcell(&["dual", "--weight", "2,-1"])).trim(), "[(1,-2)]");
}

#[test]
fn dstat_and_segments() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a.json");
    fs::write(&path, r#"{"n": 2, "entries": [[1, 2, 1], [2, 1, 1]]}"#).unwrap();
    let o = affcell(&["dstat", path.to_str().unwrap(), "--format", "structured"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["row_sums"], serde_json::json!([1, 1]));
    let o = affcell(&["segments", "--r", "2", "--n", "2", "--alphabet", "a"]);
    assert!(stdout(&o).starts_with("2 multisegments"));
}
