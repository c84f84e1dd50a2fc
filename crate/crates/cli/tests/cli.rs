//! End-to-end tests of the binary: report shapes, exit codes, SVG export,
//! and byte-level determinism of repeated runs.

use std::path::PathBuf;
use std::process::{Command, Output};

/// The double twist diagram with six crossings in each region, as produced
/// by the library's generator.
const D66: &str = "X(21,1,2,22) X(1,3,4,2) X(3,5,6,4) X(5,7,8,6) X(7,9,10,8) X(9,23,24,10) \
                   X(23,21,11,12) X(12,11,13,14) X(14,13,15,16) X(16,15,17,18) X(18,17,19,20) \
                   X(20,19,22,24)";

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_linkcert"))
}

fn tempdir(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("linkcert-test-{name}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn write_corpus(dir: &PathBuf) -> PathBuf {
    let path = dir.join("corpus.txt");
    std::fs::write(
        &path,
        "trefoil: X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)\n\
         % a comment line\n\
         gauss f8: O1 U2 O3 U4 O2 U1 O4 U3\n",
    )
    .unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

#[test]
fn analyze_reports_twist_regions_and_exit_zero() {
    let dir = tempdir("analyze");
    let corpus = write_corpus(&dir);
    let out = run(&["analyze", corpus.to_str().unwrap(), "--format", "json"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["command"], "analyze");
    let reports = doc["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 2);
    assert_eq!(reports[0]["label"], "trefoil");
    assert_eq!(reports[0]["twist_regions"].as_array().unwrap().len(), 1);
    assert_eq!(reports[1]["twist_regions"].as_array().unwrap().len(), 2);
}

#[test]
fn malformed_line_reported_others_processed() {
    let dir = tempdir("malformed");
    let path = dir.join("mixed.txt");
    std::fs::write(&path, "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)\nX(1,2,3)\n").unwrap();
    let out = run(&["analyze", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(2));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let reports = doc["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 2);
    assert!(reports[0]["error"].is_null());
    assert!(reports[1]["error"].is_string());
}

#[test]
fn certify_verdicts_and_exit_codes() {
    let dir = tempdir("certify");
    let path = dir.join("good.txt");
    std::fs::write(&path, format!("d66: {D66}\n")).unwrap();
    let out = run(&["certify", path.to_str().unwrap(), "--theorem", "hyp-link", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let cert = &doc["reports"][0]["certificates"][0];
    assert_eq!(cert["verdict"], "CERTIFIED");
    assert_eq!(cert["theorem"], "hyp-link");
    assert!(cert["input_digest"].as_str().unwrap().len() == 64);

    // the genus certificate carries the integer bound
    let out = run(&["certify", path.to_str().unwrap(), "--theorem", "genus-bound", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let cert = &doc["reports"][0]["certificates"][0];
    assert_eq!(cert["theorem"], "genus-bound");
    assert!(cert["genus_bound"].is_i64());

    // trefoil: inconclusive, exit 1
    let bad = dir.join("trefoil.txt");
    std::fs::write(&bad, "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)\n").unwrap();
    let out = run(&["certify", bad.to_str().unwrap(), "--theorem", "hyp-link"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn cusps_writes_svg_per_torus() {
    let dir = tempdir("cusps");
    let path = dir.join("d66.txt");
    std::fs::write(&path, format!("d66: {D66}\n")).unwrap();
    let out_dir = dir.join("svg");
    let out = run(&[
        "cusps",
        path.to_str().unwrap(),
        "--out",
        out_dir.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    // one knot component plus two crossing circles
    let mut files: Vec<_> = std::fs::read_dir(&out_dir)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    files.sort();
    assert_eq!(files.len(), 3, "{files:?}");
    for f in &files {
        let body = std::fs::read_to_string(out_dir.join(f)).unwrap();
        assert!(body.starts_with("<svg"));
        assert!(body.contains("meridian"));
        assert!(body.contains("longitude"));
    }
}

#[test]
fn oracle_passes_on_good_input() {
    let dir = tempdir("oracle");
    let path = dir.join("d66.txt");
    std::fs::write(&path, format!("{D66}\n")).unwrap();
    let out = run(&["oracle", path.to_str().unwrap(), "--limit", "12", "--format", "json"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let checks = doc["reports"][0]["checks"].as_array().unwrap();
    assert!(checks.len() >= 6);
    for c in checks {
        assert_eq!(c["pass"], true, "{c}");
    }
}

#[test]
fn repeated_runs_are_byte_identical() {
    let dir = tempdir("determinism");
    let corpus = write_corpus(&dir);
    let args = [
        "certify",
        corpus.to_str().unwrap(),
        "--theorem",
        "all",
        "--format",
        "json",
        "--jobs",
        "2",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout, "JSON reports must be byte-identical");
    let analyze_args = ["analyze", corpus.to_str().unwrap(), "--format", "json", "--jobs", "4"];
    let a = run(&analyze_args);
    let b = run(&analyze_args);
    assert_eq!(a.stdout, b.stdout);
}
