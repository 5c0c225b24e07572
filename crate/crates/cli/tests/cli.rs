use std::process::{Command, Output};

use serde_json::Value;

fn rees_kit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rees-kit")).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn csv_rows(out: &Output) -> Vec<Vec<String>> {
    csv::ReaderBuilder::new()
        .has_headers(false)
        .from_reader(&out.stdout[..])
        .records()
        .map(|r| r.unwrap().iter().map(String::from).collect())
        .collect()
}

#[test]
fn analyze_quaternary_quadrics() {
    let out = rees_kit(&["analyze", "--vars", "x,y,z,w", "--ideal", "x^2,y^2,z^2,w^2,x*y+x*z+x*w+y*z", "--reduction-first", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["report"]["e1"], 12);
    assert_eq!(v["report"]["acm"], true);
    assert_eq!(v["report"]["schema"], "report-v1");
    assert_eq!(v["config"]["characteristic"], 32003);
    assert_eq!(v["version"], env!("CARGO_PKG_VERSION"));
}

#[test]
fn analyze_ideal_against_itself_has_reltype_one() {
    let out = rees_kit(&["analyze", "--vars", "x,y", "--ideal", "x^3,y^3", "--reduction", "x^3,y^3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["report"]["reltype"], 1);
}

#[test]
fn northcott_family_is_not_acm() {
    let out = rees_kit(&["family", "--name", "northcott"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["report"]["acm"], false);
    assert_eq!(v["report"]["f_sequence"], serde_json::json!([4, 3, 3, 1, 1, 1, 1]));
}

#[test]
fn mono_family_verifies_its_candidate() {
    let out = rees_kit(&["family", "--name", "mono", "--params", "3,3,3,1,1,1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["report"]["candidate"]["kernel_in_candidate"], true);
    assert_eq!(v["report"]["candidate"]["candidate_in_kernel"], true);
    assert_eq!(v["report"]["e1"], 12);
}

#[test]
fn mono_family_over_the_rationals() {
    let out = rees_kit(&["--characteristic", "0", "family", "--name", "mono", "--params", "3,3,3,1,1,1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["report"]["field"], "QQ");
    assert_eq!(v["report"]["characteristic"], 0);
    assert_eq!(v["report"]["e1"], 12);
}

#[test]
fn quaternary_tag_hf131() {
    let out = rees_kit(&["family", "--name", "quaternary", "--tag", "hf131"]);
    let v = json(&out);
    assert_eq!(v["report"]["h_vector_j_colon_a"], serde_json::json!([1, 3, 1]));
    assert_eq!(v["report"]["birational"], true);
}

#[test]
fn family_from_json_spec() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("spec.json");
    std::fs::write(&path, r#"{"name":"binary_matrix","matrix":{"kind":"linear","n":4}}"#).unwrap();
    let out = rees_kit(&["family", "--spec", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["report"]["f_sequence"], serde_json::json!([3, 2, 1]));
}

#[test]
fn input_errors_exit_one() {
    let out = rees_kit(&["family", "--name", "mono", "--params", "2,2,2,1,1,1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("precondition"));
    assert_eq!(rees_kit(&["analyze", "--vars", "x,y", "--ideal", "x y", "--reduction-first", "1"]).status.code(), Some(1));
    assert_eq!(rees_kit(&["--characteristic", "2", "verify"]).status.code(), Some(1));
    assert_eq!(rees_kit(&["--characteristic", "15", "verify"]).status.code(), Some(1));
    assert_eq!(rees_kit(&["--order", "lex", "verify"]).status.code(), Some(1));
    assert_eq!(rees_kit(&["frobnicate"]).status.code(), Some(1));
}

#[test]
fn stage_errors_exit_two_with_a_partial_report() {
    let out = rees_kit(&["analyze", "--vars", "x,y", "--ideal", "x^2,y^2", "--reduction", "x*y"]);
    assert_eq!(out.status.code(), Some(2));
    let v = json(&out);
    assert_eq!(v["report"]["complete"], false);
    assert_eq!(v["report"]["errors"][0]["stage"], "setup");
}

#[test]
fn quick_suite_passes() {
    let out = rees_kit(&["verify", "--suite", "quick", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["failed"], 0);
    assert_eq!(v["passed"], 3);
}

#[test]
fn full_suite_passes() {
    let out = rees_kit(&["verify", "--suite", "full", "--format", "text"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(out.status.code(), Some(0), "{text}");
    assert_eq!(rees_kit(&["verify", "--suite", "paper", "--format", "text"]).stdout, out.stdout);
    assert!(text.contains("PASS  quaternary quadrics (1,4,1)"));
    assert!(text.contains("PASS  Northcott ideal, not aCM"));
}

#[test]
fn tampered_expectations_exit_three() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tampered.json");
    let text = include_str!("../expectations/quick.json").replacen("\"e1\": 3", "\"e1\": 4", 1);
    std::fs::write(&path, text).unwrap();
    let out = rees_kit(&["verify", "--expectations", path.to_str().unwrap(), "--format", "csv"]);
    assert_eq!(out.status.code(), Some(3));
    let rows = csv_rows(&out);
    assert_eq!(rows[1][2], "FAIL");
    assert!(rows[1][3].contains("e1: expected 4, got 3"));
    assert_eq!(rows[2][2], "PASS");
}

#[test]
fn reports_are_byte_identical() {
    let args = ["family", "--name", "quadrics", "--seed", "5"];
    let a = rees_kit(&args);
    let b = rees_kit(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["config"]["seed"], 5);
}

#[test]
fn binary_sweep_has_descending_f_sequences() {
    let out = rees_kit(&["sweep", "--family", "binary", "--params", "3..6"]);
    assert_eq!(out.status.code(), Some(0));
    let rows = csv_rows(&out);
    assert_eq!(rows.len(), 5);
    for (row, n) in rows[1..].iter().zip(3u32..) {
        let expected: Vec<String> = (1..n).rev().map(|k| k.to_string()).collect();
        assert_eq!(row[5], expected.join(" "));
    }
}

#[test]
fn mono_sweep_rows_are_acm() {
    let out = rees_kit(&["sweep", "--family", "mono", "--params", "4..5,4..5,4..6,1,1,1"]);
    assert_eq!(out.status.code(), Some(0));
    let rows = csv_rows(&out);
    assert_eq!(rows.len(), 13);
    assert_eq!(rows[1][1], "4 4 4 1 1 1");
    assert_eq!(rows[12][1], "5 5 6 1 1 1");
    assert!(rows[1..].iter().all(|r| r[7] == "true"));
}

#[test]
fn sweep_order_does_not_depend_on_pool_width() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_rees-kit"))
            .env("REES_KIT_THREADS", threads)
            .args(["sweep", "--family", "quadrics", "--params", "0..5"])
            .output()
            .unwrap()
    };
    let one = run("1");
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, run("4").stdout);
    assert_eq!(run("zero").status.code(), Some(1));
}

#[test]
fn empty_sweep_is_header_only() {
    let out = rees_kit(&["sweep", "--family", "binary", "--params", "6..3"]);
    assert_eq!(out.status.code(), Some(0));
    let rows = csv_rows(&out);
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0][0], "family");
}

#[test]
fn output_file_and_text_format() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.txt");
    let out = rees_kit(&["family", "--name", "binary", "--n", "3", "--format", "text", "-o", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("f_sequence: (2, 1)"));
    assert!(text.contains("characteristic 32003"));
}
