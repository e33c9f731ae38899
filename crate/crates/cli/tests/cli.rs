use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use hopf_jordan_cli::format::{parse, ReportFile};

fn corpus(file: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../corpus")
        .join(file)
}

fn run(args: &[&str], input: &Path) -> Output {
    run_with(args, input, &[])
}

fn run_with(args: &[&str], input: &Path, tail: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopf-jordan"))
        .args(args)
        .arg(input)
        .args(tail)
        .output()
        .unwrap()
}

fn write(dir: &tempfile::TempDir, name: &str, body: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn validate_accepts_every_corpus_model() {
    for f in ["trivial.json", "c4.json", "q8.json", "s3.json"] {
        let o = run(&["validate"], &corpus(f));
        assert_eq!(o.status.code(), Some(0), "{f}: {}", stderr(&o));
        assert!(stdout(&o).contains("contraction"));
    }
}

#[test]
fn validate_rejects_a_non_contraction_with_domain_exit() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(
        &dir,
        "expanding.json",
        r#"{"schema_version":"1","dimension":2,"generators":[[[[2,0],[0,0]],[[0,0],[2,0]]]],"contraction_index":0}"#,
    );
    let o = run(&["validate"], &p);
    assert_eq!(o.status.code(), Some(1), "{}", stderr(&o));
    assert!(stderr(&o).contains("contraction"));
}

#[test]
fn malformed_input_reports_the_json_path() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(
        &dir,
        "bad.json",
        r#"{"schema_version":"1","dimension":2,"generators":"oops","contraction_index":0}"#,
    );
    let o = run(&["validate"], &p);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("generators"), "{}", stderr(&o));

    let o = run(&["jordan"], &dir.path().join("missing.json"));
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn shape_mismatch_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(
        &dir,
        "shape.json",
        r#"{"schema_version":"1","dimension":3,"generators":[[[[0.5,0],[0,0]],[[0,0],[0.5,0]]]],"contraction_index":0}"#,
    );
    assert_eq!(run(&["jordan"], &p).status.code(), Some(2));
}

#[test]
fn jordan_prints_the_summary_line() {
    for (f, line) in [
        ("trivial.json", "order=1 jordan_index=1 certified=true"),
        ("c4.json", "order=4 jordan_index=1 certified=true"),
        ("q8.json", "order=8 jordan_index=2 certified=true"),
        ("s3.json", "order=6 jordan_index=2 certified=true"),
    ] {
        let o = run(&["jordan"], &corpus(f));
        assert_eq!(o.status.code(), Some(0), "{f}: {}", stderr(&o));
        assert_eq!(stdout(&o).lines().next(), Some(line));
    }
}

#[test]
fn json_report_round_trips() {
    let o = run(&["jordan", "--format", "json"], &corpus("q8.json"));
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let body = text.split_once('\n').unwrap().1;
    let report: ReportFile = parse(body).unwrap();
    assert_eq!(report.quotient_order, 8);
    assert_eq!(report.jordan_index, 2);
    assert_eq!(report.primary_quotient_order, 64);
    assert!(report.input_digest.starts_with("sha256:"));
    assert!(report.certificates.iter().all(|c| c.passed));
    assert!(report.timings.is_none());
    assert_eq!(report.to_json(), body);
}

#[test]
fn timings_appear_only_on_request() {
    let o = run(&["jordan", "--format", "json", "--timings"], &corpus("c4.json"));
    let body = stdout(&o).split_once('\n').unwrap().1.to_string();
    let report: ReportFile = parse(&body).unwrap();
    let stages: Vec<_> = report.timings.unwrap().into_iter().map(|t| t.stage).collect();
    assert_eq!(stages, ["parse", "validate", "extension", "jordan_index"]);
}

#[test]
fn root_of_diagonal_and_jordan_block() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(&dir, "diag.json", r#"{"matrix":[[[4,0],[0,0]],[[0,0],[9,0]]]}"#);
    let o = run_with(&["root", "--format", "json"], &p, &["2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let entry = |i: usize, j: usize| v["root"][i][j][0].as_f64().unwrap();
    assert!((entry(0, 0) - 2.0).abs() < 1e-12);
    assert!((entry(1, 1) - 3.0).abs() < 1e-12);
    assert!(entry(0, 1).abs() < 1e-12 && entry(1, 0).abs() < 1e-12);

    let o = run_with(&["root", "--format", "json"], &corpus("jordan_block.json"), &["2"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!((v["root"][0][1][0].as_f64().unwrap() - 0.25).abs() < 1e-12);
}

#[test]
fn root_of_singular_matrix_is_a_domain_error() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(&dir, "singular.json", r#"{"matrix":[[[0,0],[1,0]],[[0,0],[0,0]]]}"#);
    let o = run_with(&["root"], &p, &["2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).starts_with("error:"));

    let o = run_with(&["root"], &p, &["0"]);
    assert_eq!(o.status.code(), Some(2));
}
