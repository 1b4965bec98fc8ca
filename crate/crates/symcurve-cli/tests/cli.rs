//! End-to-end tests of the `symcurve` binary: exit codes, output formats,
//! stdin handling, and the gen/detect round trip.

use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_symcurve"))
}

fn run_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .take()
        .expect("stdin piped")
        .write_all(input.as_bytes())
        .expect("stdin accepts input");
    child.wait_with_output().expect("binary exits")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is utf-8")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("stderr is utf-8")
}

#[test]
fn detect_reads_stdin_and_reports_central_symmetry() {
    let output = run_with_stdin(&["detect"], "x(t) = t^3 - 2t^2\ny(t) = t\n");
    assert_eq!(output.status.code(), Some(0), "{}", stderr(&output));
    let text = stdout(&output);
    assert!(text.contains("central: yes (beta = 4/3)"));
    assert!(text.contains("center: (-16/27, 2/3)"));
    assert!(text.contains("mirror: no ("));
    assert!(text.contains("oracle: verified"));
}

#[test]
fn detect_emits_machine_readable_json() {
    let output = run_with_stdin(
        &["detect", "--format", "json"],
        "x(t) = t^2\ny(t) = t^3 - t\n",
    );
    assert_eq!(output.status.code(), Some(0), "{}", stderr(&output));
    let json: serde_json::Value = serde_json::from_str(&stdout(&output)).expect("valid json");
    assert_eq!(json["class"], "proper");
    assert_eq!(json["mirror"]["symmetric"], true);
    assert_eq!(json["mirror"]["axis"]["A"], "0");
    assert_eq!(json["mirror"]["axis"]["B"], "1");
    assert_eq!(json["mirror"]["axis"]["C"], "0");
    assert_eq!(json["central"]["symmetric"], false);
}

#[test]
fn detect_reads_files_and_dash_means_stdin() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cubic.curve");
    std::fs::write(&path, "x(t) = -6 + 15t^3 - 4t\ny(t) = -2 + 2t^3 - t\n").unwrap();
    let output = bin().arg("detect").arg(&path).output().unwrap();
    assert_eq!(output.status.code(), Some(0));
    assert!(stdout(&output).contains("center: (-6, -2)"));

    let dashed = run_with_stdin(&["detect", "-"], "x(t) = t\ny(t) = t^2\n");
    assert_eq!(dashed.status.code(), Some(0));
}

#[test]
fn parse_errors_exit_one_with_position() {
    let output = run_with_stdin(&["detect"], "x(t) = t +\ny(t) = t\n");
    assert_eq!(output.status.code(), Some(1));
    assert!(stderr(&output).contains("parse error"));

    let missing = bin().args(["detect", "/nonexistent/path.curve"]).output().unwrap();
    assert_eq!(missing.status.code(), Some(1));
}

#[test]
fn degenerate_and_improper_inputs_exit_two() {
    let improper = run_with_stdin(&["detect"], "x(t) = t^2\ny(t) = t^4\n");
    assert_eq!(improper.status.code(), Some(2));
    assert!(stdout(&improper).contains("traced 2 times"));

    let point = run_with_stdin(&["detect"], "x(t) = 3\ny(t) = 5\n");
    assert_eq!(point.status.code(), Some(2));
    assert!(stdout(&point).contains("class: point"));

    let line = run_with_stdin(&["detect"], "x(t) = t^2\ny(t) = t^2 + 1\n");
    assert_eq!(line.status.code(), Some(2));
    assert!(stdout(&line).contains("class: line"));
}

#[test]
fn gen_writes_curve_and_truth_that_detect_confirms() {
    let dir = tempfile::tempdir().unwrap();
    let curve_path = dir.path().join("planted.curve");
    let output = bin()
        .args(["gen", "--kind", "central", "--degree", "9", "--seed", "3", "--out"])
        .arg(&curve_path)
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0), "{}", stderr(&output));
    let truth_path = dir.path().join("planted.curve.truth.json");
    assert!(curve_path.exists() && truth_path.exists());

    let truth: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&truth_path).unwrap()).unwrap();
    assert_eq!(truth["kind"], "central");

    let detect = bin()
        .args(["detect", "--format", "json"])
        .arg(&curve_path)
        .output()
        .unwrap();
    assert_eq!(detect.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&detect)).unwrap();
    assert_eq!(report["central"]["symmetric"], true);
    assert_eq!(report["central"]["beta"], truth["beta"]);
    assert_eq!(report["central"]["center"]["x"], truth["center"]["x"]);
    assert_eq!(report["central"]["center"]["y"], truth["center"]["y"]);
    assert_eq!(report["oracle_verified"], true);
}

#[test]
fn gen_rejects_even_central_degree() {
    let output = bin()
        .args(["gen", "--kind", "central", "--degree", "8", "--seed", "1"])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(1));
    assert!(stderr(&output).contains("odd degree"));
}

#[test]
fn gen_is_deterministic_per_seed() {
    let dir = tempfile::tempdir().unwrap();
    let path_a = dir.path().join("a.curve");
    let path_b = dir.path().join("b.curve");
    for path in [&path_a, &path_b] {
        let output = bin()
            .args(["gen", "--kind", "mirror", "--degree", "6", "--seed", "11", "--out"])
            .arg(path)
            .output()
            .unwrap();
        assert_eq!(output.status.code(), Some(0));
    }
    assert_eq!(
        std::fs::read_to_string(&path_a).unwrap(),
        std::fs::read_to_string(&path_b).unwrap()
    );
}

#[test]
fn bench_runs_a_single_fixture_row() {
    let output = bin()
        .args(["bench", "--only", "appendix-03", "--format", "json"])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0), "{}", stderr(&output));
    let json: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    let rows = json["suite"].as_array().unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["id"], "appendix-03");
    assert_eq!(rows[0]["degree"], 3);
    assert_eq!(rows[0]["central"], true);
    assert_eq!(rows[0]["mirror"], false);
    assert!(rows[0]["millis"].as_f64().unwrap() >= 0.0);
}

#[test]
fn bench_scaling_reports_a_slope() {
    let output = bin()
        .args([
            "bench", "--scaling", "--degrees", "8,16", "--seed", "5", "--format", "json",
        ])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0), "{}", stderr(&output));
    let json: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert!(json.get("suite").is_none(), "scaling alone skips the suite");
    assert_eq!(json["scaling"].as_array().unwrap().len(), 2);
    assert!(json["slope"].as_f64().is_some());

    let text = bin()
        .args(["bench", "--scaling", "--degrees", "8,16", "--seed", "5"])
        .output()
        .unwrap();
    assert!(stdout(&text).contains("log-log slope:"));
}

#[test]
fn usage_errors_do_not_collide_with_detect_exit_codes() {
    let output = bin().args(["gen", "--kind", "sideways"]).output().unwrap();
    assert_eq!(output.status.code(), Some(1));

    let help = bin().arg("--help").output().unwrap();
    assert_eq!(help.status.code(), Some(0));
    assert!(stdout(&help).contains("detect"));
}

fn workspace_fixture(name: &str) -> std::path::PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../symcurve/fixtures/v1")
        .join(name)
}

#[test]
fn detect_matches_the_catalogued_axis_for_a_fixture_file() {
    let output = bin()
        .args(["detect", "--format", "json"])
        .arg(workspace_fixture("appendix-06.curve"))
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(json["mirror"]["symmetric"], true);
    assert_eq!(json["mirror"]["axis"]["A"], "1");
    assert_eq!(json["mirror"]["axis"]["B"], "1");
    assert_eq!(json["mirror"]["axis"]["C"], "0");
    assert_eq!(json["mirror"]["beta"], "-1");
}
