//! End-to-end tests of the `mulfree` binary: output shapes, exit codes,
//! determinism, and the sibling files written next to CSV study tables.

use std::path::Path;
use std::process::{Command, Output};

fn mulfree(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mulfree"))
        .args(args)
        .output()
        .expect("binary launches")
}

fn stdout_str(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is utf-8")
}

fn stderr_str(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("stderr is utf-8")
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("process not killed by signal")
}

#[test]
fn identities_suite_passes_and_reports_each_check() {
    let output = mulfree(&["identities"]);
    assert_eq!(exit_code(&output), 0, "stderr: {}", stderr_str(&output));
    let stdout = stdout_str(&output);
    let mut lines = stdout.lines();
    assert_eq!(lines.next(), Some("status,name,deviation,tolerance"));
    let rows: Vec<&str> = lines.collect();
    assert!(rows.len() >= 25, "suite shrank to {} checks", rows.len());
    for row in rows {
        assert!(row.starts_with("pass,"), "failing check row: {row}");
        assert_eq!(row.split(',').count(), 4, "malformed row: {row}");
    }
}

#[test]
fn identities_json_is_parseable() {
    let output = mulfree(&["identities", "--format", "json"]);
    assert_eq!(exit_code(&output), 0);
    let checks: serde_json::Value =
        serde_json::from_str(&stdout_str(&output)).expect("valid json");
    let checks = checks.as_array().expect("an array of checks");
    assert!(checks.len() >= 25);
    for check in checks {
        assert!(check["name"].is_string());
        assert!(check["deviation"].is_number());
        assert!(check["tolerance"].is_number());
        assert_eq!(check["pass"], serde_json::Value::Bool(true));
    }
}

#[test]
fn hermite_study_writes_table_and_siblings() {
    let dir = tempfile::tempdir().expect("temp dir");
    let table = dir.path().join("h.csv");
    let output = mulfree(&[
        "hermite",
        "--s",
        "1",
        "--n-grid",
        "8,16",
        "--k-max",
        "2",
        "--steps",
        "32",
        "--out",
        table.to_str().expect("utf-8 path"),
    ]);
    assert_eq!(exit_code(&output), 0, "stderr: {}", stderr_str(&output));

    let table_text = std::fs::read_to_string(&table).expect("study table");
    let mut lines = table_text.lines();
    assert_eq!(
        lines.next(),
        Some("n,k,empirical_re,empirical_im,limit_re,limit_im,abs_error,route_gap,noise_floor"),
    );
    assert_eq!(lines.count(), 4, "two degrees times two orders");

    let moments_text =
        std::fs::read_to_string(dir.path().join("h_limit_moments.csv")).expect("limit moments");
    let mut lines = moments_text.lines();
    assert_eq!(lines.next(), Some("k,re,im"));
    assert_eq!(lines.count(), 2);

    let trajectory_text =
        std::fs::read_to_string(dir.path().join("h_trajectory.csv")).expect("trajectory");
    let mut lines = trajectory_text.lines();
    assert_eq!(lines.next(), Some("s,k,re,im"));
    assert_eq!(lines.count(), 2 * 33, "two orders at each of 33 grid points");

    // With the table in a file, the human rate summary goes to stdout.
    assert!(stdout_str(&output).contains("slope"));
}

#[test]
fn study_stdout_is_deterministic() {
    let args =
        ["hermite", "--s", "-1", "--n-grid", "8,12", "--k-max", "2", "--steps", "16"];
    let first = mulfree(&args);
    let second = mulfree(&args);
    assert_eq!(exit_code(&first), 0);
    assert_eq!(exit_code(&second), 0);
    assert!(!first.stdout.is_empty());
    assert_eq!(first.stdout, second.stdout, "repeated runs must match byte for byte");
}

#[test]
fn complex_time_needs_the_exploratory_flag() {
    let gated = mulfree(&["hermite", "--s", "0.5+0.5i", "--n-grid", "6", "--k-max", "2"]);
    assert_eq!(exit_code(&gated), 2);
    assert!(stderr_str(&gated).contains("--exploratory"));

    let allowed = mulfree(&[
        "hermite",
        "--s",
        "0.5+0.5i",
        "--n-grid",
        "6",
        "--k-max",
        "2",
        "--exploratory",
    ]);
    assert_eq!(exit_code(&allowed), 0, "stderr: {}", stderr_str(&allowed));
}

#[test]
fn off_line_shift_needs_the_exploratory_flag() {
    let gated = mulfree(&["roots", "--n", "8", "--beta-re", "-0.3", "--gamma", "0.5"]);
    assert_eq!(exit_code(&gated), 2);
    assert!(stderr_str(&gated).contains("--exploratory"));

    let allowed = mulfree(&[
        "roots",
        "--n",
        "8",
        "--beta-re",
        "-0.3",
        "--gamma",
        "0.5",
        "--exploratory",
    ]);
    assert_eq!(exit_code(&allowed), 0, "stderr: {}", stderr_str(&allowed));
}

#[test]
fn roots_table_has_one_row_per_root() {
    let output = mulfree(&["roots", "--n", "12", "--s", "-1"]);
    assert_eq!(exit_code(&output), 0, "stderr: {}", stderr_str(&output));
    let stdout = stdout_str(&output);
    let mut lines = stdout.lines();
    assert_eq!(lines.next(), Some("index,re,im,abs,arg,residual"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 12);
    for row in rows {
        let fields: Vec<&str> = row.split(',').collect();
        assert_eq!(fields.len(), 6, "malformed row: {row}");
        let modulus: f64 = fields[3].parse().expect("parseable modulus");
        assert!((modulus - 1.0).abs() < 1e-10, "negative time keeps roots on the circle: {row}");
    }
}

#[test]
fn roots_json_has_the_solver_record() {
    let output =
        mulfree(&["roots", "--n", "8", "--beta-re", "1", "--gamma", "0.5", "--format", "json"]);
    assert_eq!(exit_code(&output), 0, "stderr: {}", stderr_str(&output));
    let record: serde_json::Value =
        serde_json::from_str(&stdout_str(&output)).expect("valid json");
    assert_eq!(record["roots"].as_array().expect("roots array").len(), 8);
    assert_eq!(record["residuals"].as_array().expect("residuals array").len(), 8);
    assert!(record["precision_bits"].is_number());
    assert!(record["sweeps"].is_number());
}

#[test]
fn laguerre_study_json_report_is_complete() {
    let output = mulfree(&[
        "laguerre",
        "--beta-re",
        "1",
        "--gamma",
        "0.5",
        "--n-grid",
        "8,16",
        "--k-max",
        "2",
        "--format",
        "json",
    ]);
    assert_eq!(exit_code(&output), 0, "stderr: {}", stderr_str(&output));
    let report: serde_json::Value =
        serde_json::from_str(&stdout_str(&output)).expect("valid json");
    assert_eq!(report["family"], "laguerre");
    assert_eq!(report["exploratory"], serde_json::Value::Bool(false));
    assert_eq!(report["cells"].as_array().expect("cells").len(), 4);
    assert_eq!(report["supports"].as_array().expect("supports").len(), 2);
    assert_eq!(report["rates"].as_array().expect("rates").len(), 2);
}

#[test]
fn family_flags_are_mutually_exclusive_and_required() {
    let conflicting =
        mulfree(&["roots", "--n", "8", "--s", "1", "--beta-re", "1", "--gamma", "0.5"]);
    assert_eq!(exit_code(&conflicting), 2);

    let missing = mulfree(&["roots", "--n", "8"]);
    assert_eq!(exit_code(&missing), 2);
    assert!(stderr_str(&missing).contains("pick one realization"));
}

#[test]
fn output_files_land_where_requested() {
    let dir = tempfile::tempdir().expect("temp dir");
    let path = dir.path().join("roots.csv");
    let output = mulfree(&[
        "roots",
        "--n",
        "6",
        "--s",
        "0.5",
        "--out",
        path.to_str().expect("utf-8 path"),
    ]);
    assert_eq!(exit_code(&output), 0, "stderr: {}", stderr_str(&output));
    assert!(Path::new(&path).exists());
    let text = std::fs::read_to_string(&path).expect("roots table");
    assert_eq!(text.lines().count(), 7, "header plus one row per root");
}
