//! Black-box tests of the `connective` binary: spawn the real executable,
//! feed it spec files from a temp directory, and check stdout, stderr, and
//! exit codes.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_connective"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn write_spec(dir: &Path, name: &str, body: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, body).expect("write spec");
    path.display().to_string()
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}",
            String::from_utf8_lossy(&out.stdout)
        )
    })
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn mu_reports_certified_constant_as_json() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(
        dir.path(),
        "k2k3.spec",
        "# edge times triangle\nfactor complete 2\nfactor complete 3\n",
    );
    let out = run(&["mu", &spec]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));

    let v = stdout_json(&out);
    assert_eq!(v["command"], "mu");
    assert_eq!(v["factors"], serde_json::json!(["complete 2", "complete 3"]));
    assert_eq!(
        v["witness_denominator"],
        serde_json::json!(["1", "0", "-2", "-2"])
    );
    assert_eq!(v["certified"], true);
    assert_eq!(v["boundary"], false);

    let mu: f64 = v["mu"]["approx"].as_str().unwrap().parse().unwrap();
    assert!((mu - 1.76929).abs() <= 5e-5, "mu = {mu}");
    assert_eq!(v["z_star"]["exact"], false);
    assert!(v["amplitude"].is_object(), "amplitude enclosure expected");

    let diags = v["diagnostics"].as_array().unwrap();
    assert!(!diags.is_empty());
    for diag in diags {
        assert_eq!(diag["status"], "pass", "{}", diag["name"]);
    }
}

#[test]
fn mu_output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(
        dir.path(),
        "prod.spec",
        "factor complete 2\nfactor complete 3\nfactor complete 4\n",
    );
    let first = run(&["mu", &spec]);
    let second = run(&["mu", &spec]);
    assert_eq!(exit_code(&first), 0);
    assert_eq!(
        first.stdout, second.stdout,
        "two runs over the same spec must emit byte-identical output"
    );
}

#[test]
fn mu_flags_boundary_dominance_but_stays_certified() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), "line.spec", "factor complete 2\nfactor complete 2\n");
    let out = run(&["mu", &spec]);
    assert_eq!(exit_code(&out), 0, "boundary dominance alone must not fail the run");

    let v = stdout_json(&out);
    assert_eq!(v["certified"], true);
    assert_eq!(v["boundary"], true);
    assert_eq!(v["mu"]["exact"], true);
    assert_eq!(v["mu"]["lo"], "1");
}

#[test]
fn series_verify_confirms_brute_force() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), "k2k3.spec", "factor complete 2\nfactor complete 3\n");
    let out = run(&["series", &spec, "--verify", "-N", "8"]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));

    let v = stdout_json(&out);
    assert_eq!(v["command"], "series");
    assert_eq!(v["order"], 8);
    assert_eq!(v["verified"], true);

    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 9);
    assert_eq!(rows[0]["sigma"], "1");
    assert_eq!(rows[1]["sigma"], "3");
    for row in rows {
        assert_eq!(row["match"], true, "row {}", row["n"]);
        assert_eq!(row["sigma"], row["oracle"]);
    }
}

#[test]
fn series_verify_rejects_rational_factors() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(
        dir.path(),
        "mixed.spec",
        "factor complete 2\nfactor rational num=[0,2] den=[1,-1]\n",
    );
    let out = run(&["series", &spec, "--verify"]);
    assert_eq!(exit_code(&out), 64, "rational factors cannot be brute-forced");
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("rational"), "stderr: {stderr}");
}

#[test]
fn malformed_spec_reports_file_and_line() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(
        dir.path(),
        "broken.spec",
        "factor complete 2\nfactor dodecahedron 12\n",
    );
    let out = run(&["mu", &spec]);
    assert_eq!(exit_code(&out), 64);
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("broken.spec:2"), "stderr: {stderr}");
    assert!(stderr.contains("dodecahedron"), "stderr: {stderr}");
}

#[test]
fn missing_spec_file_is_an_io_error() {
    let out = run(&["mu", "/no/such/file.spec"]);
    assert_eq!(exit_code(&out), 1);
    assert!(!out.stderr.is_empty());
}

#[test]
fn table_sweeps_a_parameter_range() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), "family.spec", "factor cycle 2\nfactor cycle $n\n");
    let out = run(&["table", &spec, "--param", "n=4..6"]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));

    let v = stdout_json(&out);
    assert_eq!(v["command"], "table");
    assert_eq!(v["param"], "n");
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    for (row, expected_n) in rows.iter().zip([4u64, 5, 6]) {
        assert_eq!(row["value"], expected_n);
        assert_eq!(row["certified"], true);
    }
    let mu5: f64 = rows[1]["mu"]["approx"].as_str().unwrap().parse().unwrap();
    assert!((mu5 - 1.953502).abs() <= 5e-5, "mu(C2*C5) = {mu5}");
}

#[test]
fn table_requires_the_placeholder_to_match() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), "family.spec", "factor cycle 2\nfactor cycle $n\n");
    let out = run(&["table", &spec, "--param", "m=4..6"]);
    assert_eq!(exit_code(&out), 64);
}

#[test]
fn enumerate_counts_walks_of_a_named_family() {
    let out = run(&["enumerate", "complete:4", "-N", "3"]);
    assert_eq!(exit_code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["command"], "enumerate");
    let rows = v["rows"].as_array().unwrap();
    let counts: Vec<&str> = rows.iter().map(|r| r["count"].as_str().unwrap()).collect();
    assert_eq!(counts, ["1", "3", "6", "6"]);
}

#[test]
fn enumerate_reads_graph_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("triangle.graph");
    std::fs::write(&path, "root 0\nedge 0 1\nedge 1 2\nedge 2 0\n").unwrap();
    let out = run(&["enumerate", &path.display().to_string()]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let v = stdout_json(&out);
    let counts: Vec<&str> = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["count"].as_str().unwrap())
        .collect();
    assert_eq!(counts, ["1", "2", "2"], "walks in a triangle, by length");
}

#[test]
fn csv_format_emits_rows() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), "k2k3.spec", "factor complete 2\nfactor complete 3\n");
    let out = run(&["mu", &spec, "--csv"]);
    assert_eq!(exit_code(&out), 0);
    let text = String::from_utf8_lossy(&out.stdout);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("field,value"));
    assert!(text.contains("\nmu,"), "csv output: {text}");
    assert!(text.contains("certified,true"), "csv output: {text}");
}

#[test]
fn help_exits_zero() {
    let out = run(&["--help"]);
    assert_eq!(exit_code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).contains("Usage"));
}

#[test]
fn unknown_flags_are_usage_errors() {
    let out = run(&["mu", "--frobnicate"]);
    assert_eq!(exit_code(&out), 64);
}
