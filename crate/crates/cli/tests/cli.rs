//! End-to-end tests of the binary: exit codes, JSON-line report shape, and
//! byte-level determinism.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tuttelab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn poly_u24_coefficients() {
    let out = run(&["poly", "uniform:2,4", "--engine", "all"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(doc["rows"], 3);
    assert_eq!(doc["cols"], 3);
    assert_eq!(
        doc["coeffs"],
        serde_json::json!([["0", "2", "1"], ["2", "0", "0"], ["1", "0", "0"]])
    );
    assert_eq!(doc["engine"], "all-agree");
}

#[test]
fn poly_latex_format() {
    let out = run(&["poly", "uniform:2,4", "--format", "latex"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "x^{2} + 2x + 2y + y^{2}");
}

#[test]
fn poly_engine_cross_check_on_wheel() {
    let out = run(&["poly", "wheel:3", "--engine", "all"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("all-agree"));
}

#[test]
fn exit_codes() {
    // Parse failure: 2.
    let out = run(&["poly", "no-such-family:1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["poly", "{\"type\":\"bogus\"}"]);
    assert_eq!(out.status.code(), Some(2));
    // Resource limit: 3.
    let out = run(&["poly", "uniform:10,30", "--engine", "subsets"]);
    assert_eq!(out.status.code(), Some(3));
    // Fail verdict: 1.
    let out = run(&["check", "mw", "loop-isthmus"]);
    assert_eq!(out.status.code(), Some(1));
    // Pass: 0.
    let out = run(&["check", "mw", "wheel:5"]);
    assert_eq!(out.status.code(), Some(0));
    // Usage error from missing required argument: 2 (clap convention).
    let out = run(&["plotdata", "uniform:2,4", "--samples", "1", "--p", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn check_reports_are_json_lines() {
    let out = run(&["check", "mw", "--corpus", "wheel=2..4", "--no-timestamp"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    for line in &lines {
        let doc: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(doc["predicate"], "merino-welsh");
        assert_eq!(doc["verdict"], "pass");
        assert!(doc.get("timestamp").is_none());
    }
    // Timestamps appear unless suppressed.
    let out = run(&["check", "mw", "wheel:3"]);
    let doc: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert!(doc.get("timestamp").is_some());
}

#[test]
fn deterministic_output() {
    let args = ["check", "mw", "--corpus", "wheel=2..5,whirl=2..4", "--no-timestamp"];
    let first = run(&args);
    let second = run(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn family_check_sweep() {
    let out = run(&["check", "family", "uniform:2,4", "--a", "2,5/2,3,4", "--no-timestamp"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 4);
    let first: serde_json::Value = serde_json::from_str(text.lines().next().unwrap()).unwrap();
    assert_eq!(first["values"]["t_0_2a"], "24");
    assert_eq!(first["values"]["t_a_a"], "16");
}

#[test]
fn convexity_and_probe() {
    let out = run(&["check", "convexity", "uniform:2,4", "--p", "2", "--method", "sturm"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(doc["verdict"], "pass");
    assert_eq!(doc["values"]["method"], "exact-sturm");
    // The loop-free probe catches y(x+y); exit code 1 flags the finding.
    let out = run(&[
        "check",
        "quadrant-probe",
        "{\"type\":\"direct_sum\",\"parts\":[{\"type\":\"uniform\",\"r\":1,\"n\":2},{\"type\":\"uniform\",\"r\":0,\"n\":1}]}",
        "--bound",
        "2",
        "--density",
        "6",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn plotdata_csv() {
    let out = run(&["plotdata", "uniform:2,4", "--p", "2", "--samples", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "t,f\n0,8\n1,6\n2,8\n");
    // The bowtie has T = (x+y)^2: constant along x + y = 2.
    let out = run(&["plotdata", "bowtie", "--p", "2", "--samples", "3"]);
    assert_eq!(stdout(&out), "t,f\n0,4\n1,4\n2,4\n");
}

#[test]
fn packing_and_paving_reports() {
    let out = run(&["check", "packing", "uniform:3,4", "--no-timestamp"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(doc["values"]["verdict"], "union-of-two-bases");
    assert_eq!(doc["witness"]["disjoint_deficiency"], serde_json::json!([]));
    let out = run(&["check", "paving", "fano", "--no-timestamp"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(doc["values"]["required"], "two-disjoint-bases");
}

#[test]
fn descriptor_file_round_trip() {
    let dir = std::env::temp_dir().join(format!("tuttelab-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("instance.json");
    std::fs::write(&path, r#"{"type":"whirl","n":3}"#).unwrap();
    let spec = format!("@{}", path.display());
    let out = run(&["poly", &spec, "--engine", "all"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    // T(1,1) must be tau(W_3) + 1 = 17: sum all coefficients.
    let sum: i64 = doc["coeffs"]
        .as_array()
        .unwrap()
        .iter()
        .flat_map(|row| row.as_array().unwrap())
        .map(|c| c.as_str().unwrap().parse::<i64>().unwrap())
        .sum();
    assert_eq!(sum, 17);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn corpus_from_descriptor_file() {
    let dir = std::env::temp_dir().join(format!("tuttelab-corpus-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("corpus.jsonl");
    std::fs::write(
        &path,
        "{\"type\":\"uniform\",\"r\":2,\"n\":4}\n{\"type\":\"whirl\",\"n\":3}\n",
    )
    .unwrap();
    let spec = format!("@{}", path.display());
    let out = run(&["check", "mw", "--corpus", &spec, "--no-timestamp"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 2);
    assert!(text.lines().all(|l| l.contains("\"verdict\":\"pass\"")));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn csv_summary_file() {
    let dir = std::env::temp_dir().join(format!("tuttelab-csv-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let csv_path = dir.join("summary.csv");
    let out = run(&[
        "check",
        "catalan-identity",
        "--max-m",
        "3",
        "--no-timestamp",
        "--summary-csv",
        csv_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let csv = std::fs::read_to_string(&csv_path).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "instance,predicate,verdict,values");
    assert_eq!(lines.len(), 4);
    assert!(lines[1].starts_with("m=1,catalan-binomial-identity,pass"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn cubic_bounds_on_petersen() {
    let out = run(&["check", "cubic-bounds", "petersen", "--no-timestamp"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(doc["values"]["tau"], "2000");
    assert_eq!(doc["verdict"], "pass");
    // Wrong-class input is a precondition error: exit 2.
    let out = run(&["check", "cubic-bounds", "Kn:4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn catalog_list_prints_shorthands() {
    let out = run(&["catalog", "list"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("uniform:r,n"));
    assert!(text.contains("fano"));
    assert!(text.contains("loop-isthmus"));
}
