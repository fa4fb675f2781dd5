//! End-to-end tests of the `oridim` binary: output shapes, file round
//! trips, the exit-code contract, and worker-count determinism.

use std::path::Path;
use std::process::{Command, Output};

fn oridim() -> Command {
    Command::new(env!("CARGO_BIN_EXE_oridim"))
}

fn run(args: &[&str]) -> Output {
    oridim().args(args).output().expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

fn assert_code(out: &Output, expected: i32) {
    assert_eq!(
        out.status.code(),
        Some(expected),
        "stdout:\n{}\nstderr:\n{}",
        stdout_of(out),
        stderr_of(out)
    );
}

/// `dim --spec S` and `dim F` on a file produced by `gen S` must agree
/// byte for byte: the edge list carries everything the solver needs.
#[test]
fn generated_edge_lists_round_trip_through_dim() {
    let dir = tempfile::tempdir().expect("tempdir");
    let cases: &[(&str, &str)] = &[
        ("wheel-c3simple:n=6,variant=A", "require-strong"),
        ("wheel-c3simple:n=8,variant=B", "require-strong"),
        ("wheel-odd:n=7,variant=centers-in,closing=v1-to-vn", "require-strong"),
        ("wheel-dim2:n=9", "require-strong"),
        ("fan-c3simple:m=2,n=5,variant=centers-out", "require-strong"),
        ("fan-dim2:n=6", "allow-sentinel"),
        ("path-amal:x=1,lengths=3+4+5", "require-strong"),
    ];
    for (i, (spec, mode)) in cases.iter().enumerate() {
        let file = dir.path().join(format!("case{i}.txt"));
        let gen = run(&["gen", spec, "--out", file.to_str().unwrap()]);
        assert_code(&gen, 0);

        let from_spec = run(&["dim", "--spec", spec, "--mode", mode]);
        let from_file = run(&["dim", file.to_str().unwrap(), "--mode", mode]);
        assert_code(&from_spec, 0);
        assert_code(&from_file, 0);
        assert_eq!(
            stdout_of(&from_spec),
            stdout_of(&from_file),
            "spec and file disagree for {spec}"
        );
    }
}

#[test]
fn dim_reports_the_expected_dimension_and_basis_fields() {
    let out = run(&["dim", "--spec", "wheel-dim2:n=9", "--all"]);
    assert_code(&out, 0);
    let json: serde_json::Value = serde_json::from_str(&stdout_of(&out)).expect("valid json");
    assert_eq!(json["n"], 10);
    assert_eq!(json["dimension"], 2);
    assert_eq!(json["basis"], serde_json::json!([2, 4]));
    assert_eq!(json["mode"], "require-strong");
    let all = json["all_min_bases"].as_array().expect("--all fills the list");
    assert!(all.contains(&serde_json::json!([2, 4])));
    let reps = json["representations"].as_array().expect("representations");
    assert_eq!(reps.len(), 10);
}

#[test]
fn dim_without_any_input_is_a_usage_error() {
    let out = run(&["dim"]);
    assert_code(&out, 1);
    assert!(stderr_of(&out).contains("edge-list file or --spec"));
}

#[test]
fn missing_input_file_is_a_usage_error() {
    let out = run(&["dim", "/definitely/not/a/real/file.txt"]);
    assert_code(&out, 1);
    assert!(stderr_of(&out).contains("error:"));
}

#[test]
fn unknown_family_is_a_usage_error() {
    let out = run(&["dim", "--spec", "nonsense:n=1"]);
    assert_code(&out, 1);
    assert!(stderr_of(&out).contains("unknown family"));
}

#[test]
fn odd_rim_is_rejected_by_the_even_wheel_generator() {
    let out = run(&["gen", "wheel-c3simple:n=5,variant=A"]);
    assert_code(&out, 1);
    assert!(stderr_of(&out).contains("even"));
}

/// Default mode refuses graphs that are not strongly connected and names
/// a witness pair; allow-sentinel mode solves the same input.
#[test]
fn strongness_convention_is_enforced_and_relaxable() {
    let dir = tempfile::tempdir().expect("tempdir");
    let file = dir.path().join("fan.txt");
    let gen = run(&["gen", "fan-dim2:n=6", "--out", file.to_str().unwrap()]);
    assert_code(&gen, 0);

    let strict = run(&["dim", file.to_str().unwrap()]);
    assert_code(&strict, 1);
    assert!(stderr_of(&strict).contains("no directed path from"));

    let relaxed = run(&["dim", file.to_str().unwrap(), "--mode", "allow-sentinel"]);
    assert_code(&relaxed, 0);
    let json: serde_json::Value = serde_json::from_str(&stdout_of(&relaxed)).expect("valid json");
    assert_eq!(json["dimension"], 2);
    assert_eq!(json["mode"], "allow-sentinel");
}

#[test]
fn verify_exits_zero_and_flags_the_known_odd_wheel_discrepancies() {
    let out = run(&["verify", "T7", "--n", "5..7"]);
    assert_code(&out, 0);
    let text = stdout_of(&out);
    assert!(text.contains("FLAG"));
    assert!(text.contains("authoritative"));
    assert!(text.contains("wheel-odd:n=5,variant=centers-out,closing=vn-to-v1"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn verify_even_wheels_all_match() {
    let out = run(&["verify", "T6", "--n", "4..8"]);
    assert_code(&out, 0);
    let text = stdout_of(&out);
    assert!(text.contains("ok"));
    assert!(!text.contains("FLAG"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn verify_refuses_ranges_beyond_the_solver_limits() {
    let out = run(&["verify", "T6", "--n", "4..80"]);
    assert_code(&out, 1);
    assert!(stderr_of(&out).contains("infeasible"));
}

#[test]
fn verify_rejects_malformed_bounds() {
    let out = run(&["verify", "T6", "--n", "banana"]);
    assert_code(&out, 1);
}

#[test]
fn ord_reports_the_full_orientation_census() {
    let out = run(&["ord", "cycle:5"]);
    assert_code(&out, 0);
    let json: serde_json::Value = serde_json::from_str(&stdout_of(&out)).expect("valid json");
    assert_eq!(json["n"], 5);
    assert_eq!(json["total_orientations"], 32);
    assert_eq!(json["strong_count"], 2);
    assert_eq!(json["ord"], 1);
    assert_eq!(json["spectrum"], serde_json::json!([1]));
}

#[test]
fn ord_budget_refusal_exits_three() {
    let out = run(&["ord", "wheel:13"]);
    assert_code(&out, 3);
    assert!(stderr_of(&out).contains("edge budget"));
}

#[test]
fn ord_csv_logs_every_orientation() {
    let dir = tempfile::tempdir().expect("tempdir");
    let csv = dir.path().join("log.csv");
    let out = run(&["ord", "cycle:4", "--csv", csv.to_str().unwrap()]);
    assert_code(&out, 0);
    let text = std::fs::read_to_string(&csv).expect("csv written");
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("bitmask,strong,dimension"));
    // Header plus one row per orientation of the 4 editable edges.
    assert_eq!(text.lines().count(), 1 + 16);
    assert!(text.contains(",true,1"), "a strong orientation of dimension 1 exists");
    assert!(text.contains(",false,"), "non-strong orientations leave the dimension blank");
}

#[test]
fn worker_count_is_validated() {
    let out = oridim()
        .env("ORIDIM_WORKERS", "zebra")
        .args(["ord", "cycle:4"])
        .output()
        .expect("binary runs");
    assert_code(&out, 1);
    assert!(stderr_of(&out).contains("ORIDIM_WORKERS"));
}

#[test]
fn reports_are_identical_across_worker_counts() {
    let single = oridim()
        .env("ORIDIM_WORKERS", "1")
        .args(["ord", "wheel:4"])
        .output()
        .expect("binary runs");
    let multi = oridim()
        .env("ORIDIM_WORKERS", "4")
        .args(["ord", "wheel:4"])
        .output()
        .expect("binary runs");
    assert_code(&single, 0);
    assert_code(&multi, 0);
    assert_eq!(stdout_of(&single), stdout_of(&multi));
}

/// Rims without a dedicated dimension-2 wheel construction are routed to
/// generators that already achieve dimension 2; rim 3 cannot reach 2 at
/// all under the triangle-simple constraint and is refused.
#[test]
fn small_wheel_dim2_sizes_route_or_refuse() {
    let refused = run(&["gen", "wheel-dim2:n=3"]);
    assert_code(&refused, 1);
    assert!(stderr_of(&refused).contains("n >= 4"));

    for n in 4..=7 {
        let spec = format!("wheel-dim2:n={n}");
        let out = run(&["dim", "--spec", &spec]);
        assert_code(&out, 0);
        let json: serde_json::Value = serde_json::from_str(&stdout_of(&out)).expect("valid json");
        assert_eq!(json["dimension"], 2, "wheel-dim2:n={n}");
    }
}

#[test]
fn dot_format_emits_a_digraph_document() {
    let out = run(&["gen", "wheel-c3simple:n=4,variant=B", "--format", "dot"]);
    assert_code(&out, 0);
    let text = stdout_of(&out);
    assert!(text.contains("digraph"));
    assert!(text.contains("->"));
}

#[test]
fn out_flag_writes_the_same_bytes_as_stdout() {
    let dir = tempfile::tempdir().expect("tempdir");
    let file = dir.path().join("w6.txt");
    let to_file = run(&[
        "gen",
        "wheel-c3simple:n=6,variant=A",
        "--out",
        file.to_str().unwrap(),
    ]);
    assert_code(&to_file, 0);
    let to_stdout = run(&["gen", "wheel-c3simple:n=6,variant=A"]);
    assert_code(&to_stdout, 0);
    let written = std::fs::read_to_string(&file).expect("file written");
    assert_eq!(written, stdout_of(&to_stdout));
    assert!(Path::new(&file).exists());
}

#[test]
fn edge_list_output_has_header_comments_and_counts() {
    let out = run(&["gen", "wheel-c3simple:n=4,variant=A"]);
    assert_code(&out, 0);
    let text = stdout_of(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("# family: wheel-c3simple:n=4,variant=A"));
    assert_eq!(lines.next(), Some("# labels: 0=c 1=v1 2=v2 3=v3 4=v4"));
    assert_eq!(lines.next(), Some("5 8"));
    assert_eq!(text.lines().count(), 3 + 8);
}
