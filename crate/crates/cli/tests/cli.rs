//! End-to-end checks of the binary: spec'd text forms, exit codes, and
//! byte-level determinism.

use std::process::{Command, Output};

fn cutseq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cutseq"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn cf_worked_example() {
    let out = cutseq(&["cf", "7/4"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "[1; 1, 3]\n");
}

#[test]
fn seq2slope_worked_example() {
    let out = cutseq(&["seq2slope", "(BABAABAABAA)*"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "7/4\ntrace: S F S F S S S\n");
}

#[test]
fn slope2seq_zero() {
    let out = cutseq(&["slope2seq", "0"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "(B)*\n");
}

#[test]
fn validate_exit_codes() {
    assert_eq!(code(&cutseq(&["validate", "(AB)*"])), 0);
    assert_eq!(code(&cutseq(&["validate", "(BBAA)*"])), 2);
    assert_eq!(code(&cutseq(&["validate", "not-a-word"])), 1);
}

#[test]
fn seq2slope_invalid_word_is_a_rejection() {
    let out = cutseq(&["seq2slope", "(BBAA)*"]);
    assert_eq!(code(&out), 2);
    let err = String::from_utf8(out.stderr).expect("utf8");
    assert!(err.contains("not a valid cutting sequence"), "{err}");
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(code(&cutseq(&["no-such-command"])), 1);
    assert_eq!(code(&cutseq(&["cf"])), 1);
    assert_eq!(code(&cutseq(&["slope2seq", "-1/2"])), 1);
    assert_eq!(code(&cutseq(&["sturmian", "7/4", "--intercept", "1/2", "--n", "5"])), 1);
}

#[test]
fn help_exits_zero() {
    assert_eq!(code(&cutseq(&["--help"])), 0);
}

#[test]
fn binary_alphabet_is_echoed() {
    let out = cutseq(&["apply", "[[1,0],[1,1]]", "(1)*"]);
    assert_eq!(stdout(&out), "(01)*\n");
    let out = cutseq(&["apply", "[[1,0],[1,1]]", "(B)*"]);
    assert_eq!(stdout(&out), "(AB)*\n");
}

#[test]
fn sturmian_prefix_output() {
    let out = cutseq(&["sturmian", "sqrt(2)", "--intercept", "1/2", "--n", "12"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "010010100101\n");
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        &["seq2slope", "(BABAABAABAA)*"][..],
        &["simulate", "7/4", "--start", "1/1009,2/1009", "--bounces", "22"][..],
        &["cf", "(1+sqrt(5))/2", "--json"][..],
    ] {
        let a = cutseq(args);
        let b = cutseq(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(code(&a), code(&b));
    }
}

#[test]
fn json_outputs_parse_and_carry_expected_fields() {
    let out = cutseq(&["seq2slope", "(BABAABAABAA)*", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(v["slope"], "7/4");
    assert_eq!(v["trace"].as_array().expect("array").len(), 7);

    let out = cutseq(&["validate", "(BBAA)*", "--json"]);
    assert_eq!(code(&out), 2);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(v["verdict"], "rejected");
    assert_eq!(v["rule"], 1);

    let out = cutseq(&["simulate", "1", "--start", "1/2,0", "--bounces", "8", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(v["period"], 4);
    assert_eq!(v["bounces"][0]["edge"], "right");

    let out = cutseq(&["cf", "sqrt(3)", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(v["kind"], "surd-periodic");
    assert_eq!(v["cf"], "[1; (1, 2)*]");
}

#[test]
fn simulate_reports_bounce_table_and_period() {
    let out = cutseq(&["simulate", "1", "--start", "1/2,0", "--bounces", "8"]);
    let text = stdout(&out);
    assert!(text.starts_with("1 right 1 1/2\n"), "{text}");
    assert!(text.contains("period: 4"), "{text}");
    // vertical strike bounces between the horizontal edges
    let out = cutseq(&["simulate", "vertical", "--start", "1/3,0", "--bounces", "6"]);
    assert!(stdout(&out).contains("period: 2"));
}

#[test]
fn vertex_hit_reports_exact_coordinates_and_exits_one() {
    let out = cutseq(&["simulate", "1", "--start", "1/2,1/2", "--bounces", "4"]);
    assert_eq!(code(&out), 1);
    let err = String::from_utf8(out.stderr).expect("utf8");
    assert!(err.contains("lattice point (1, 1)"), "{err}");
}

#[test]
fn render_refuses_partial_files_on_vertex_hits() {
    let dir = std::env::temp_dir().join("cutseq-vertex-test");
    std::fs::create_dir_all(&dir).expect("mkdir");
    let path = dir.join("should-not-exist.svg");
    let _ = std::fs::remove_file(&path);
    let out = cutseq(&[
        "render",
        "--view",
        "torus",
        "--slope",
        "1",
        "--intercept",
        "0",
        "--steps",
        "4",
        "-o",
        path.to_str().expect("utf8 path"),
    ]);
    assert_eq!(code(&out), 1);
    assert!(!path.exists(), "no partial SVG may be written");
}

#[test]
fn decompose_identity_prints_empty_word() {
    let out = cutseq(&["decompose", "[[1,0],[0,1]]"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "\n");
}
