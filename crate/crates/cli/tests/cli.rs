//! End-to-end CLI checks: output shapes and exit codes.

use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_fivemoves"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).to_string(),
        String::from_utf8_lossy(&out.stderr).to_string(),
    )
}

#[test]
fn compute_json_report() {
    let (code, stdout, _) = run(&["compute", "named:4_1", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["col5"], 25);
    assert_eq!(v["f_special"], "-sqrt5");
    assert_eq!(v["v_abs"], "0.000000");
    assert!(v["class5"].is_array());
}

#[test]
fn compute_empty_braid_is_t3() {
    let (code, stdout, _) = run(&["compute", "braid:3:[]", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["v_abs"], "3.61803");
    assert_eq!(v["components"], 3);
}

#[test]
fn compute_pretzel_2221() {
    let (code, stdout, _) = run(&["compute", "pretzel:[2,2,2,1]", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["v_abs"], "1.90211");
    assert_eq!(v["f_special"], "-sqrt5");
}

#[test]
fn parse_error_exits_2() {
    let (code, _, stderr) = run(&["compute", "braid:3:[7]"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("error"));
}

#[test]
fn limit_exceeded_exits_3() {
    let (code, _, stderr) = run(&["compute", "braid:3:[1,2,1,2,1,2]", "--limit", "2"]);
    assert_eq!(code, 3);
    assert!(stderr.contains("limit"));
}

#[test]
fn unknown_named_link_exits_2() {
    let (code, _, _) = run(&["compute", "named:9_49"]);
    assert_eq!(code, 2);
}

#[test]
fn table_41_passes_and_filters() {
    let (code, stdout, _) = run(&["table", "4.1", "--only", "39", "--csv"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("PASS"));
    assert!(!stdout.contains("FAIL,"));
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines.len(), 2); // header + one row
}

#[test]
fn reduce_rational_emits_classes() {
    let (code, stdout, _) = run(&["reduce-rational", "3/5"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["class12"], "2/5");
    assert_eq!(v["link_class"], "H");
}

#[test]
fn reduce_montesinos_reports_class() {
    let (code, stdout, _) = run(&["reduce-montesinos", "montesinos:[2/5,1/2,1/2]", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["class"]["TwoFive"]["k"], 1);
    assert_eq!(v["class"]["TwoFive"]["m"], 2);
    assert_eq!(v["report"]["col5"], 5);
}

#[test]
fn compare_verdicts() {
    let (code, stdout, _) = run(&["compare", "named:6^3_1", "mirror(named:6^3_1)"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("distinguished by"));
    let (code, stdout, _) = run(&["compare", "named:8^3_10", "mirror(named:8^3_10)"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("not-distinguished"));
}

#[test]
fn density_output() {
    let (code, stdout, _) = run(&["density", "1"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines.len(), 4);
    assert!(stdout.contains("0,0,1.00000"));
}

#[test]
fn compute_with_set_f_point() {
    let (code, stdout, _) = run(&[
        "compute",
        "pretzel:[2,2,2]",
        "--json",
        "--point",
        "24,32",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["set_f"]["has_real_member"], false);
}
