//! End-to-end runs of the binary.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mar-tools"))
        .args(args)
        .env("NO_COLOR", "1")
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("valid json on stdout")
}

#[test]
fn ar_quiver_dot_has_all_modules() {
    let out = run(&["ar-quiver", "-n", "5", "-o", "RLRR", "--format", "dot"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.matches("pos=").count(), 15);
    assert!(text.starts_with("digraph"));
}

#[test]
fn ar_quiver_json_schema() {
    let out = run(&["ar-quiver", "-n", "2", "-o", "R"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["modules"].as_array().unwrap().len(), 3);
    assert_eq!(v["quiver"]["orientation"], "R");
}

#[test]
fn invalid_orientation_is_usage_error() {
    let out = run(&["ar-quiver", "-n", "5", "-o", "RLR"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn missing_subcommand_is_usage_error() {
    let out = run(&[]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn hom_query() {
    let out = run(&["hom", "-n", "5", "-o", "RLRR", "--from", "2,5", "--to", "1,3"]);
    assert!(out.status.success());
    assert_eq!(stdout_json(&out)["hom_dim"], 1);
}

#[test]
fn ext_query_reports_middle() {
    let out = run(&["ext", "-n", "3", "-o", "RR", "--quot", "1,1", "--sub", "2,3"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["class"]["ext_dim"], 1);
    assert_eq!(v["class"]["middle"].as_array().unwrap().len(), 1);
}

#[test]
fn exact_structure_diamond_report() {
    let out = run(&["exact-structure", "-n", "5", "-o", "RLRR"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["is_diamond"], true);
    assert_eq!(v["is_0_auslander"], true);
    assert_eq!(v["relative_projectives"].as_array().unwrap().len(), 9);
}

#[test]
fn mar_count_and_sizes() {
    let out = run(&["mar", "-n", "5", "-o", "RLRR"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    let rep = &v["orientations"][0];
    assert_eq!(rep["count"], 14);
    assert_eq!(rep["summand_sizes_ok"], true);
    assert_eq!(rep["modules"][0].as_array().unwrap().len(), 9);
}

#[test]
fn mar_hasse_dot_for_two_modules() {
    let out = run(&["mar", "-n", "3", "-o", "RR", "--hasse", "--format", "dot"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.matches("label=").count(), 2);
    assert_eq!(text.matches("->").count(), 1);
}

#[test]
fn mutate_minimum_at_p4() {
    let out = run(&[
        "mutate",
        "-n",
        "5",
        "-o",
        "RLRR",
        "--summands",
        "1,1;1,2;2,2;2,3;2,5;3,5;4,4;4,5;5,5",
        "--at",
        "4,5",
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["added"], serde_json::json!([2, 4]));
    assert_eq!(v["direction"], "Up");
}

#[test]
fn mutate_rejects_non_mar_input() {
    let out = run(&["mutate", "-n", "3", "-o", "RR", "--summands", "1,1", "--at", "1,1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn poset_is_lattice_with_certificate() {
    let out = run(&["poset", "-n", "4", "-o", "RLR", "--certificate"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["is_lattice"], true);
    assert_eq!(v["elements"].as_array().unwrap().len(), 5);
    assert_eq!(v["flip_certificate"].as_array().unwrap().len(), 5);
}

#[test]
fn verify_section5_passes() {
    let out = run(&["verify", "--section5"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stderr).unwrap();
    assert!(text.contains("PASS"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn verify_small_sweep_passes() {
    let out = run(&["verify", "--max-n", "3"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["all_pass"], true);
    assert_eq!(v["checks"].as_array().unwrap().len(), 10);
}

#[test]
fn verify_below_sweep_range_still_passes() {
    let out = run(&["verify", "--max-n", "2"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stderr).unwrap();
    assert!(text.contains("notice"));
}
