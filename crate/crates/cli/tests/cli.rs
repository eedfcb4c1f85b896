use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn paravec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_paravec")).args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn verify_single_suite_passes() {
    let out = paravec(&["verify", "--suite", "twistor"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("twistor") && text.contains("PASS"));
}

#[test]
fn impossible_tolerance_fails_checks() {
    let out = paravec(&["verify", "--suite", "lie", "--tol", "1e-30"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stdout).unwrap().contains("failed:"));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["verify", "--suite", "bogus"][..],
        &["verify", "--tol", "0"],
        &["verify", "--tol", "nan"],
        &["show-rep", "cl99"],
        &["apply", "--map", "shear", "--x", "0,0,0,0"],
        &["apply", "--map", "dilation", "--param", "0", "--x", "1,0,0,0"],
        &["twistor", "--x", "0,0,0", "--xi", "1,0,0,0"],
        &["mv-io", "{not json"],
        &["mv-io", "--random", "9,9"],
    ] {
        assert_eq!(paravec(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn parse_errors_name_the_field() {
    let out = paravec(&["apply", "--map", "translation", "--param", "0,1,abc,0", "--x", "0,0,0,0"]);
    assert_eq!(out.status.code(), Some(2));
    let message = stderr(&out);
    assert!(message.contains("--param") && message.contains("`abc`"), "{message}");
}

#[test]
fn show_rep_prints_generators() {
    let out = paravec(&["show-rep", "dirac-std"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    for symbol in ["γ0 =", "γ1 =", "γ2 =", "γ3 =", "γ5 ="] {
        assert!(text.contains(symbol), "{symbol} missing");
    }
    let doc = stdout_json(&paravec(&["show-rep", "cl30", "--json"]));
    let sigma2 = &doc[1];
    assert_eq!(sigma2["generator"], "e2");
    assert_eq!(sigma2["matrix"], serde_json::json!([["0", "-i"], ["i", "0"]]));
}

#[test]
fn apply_reports_image_and_scale() {
    let doc = stdout_json(&paravec(&["apply", "--map", "translation", "--param", "0,1,0,0", "--x", "0,0,0,0"]));
    assert_eq!(doc["x_prime"], serde_json::json!([0.0, 1.0, 0.0, 0.0]));
    assert_eq!(doc["delta"], 1.0);

    let doc = stdout_json(&paravec(&["apply", "--map", "inversion", "--x", "1,0,0,0"]));
    assert_eq!(doc["x_prime"], serde_json::json!([-1.0, 0.0, 0.0, 0.0]));

    let doc = stdout_json(&paravec(&["apply", "--map", "dilation", "--param", "4", "--x", "1,-0.5,0,0"]));
    assert_eq!(doc["x_prime"], serde_json::json!([4.0, -2.0, 0.0, 0.0]));
    assert_eq!(doc["delta"], 0.25);
}

#[test]
fn undefined_point_exits_1() {
    let out = paravec(&["apply", "--map", "inversion", "--x", "0,0,0,0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
}

#[test]
fn twistor_of_a_unit_point() {
    let doc = stdout_json(&paravec(&["twistor", "--x", "1,0,0,0", "--xi", "1,0,0,0"]));
    assert_eq!(doc["components"], serde_json::json!([[0.0, 1.0], [0.0, 0.0], [1.0, 0.0], [0.0, 0.0]]));
    assert_eq!(doc["penrose_residual"], 0.0);
}

#[test]
fn mv_io_round_trips_through_stdin() {
    let generated = paravec(&["mv-io", "--random", "1,3", "--seed", "7"]);
    assert_eq!(generated.status.code(), Some(0));
    let mut child = Command::new(env!("CARGO_BIN_EXE_paravec"))
        .arg("mv-io")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(&generated.stdout).unwrap();
    let echoed = child.wait_with_output().unwrap();
    assert_eq!(echoed.status.code(), Some(0));
    assert_eq!(echoed.stdout, generated.stdout);

    let real = stdout_json(&paravec(&["mv-io", "--random", "3,0", "--real", "--seed", "7"]));
    assert_eq!(real, stdout_json(&paravec(&["mv-io", &real.to_string()])));
}

#[test]
fn json_report_is_deterministic() {
    let args = ["verify", "--suite", "conformal", "--seed", "5", "--json"];
    let first = paravec(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, paravec(&args).stdout);
    let doc = stdout_json(&first);
    assert_eq!(doc["seed"], 5);
    assert_eq!(doc["suites"][0]["suite"], "conformal");
    assert!(doc["suites"][0]["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true));
}
