use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_envelope-lab"));
    c.env_remove("ENVELOPE_LAB_PRIME");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("envelope-lab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is json")
}

#[test]
fn examples_report_has_contract_fields() {
    let out = run(&["examples"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    for key in ["command", "config", "results", "summary", "timings_ms"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["config"]["prime"], 32003);
    assert_eq!(v["config"]["seed"], 0);
    assert!(v["config"]["version"].is_string());
    assert_eq!(v["summary"]["passed"], 6);
    assert_eq!(v["summary"]["degenerate_resamples"], 0);
}

#[test]
fn sample_then_analyze_round_trip() {
    let file = tmp("eight.txt");
    let out = run(&["sample-points", "8", file.to_str().unwrap(), "--seed", "11"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["results"][0]["data"]["seed"], 11);
    let out = run(&["analyze", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let res = v["results"].as_array().unwrap().iter().find(|i| i["id"] == "resolution-data").unwrap();
    assert_eq!(res["data"]["text"], "a=3,3,4 b=5,5");
}

#[test]
fn sample_points_to_stdout_is_a_point_file() {
    let out = run(&["sample-points", "3", "--seed", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| !l.starts_with('#')).count(), 3);
}

#[test]
fn input_errors_exit_two() {
    let bad = tmp("bad.txt");
    std::fs::write(&bad, "1 2 3\n2 4 6\n").unwrap();
    assert_eq!(run(&["analyze", bad.to_str().unwrap()]).status.code(), Some(2));
    std::fs::write(&bad, "1 2\n").unwrap();
    let out = run(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 1"));
    assert_eq!(run(&["analyze", "/nonexistent/points.txt"]).status.code(), Some(2));
    assert_eq!(run(&["sample-points", "0"]).status.code(), Some(2));
    let out = run(&["verify-theorem", "a=2,2,3", "b=3,4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not positive"));
    assert_eq!(run(&["examples", "--prime", "32004"]).status.code(), Some(2));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(run(&["detloci", "4"]).status.code(), Some(2));
}

#[test]
fn prime_flag_beats_environment() {
    let out = bin().env("ENVELOPE_LAB_PRIME", "65521").args(["verify-theorem", "a=2,2 b=4", "--trials", "2"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["config"]["prime"], 65521);
    let out = bin()
        .env("ENVELOPE_LAB_PRIME", "65521")
        .args(["verify-theorem", "a=2,2 b=4", "--trials", "2", "--prime", "32003"])
        .output()
        .unwrap();
    assert_eq!(json(&out)["config"]["prime"], 32003);
    let out = bin().env("ENVELOPE_LAB_PRIME", "12").args(["examples"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn out_file_and_formats() {
    let file = tmp("report.csv");
    let out = run(&["detloci", "1", "--format", "csv", "--out", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let csv = std::fs::read_to_string(&file).unwrap();
    assert!(csv.starts_with("command,id,passed,summary"));
    let text = String::from_utf8(run(&["detloci", "1", "--format", "text"]).stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("PASS  k=1")));
}

#[test]
fn repeated_runs_are_identical_without_timings() {
    let strip = |out: Output| {
        let mut v = json(&out);
        v.as_object_mut().unwrap().remove("timings_ms");
        v.to_string()
    };
    let args = ["verify-generic", "--n-min", "4", "--n-max", "9", "--trials", "5", "--seed", "9"];
    assert_eq!(strip(run(&args)), strip(run(&args)));
}
