use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use spatch::io::{parse_spatch, parse_trimmed};

fn spatch_cmd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spatch")).args(args).output().unwrap()
}

fn sample_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/pentagon_d5.json")
}

#[test]
fn converts_the_bundled_sample() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out.json");
    let mesh = dir.path().join("out.obj");
    let report = dir.path().join("report.json");
    let o = spatch_cmd(&[
        "convert",
        sample_path().to_str().unwrap(),
        "-o",
        out.to_str().unwrap(),
        "--mesh",
        mesh.to_str().unwrap(),
        "--report",
        report.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(String::from_utf8_lossy(&o.stdout).contains("degree [15,15]"));

    let t = parse_trimmed(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(t.patch.grid_size(), (16, 16));
    assert!(fs::read_to_string(&mesh).unwrap().lines().any(|l| l.starts_with("f ")));

    let r: serde_json::Value = serde_json::from_str(&fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(r["degree"], serde_json::json!([15, 15]));
    assert!(r["relative_oracle_error"].as_f64().unwrap() < 1e-6);
}

#[test]
fn eval_at_the_center_matches_the_library() {
    let o = spatch_cmd(&["eval", sample_path().to_str().unwrap(), "--at", "0.5,0.5"]);
    assert!(o.status.success());
    let printed: Vec<f64> = String::from_utf8_lossy(&o.stdout)
        .split_whitespace()
        .map(|x| x.parse().unwrap())
        .collect();
    let s = parse_spatch(&fs::read_to_string(sample_path()).unwrap()).unwrap();
    assert_eq!(printed, s.eval_uv([0.5, 0.5]).unwrap().to_vec());
}

#[test]
fn eval_outside_the_domain_is_rejected() {
    let o = spatch_cmd(&["eval", sample_path().to_str().unwrap(), "--at", "0.0,0.0"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("outside"));
}

#[test]
fn bad_label_exits_with_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    fs::write(
        &path,
        r#"{"sides":3,"depth":1,"points":[
            {"label":[1,0,0],"point":[0,0,0]},
            {"label":[0,1,0],"point":[1,0,0]},
            {"label":[0,2,0],"point":[0,1,0]}]}"#,
    )
    .unwrap();
    let o = spatch_cmd(&["convert", path.to_str().unwrap(), "-o", dir.path().join("o.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("[0,2,0]"));
}

#[test]
fn usage_errors_and_help() {
    assert_eq!(spatch_cmd(&["convert"]).status.code(), Some(1));
    assert_eq!(spatch_cmd(&["--help"]).status.code(), Some(0));
    assert_eq!(spatch_cmd(&["eval", "x.json", "--at", "nope"]).status.code(), Some(1));
}

#[test]
fn bench_refuses_large_naive_runs() {
    let o = spatch_cmd(&["bench", "--sides", "5", "--depth", "3", "--algo", "naive"]);
    assert_eq!(o.status.code(), Some(1));
    let o = spatch_cmd(&["bench", "--sides", "4", "--depth", "2", "--algo", "efficient"]);
    assert!(o.status.success());
    assert!(String::from_utf8_lossy(&o.stdout).contains("sides=4"));
}
