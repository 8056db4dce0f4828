//! End-to-end checks of the command-line pipeline: file outputs, stats,
//! manifests, and exit codes (0 ok, 1 verification failed, 2 input error,
//! 3 cost guard).

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::sync::OnceLock;

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_flagcert")
}

fn tmp_dir(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("flagcert_cli_{name}_{}", std::process::id()));
    let _ = fs::remove_dir_all(&dir);
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn run(args: &[&str], out_dir: &Path) -> (i32, String, String) {
    let output = Command::new(bin())
        .arg("--output-dir")
        .arg(out_dir)
        .args(args)
        .output()
        .expect("spawn flagcert");
    (
        output.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&output.stdout).into_owned(),
        String::from_utf8_lossy(&output.stderr).into_owned(),
    )
}

#[test]
fn enumerate_writes_file_and_manifest() {
    let dir = tmp_dir("enum");
    let (code, stdout, _) = run(&["enumerate", "4"], &dir);
    assert_eq!(code, 0);
    assert!(stdout.contains("3 K4⁻-free graphs"));
    let listing = fs::read_to_string(dir.join("graphs_4.txt")).unwrap();
    assert!(listing.starts_with("#flagcert graphs v1"));
    assert_eq!(listing.lines().count(), 4);
    let manifest = fs::read_to_string(dir.join("manifest.json")).unwrap();
    let parsed: serde_json::Value = serde_json::from_str(&manifest).unwrap();
    assert_eq!(parsed["outputs"][0]["path"], dir.join("graphs_4.txt").display().to_string());

    // digests are stable across reruns of identical inputs
    let digest1 = parsed["outputs"][0]["sha256"].clone();
    let (code, _, _) = run(&["enumerate", "4"], &dir);
    assert_eq!(code, 0);
    let manifest2: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.join("manifest.json")).unwrap()).unwrap();
    assert_eq!(digest1, manifest2["outputs"][0]["sha256"]);
}

#[test]
fn cost_guards_exit_3() {
    let dir = tmp_dir("guard");
    let (code, _, stderr) = run(&["enumerate", "9"], &dir);
    assert_eq!(code, 3);
    assert!(stderr.contains("cost guard"));
    let (code, _, _) = run(&["tournaments", "texact", "8"], &dir);
    assert_eq!(code, 3);
}

#[test]
fn input_errors_exit_2() {
    let dir = tmp_dir("input");
    let (code, _, stderr) = run(&["flags", "sigma9", "5"], &dir);
    assert_eq!(code, 2);
    assert!(stderr.contains("input error"));
    let (code, _, _) = run(&["hadamard", "paley", "9"], &dir);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["verify", "no_such_file.txt"], &dir);
    assert_eq!(code, 2);
}

#[test]
fn tournament_pipeline_round_trips() {
    let dir = tmp_dir("bridge");
    let (code, stdout, _) = run(&["hadamard", "paley", "7"], &dir);
    assert_eq!(code, 0);
    assert!(stdout.contains("δ₂ = 2"));
    let paley = dir.join("paley_7.txt");
    let (code, _, _) = run(&["hadamard", "from-tournament", &format!("@{}", paley.display())], &dir);
    assert_eq!(code, 0);
    let matrix = dir.join("hadamard_8.txt");
    let (code, stdout, _) = run(&["hadamard", "to-tournament", matrix.to_str().unwrap()], &dir);
    assert_eq!(code, 0);
    assert!(stdout.contains("doubly regular tournament on 7 vertices"));

    // a transitive tournament is rejected with the failing condition named
    let bad = dir.join("transitive.txt");
    fs::write(&bad, "#flagcert tournaments v1\n7:111111111111111111111\n").unwrap();
    let (code, _, stderr) = run(&["hadamard", "from-tournament", &format!("@{}", bad.display())], &dir);
    assert_eq!(code, 2);
    assert!(stderr.contains("not doubly regular"));
}

#[test]
fn construct_and_realize() {
    let dir = tmp_dir("construct");
    let (code, stdout, _) = run(
        &["--format", "json", "construct", "blowup", "--n", "12", "--depth", "1", "--seed", "3"],
        &dir,
    );
    assert_eq!(code, 0);
    let stats: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(stats["k4minus_free"], serde_json::json!(true));
    let (code, stdout, _) = run(&["tournaments", "realize", "3:123"], &dir);
    assert_eq!(code, 0);
    assert!(stdout.contains("realizable"));
    let (code, stdout, _) = run(&["tournaments", "realize", "4:123124134"], &dir);
    assert_eq!(code, 0);
    assert!(stdout.contains("not tournament-realizable"));
    let (code, stdout, _) = run(
        &["construct", "random-tournament", "--n", "9", "--seed", "1"],
        &dir,
    );
    assert_eq!(code, 0);
    assert!(stdout.contains("δ₂"));
}

/// The zero certificate must parse, verify, and fail with exit 1 and the
/// negative-slack witness named. Expensive (two full context builds), so
/// the certificate text is cached per process.
#[test]
fn verify_zero_certificate_fails_with_slack_witness() {
    static CERT: OnceLock<String> = OnceLock::new();
    let text = CERT.get_or_init(|| {
        let ctx = flagcert::expressions::FlagContext::build().unwrap();
        let zero = flagcert::certificate::Certificate::zero(&ctx);
        flagcert::certificate::serialize_certificate(&zero)
    });
    let dir = tmp_dir("verify");
    let cert_path = dir.join("zero_cert.txt");
    fs::write(&cert_path, text).unwrap();
    let (code, stdout, stderr) = run(&["verify", cert_path.to_str().unwrap()], &dir);
    assert_eq!(code, 1, "stdout: {stdout}\nstderr: {stderr}");
    assert!(stdout.contains("slack_ok=false"));
    assert!(stdout.contains("pass=false"));
    assert!(stdout.contains("first negative slack"));
    assert!(dir.join("slack.txt").exists());
}
