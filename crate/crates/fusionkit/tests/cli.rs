//! End-to-end tests of the installed binary: exit codes, output shapes,
//! determinism, fixture caching, and directory scans. Each test gets its own
//! scratch working directory so fixture caches never collide.

use std::fs;
use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("fusionkit-cli-{}-{name}", std::process::id()));
    let _ = fs::remove_dir_all(&dir);
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn run_in(dir: &PathBuf, args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_fusionkit"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().expect("no signal"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

#[test]
fn exit_codes_cover_the_contract() {
    let dir = scratch("exit-codes");

    let pass = run_in(&dir, &["verify", "caso1sol", "--p", "7"]);
    assert_eq!(pass.code, 0, "stderr: {}", pass.stderr);
    assert!(pass.stdout.contains("outcome: pass"));

    // Statement hypothesis fails outright: skipped, still exit 0.
    let skip = run_in(&dir, &["verify", "caso1sol", "--p", "5"]);
    assert_eq!(skip.code, 0);
    assert!(skip.stdout.contains("outcome: skipped"));

    // Realization group overruns the default cap: construction refused.
    let capped = run_in(&dir, &["verify", "caso1sol", "--p", "31"]);
    assert_eq!(capped.code, 2);
    let raised = run_in(&dir, &["verify", "caso1sol", "--p", "31", "--cap", "1024"]);
    assert_eq!(raised.code, 0, "stderr: {}", raised.stderr);
    assert!(raised.stdout.contains("outcome: pass"));

    // The recorded counterexample shape: a clause honestly fails.
    let fail = run_in(&dir, &["verify", "solv-neargp", "--G", "Z5", "--kappa", "4"]);
    assert_eq!(fail.code, 1);
    assert!(fail.stdout.contains("outcome: fail"));

    // Verifier precondition violated: validation error.
    let invalid = run_in(&dir, &["verify", "caso1sol", "--p", "6"]);
    assert_eq!(invalid.code, 2);
    assert!(!invalid.stderr.is_empty());

    // Unreadable input: I/O error.
    let io = run_in(&dir, &["verify", "fnilp-gt", "--G", "no-such-file.json", "--F", "Z3"]);
    assert_eq!(io.code, 3);

    let unknown = run_in(&dir, &["verify", "not-a-theorem", "--p", "7"]);
    assert_eq!(unknown.code, 3);

    let junk = dir.join("junk.json");
    fs::write(&junk, "{\"rank\": 2}").unwrap();
    let malformed = run_in(&dir, &["analyze-ring", junk.to_str().unwrap()]);
    assert_eq!(malformed.code, 2);
}

#[test]
fn analysis_is_deterministic_modulo_timing() {
    let dir = scratch("determinism");
    let first = run_in(&dir, &["analyze-ring", "rep_D4"]);
    let second = run_in(&dir, &["analyze-ring", "rep_D4"]);
    assert_eq!(first.code, 0);
    assert_eq!(second.code, 0);
    let mut a: Value = serde_json::from_str(&first.stdout).unwrap();
    let mut b: Value = serde_json::from_str(&second.stdout).unwrap();
    let fp = a["input_fingerprint"].as_str().unwrap().to_string();
    assert_eq!(fp.len(), 64);
    assert!(fp.chars().all(|c| c.is_ascii_hexdigit()));
    a.as_object_mut().unwrap().remove("timing_ms");
    b.as_object_mut().unwrap().remove("timing_ms");
    assert_eq!(a, b);
    assert_eq!(a["nilpotent"], Value::Bool(true));
    assert_eq!(a["class"], Value::from(2));
    assert_eq!(a["solvability"]["status"], Value::from("proven"));
}

#[test]
fn out_flag_writes_the_report_file() {
    let dir = scratch("out-flag");
    let run = run_in(
        &dir,
        &["verify", "caso1sol", "--p", "7", "--format", "json", "--out", "report.json"],
    );
    assert_eq!(run.code, 0, "stderr: {}", run.stderr);
    let text = fs::read_to_string(dir.join("report.json")).unwrap();
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["outcome"], Value::from("pass"));
    assert_eq!(v["theorem"], Value::from("caso1sol"));
}

#[test]
fn named_fixtures_are_cached_as_canonical_json() {
    let dir = scratch("fixture-cache");
    let run = run_in(&dir, &["build", "rep", "--group", "S3"]);
    assert_eq!(run.code, 0, "stderr: {}", run.stderr);
    let cached = fs::read_to_string(dir.join("fixtures").join("S3.json")).unwrap();
    let v: Value = serde_json::from_str(&cached).unwrap();
    assert_eq!(v["order"], Value::from(6));
    assert_eq!(v["table"].as_array().unwrap().len(), 6);
    // The ring itself lands on stdout.
    let ring: Value = serde_json::from_str(&run.stdout).unwrap();
    assert_eq!(ring["rank"], Value::from(3));
}

#[test]
fn verify_reports_have_the_documented_json_shape() {
    let dir = scratch("verify-shape");
    let run = run_in(
        &dir,
        &[
            "verify", "fnilp", "--G", "A4", "--F", "order:4", "--Gamma", "Z3", "--format", "json",
        ],
    );
    assert_eq!(run.code, 0, "stderr: {}", run.stderr);
    let v: Value = serde_json::from_str(&run.stdout).unwrap();
    assert_eq!(v["outcome"], Value::from("pass"));
    let clauses = v["clauses"].as_array().unwrap();
    assert_eq!(clauses.len(), 4);
    for c in clauses {
        assert!(c["pass"].as_bool().unwrap());
        assert!(c["name"].is_string());
        assert!(c["detail"].is_string());
    }
    assert!(v["statement"].is_string());
}

#[test]
fn directory_scans_classify_files_and_tolerate_garbage() {
    let dir = scratch("dir-scan");
    // Seed the fixture cache, then promote the cached group file to a corpus.
    assert_eq!(run_in(&dir, &["build", "rep", "--group", "A4"]).code, 0);
    let corpus = dir.join("corpus");
    fs::create_dir_all(&corpus).unwrap();
    fs::copy(dir.join("fixtures/A4.json"), corpus.join("A4.json")).unwrap();
    fs::write(corpus.join("broken.json"), "not json at all").unwrap();

    let run = run_in(
        &dir,
        &["scan", corpus.to_str().unwrap(), "kg-nilpotent-iff", "--format", "json"],
    );
    assert_eq!(run.code, 0, "stderr: {}", run.stderr);
    let v: Value = serde_json::from_str(&run.stdout).unwrap();
    assert_eq!(v["pass"], Value::from(1));
    assert_eq!(v["fail"], Value::from(0));
    assert_eq!(v["skip"], Value::from(1));
    assert_eq!(v["instances"].as_array().unwrap().len(), 2);
}

#[test]
fn builtin_scan_surfaces_the_known_failure() {
    let dir = scratch("builtin-scan");
    let run = run_in(&dir, &["scan", "builtin", "solv-neargp"]);
    assert_eq!(run.code, 1);
    assert!(run.stdout.contains("fail"));
    assert!(run.stdout.contains("Z5"));
}
