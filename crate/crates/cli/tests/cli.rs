use std::path::Path;
use std::process::{Command, Output};

use ctl_core::classify::ClassificationReport;

fn ctl(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ctl"))
        .args(args)
        .env("CTL_CACHE_DIR", cache)
        .output()
        .expect("ctl runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn classify_json_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let o = ctl(dir.path(), &["classify", "--type", "D", "--rank", "6", "--no-cache"]);
    assert!(o.status.success());
    let r: ClassificationReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.counts.cluster_tilting, 672);
    assert_eq!(r.families, ["BiserialD2m(3)", "NakayamaCycle(6,5)"]);
    let again = serde_json::to_string_pretty(&r).unwrap() + "\n";
    assert_eq!(again, stdout(&o));
}

#[test]
fn output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        &["classify", "--type", "D", "--rank", "5", "--no-cache"][..],
        &["classify", "--type", "A", "--rank", "3", "--no-cache", "--format", "text"],
        &["orbits", "--type", "E", "--rank", "6", "--format", "json"],
        &["ar-quiver", "--type", "D", "--rank", "4", "--mark-candidate", "1"],
        &["tilting", "--type", "A", "--rank", "4"],
    ] {
        let a = ctl(dir.path(), args);
        let b = ctl(dir.path(), &[&["--jobs", "1"][..], args].concat());
        assert!(a.status.success(), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn cache_is_written_and_verified() {
    let dir = tempfile::tempdir().unwrap();
    let first = ctl(dir.path(), &["classify", "--type", "A", "--rank", "3"]);
    assert!(first.status.success());
    let files: Vec<_> = std::fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(files.len(), 1);
    let second = ctl(dir.path(), &["classify", "--type", "A", "--rank", "3"]);
    assert_eq!(first.stdout, second.stdout);
    let verify = ctl(dir.path(), &["classify", "--type", "A", "--rank", "3", "--verify-cache"]);
    assert!(verify.status.success());
    assert!(String::from_utf8_lossy(&verify.stderr).contains("cache verified"));

    // a tampered cache entry is caught
    let path = files[0].as_ref().unwrap().path();
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::write(&path, text.replace("\"candidates\": 2", "\"candidates\": 3")).unwrap();
    let bad = ctl(dir.path(), &["classify", "--type", "A", "--rank", "3", "--verify-cache"]);
    assert_eq!(bad.status.code(), Some(3));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let code = |args: &[&str]| ctl(dir.path(), args).status.code();
    assert_eq!(code(&["orbits", "--type", "A", "--rank", "3"]), Some(0));
    assert_eq!(code(&["orbits", "--type", "E", "--rank", "9"]), Some(2));
    assert_eq!(code(&["orbits", "--type", "X", "--rank", "3"]), Some(2));
    assert_eq!(code(&["orbits", "--type", "A", "--rank", "3", "--orientation", "ffff"]), Some(2));
    assert_eq!(code(&["ar-quiver", "--type", "A", "--rank", "3", "--mark", "Q(1)"]), Some(2));
    assert_eq!(code(&["ar-quiver", "--type", "A", "--rank", "3", "--mode", "mod-gamma", "--mark", "P(1)[1]"]), Some(2));
    assert_eq!(code(&["ar-quiver", "--type", "E", "--rank", "6", "--mark-candidate", "1"]), Some(2));
    assert_eq!(code(&["bogus"]), Some(2));
}

#[test]
fn ar_quiver_counts() {
    let dir = tempfile::tempdir().unwrap();
    let json = |args: &[&str]| -> serde_json::Value {
        let o = ctl(dir.path(), args);
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
        serde_json::from_str(&stdout(&o)).unwrap()
    };
    let a3 = json(&["ar-quiver", "--type", "A", "--rank", "3", "--format", "json", "--mark-candidate", "1"]);
    assert_eq!(a3["vertices"].as_array().unwrap().len(), 9);
    assert_eq!(a3["arrows"].as_array().unwrap().len(), 12);
    let marked = a3["vertices"].as_array().unwrap().iter().filter(|v| v["marked"] == true).count();
    assert_eq!(marked, 3);

    let g = json(&[
        "ar-quiver", "--type", "A", "--rank", "3", "--format", "json", "--mode", "mod-gamma", "--mark-candidate", "1",
    ]);
    assert_eq!(g["vertices"].as_array().unwrap().len(), 6);

    let d8 = json(&["ar-quiver", "--type", "D", "--rank", "8", "--format", "json"]);
    assert_eq!(d8["vertices"].as_array().unwrap().len(), 64);

    let out = dir.path().join("a3.dot");
    let o = ctl(dir.path(), &["ar-quiver", "--type", "A", "--rank", "3", "-o", out.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(std::fs::read_to_string(out).unwrap().starts_with("digraph"));
}

#[test]
fn tilting_stream_is_a_json_array() {
    let dir = tempfile::tempdir().unwrap();
    let all: Vec<Vec<String>> = serde_json::from_str(&stdout(&ctl(dir.path(), &["tilting", "--type", "A", "--rank", "3"]))).unwrap();
    assert_eq!(all.len(), 14);
    assert!(all.iter().all(|t| t.len() == 3));
    let cands: Vec<Vec<String>> =
        serde_json::from_str(&stdout(&ctl(dir.path(), &["tilting", "--type", "E", "--rank", "6", "--candidates"]))).unwrap();
    assert!(cands.is_empty());
}

#[test]
fn selfcheck_fast_passes() {
    let dir = tempfile::tempdir().unwrap();
    let o = ctl(dir.path(), &["selfcheck", "--format", "json"]);
    assert!(o.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["failed"], 0);
}
