use std::process::Command;

fn involut(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_involut")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn h1_examples() {
    let (code, out, _) = involut(&["h1", "S4", "trivial"]);
    assert_eq!(code, 0);
    assert!(out.contains("#H1 = 3"));
    assert!(out.contains(": true"));
    let (_, out, _) = involut(&["h1", "C2", "trivial"]);
    assert!(out.contains("#H1 = 2"));
    let (_, out, _) = involut(&["h1", "C3", "index:1", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["classes"].as_array().unwrap().len(), 1);
}

#[test]
fn h1_errors() {
    let (code, _, err) = involut(&["h1", "C3", "index:7"]);
    assert_eq!(code, 2);
    assert!(err.contains("out of range"));
    let (code, _, _) = involut(&["h1", "X9", "trivial"]);
    assert_eq!(code, 2);
}

#[test]
fn verify_writes_reports() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("r.json");
    let (code, _, err) = involut(&["verify", "smith-thom", "--count", "20", "--out", json.to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["summary"]["passed"], 20);
    assert_eq!(v["config"]["seed"], 0);

    let csv = dir.path().join("r.csv");
    let (code, _, _) = involut(&[
        "verify", "sawin", "--groups", "C2,S3", "--format", "csv", "--out", csv.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("index,check,subject"));
    // C2 has one involutive automorphism, S3 has four
    assert_eq!(lines.count(), 5);
}

#[test]
fn verify_to_stdout_matches_library() {
    let (code, out, _) = involut(&["verify", "fibers", "--count", "5", "--seed", "9"]);
    assert_eq!(code, 0);
    let cfg = involut_harness::config::SweepConfig {
        seed: 9,
        instance_count: 5,
        ..Default::default()
    };
    let mut lib = involut_harness::report::run_sweep("fibers", &cfg).unwrap();
    let mut cli: serde_json::Value = serde_json::from_str(&out).unwrap();
    lib.wall_time_ms = 0;
    cli["wall_time_ms"] = 0.into();
    let lib: serde_json::Value = serde_json::from_str(&lib.to_json()).unwrap();
    assert_eq!(cli, lib);
}

#[test]
fn verify_rejects_unknown_check() {
    let (code, _, err) = involut(&["verify", "bogus"]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown check"));
}

#[test]
fn instance_is_reproducible() {
    let (code, a, _) = involut(&["instance", "--seed", "3"]);
    assert_eq!(code, 0);
    let (_, b, _) = involut(&["instance", "--seed", "3"]);
    assert_eq!(a, b);
    let body: String = a.lines().skip(1).map(|l| format!("{l}\n")).collect();
    assert!(involut_core::groupoid::dump::parse_dump(&body).is_ok());
}
