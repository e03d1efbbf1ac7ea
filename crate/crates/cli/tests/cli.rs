use std::process::{Command, Output};

fn lpdm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lpdm")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = lpdm(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().trim_end().to_string()
}

#[test]
fn toric_volume() {
    assert_eq!(stdout(&["tri", "volume", r#"{"n":3,"S":[1],"T":[1,3]}"#]), r#""1/3""#);
    assert_eq!(stdout(&["oracle", "volume", r#"{"n":3,"S":[1],"T":[1,3]}"#]), r#""1/3""#);
}

#[test]
fn catalan_two() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["catalan", "2"])).unwrap();
    assert_eq!(v["feasible_count"], 6);
    assert_eq!(v["spec"]["S"], serde_json::json!([]));
    assert_eq!(v["spec"]["T"], serde_json::json!([1, 3]));
}

#[test]
fn chain_count() {
    assert_eq!(stdout(&["order", "chains", r#"{"S":[1,3,5],"T":[1,3,5,6],"n":6}"#]), "61");
}

#[test]
fn output_is_byte_identical() {
    for args in [
        &["tri", "simplices", r#"{"n":5,"S":[2,3],"T":[2,3,5]}"#][..],
        &["matroid", "envelope", r#"{"n":3,"S":[1],"T":[2,3]}"#],
        &["polytope", "vertices", r#"{"n":4,"S":[],"T":[1,2,3,4]}"#],
    ] {
        let a = lpdm(args).stdout;
        let b = lpdm(args).stdout;
        assert!(!a.is_empty());
        assert_eq!(a, b, "{args:?}");
    }
}

#[test]
fn exit_codes() {
    let domain = lpdm(&["matroid", "delete", r#"{"n":2,"S":[2],"T":[2]}"#, "2"]);
    assert_eq!(domain.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&domain.stdout).unwrap();
    assert_eq!(v["status"], "error");
    assert_eq!(v["reason"], "domain");

    let order = lpdm(&["tri", "volume", r#"{"n":3,"S":[3],"T":[1]}"#]);
    assert_eq!(order.status.code(), Some(1));

    let malformed = lpdm(&["tri", "volume", r#"{"n":3,"S":[1"#]);
    assert_eq!(malformed.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_slice(&malformed.stdout).unwrap();
    assert_eq!(v["reason"], "parse");

    assert_eq!(lpdm(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn envelope_wraps_payload() {
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["--envelope", "polytope", "dim", r#"{"n":4,"S":[],"T":[1,3]}"#])).unwrap();
    assert_eq!(v["status"], "ok");
    assert_eq!(v["payload"]["dimension"], 3);
    assert_eq!(v["payload"]["linked"], false);
    assert!(v["timing_ms"].is_u64());
}

#[test]
fn negative_labels_are_accepted() {
    let out = stdout(&["matroid", "contract", r#"{"n":2,"S":[],"T":[-1,7],"ground":[-1,7]}"#, "-1"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["ground"], serde_json::json!([7]));
}

#[test]
fn render_writes_svg() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("d.svg");
    stdout(&["render", r#"{"n":3,"S":[1],"T":[1,3]}"#, "--svg", file.to_str().unwrap()]);
    let text = std::fs::read_to_string(&file).unwrap();
    assert!(text.starts_with("<svg"));
    assert!(text.contains("stroke-dasharray"));
}

#[test]
fn selftest_small() {
    let out = lpdm(&["selftest", "--max-n", "3"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().filter(|l| l.starts_with("PASS")).count() >= 13);
    assert!(!text.contains("FAIL"));
}

#[test]
fn thread_override() {
    let out = Command::new(env!("CARGO_BIN_EXE_lpdm"))
        .env("LPDM_THREADS", "2")
        .args(["order", "leq", r#"{"n":3,"S":[1],"T":[2]}"#])
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "true");
    let bad = Command::new(env!("CARGO_BIN_EXE_lpdm"))
        .env("LPDM_THREADS", "zero")
        .args(["order", "leq", r#"{"n":3,"S":[1],"T":[2]}"#])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
