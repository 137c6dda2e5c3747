//! Exit codes and JSON envelopes across the whole command surface.

use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_pwhodge"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf8 stdout"),
        String::from_utf8(out.stderr).expect("utf8 stderr"),
    )
}

fn fixture(name: &str) -> String {
    format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn json_envelope(args: &[&str], command: &str, expect_code: i32) -> serde_json::Value {
    let mut with_json: Vec<&str> = args.to_vec();
    with_json.push("--json");
    let (code, out, err) = run(&with_json);
    assert_eq!(code, expect_code, "args {args:?}: stderr {err}");
    let value: serde_json::Value =
        serde_json::from_str(out.trim()).unwrap_or_else(|e| panic!("args {args:?}: {e}: {out}"));
    assert_eq!(value["command"], serde_json::json!(command));
    assert!(value.get("result").is_some(), "args {args:?}: {value}");
    value
}

#[test]
fn every_subcommand_emits_a_json_envelope() {
    json_envelope(&["compute", "--table", "U22"], "compute", 0);
    json_envelope(&["mirror", "--poly", "p^3", "--dim", "3"], "mirror", 0);
    json_envelope(&["mirror", "--table", "Ycirc"], "mirror", 0);
    let v = json_envelope(
        &["verify", "--side-a", "U22", "--side-b", "Ycirc"],
        "verify",
        0,
    );
    assert_eq!(v["holds"], serde_json::json!(true));
    json_envelope(
        &["period", "--expr", "x+1/x", "--vars", "x", "--max-n", "4"],
        "period",
        0,
    );
    json_envelope(&["les", "--problem", &fixture("les_y22.json")], "les", 0);
    json_envelope(
        &[
            "diamond", "--ky", "1", "--ph", "2", "--h12", "1", "--h21", "1",
        ],
        "diamond",
        0,
    );
    let v = json_envelope(
        &[
            "grids",
            "--a",
            "U22",
            "--b",
            "Ycirc",
            "--transform",
            "logCY(3)",
        ],
        "grids",
        0,
    );
    assert_eq!(v["holds"], serde_json::json!(true));
    json_envelope(&["catalog", "list"], "catalog", 0);
    json_envelope(&["catalog", "show", "Dh"], "catalog", 0);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("dump.json");
    json_envelope(
        &["catalog", "dump", "U22", path.to_str().unwrap()],
        "catalog",
        0,
    );
    assert!(path.exists());
}

#[test]
fn verification_failures_exit_one() {
    // a pair that is genuinely not mirror under the transform
    let (code, out, _) = run(&["verify", "--side-a", "point", "--side-b", "Ycirc"]);
    assert_eq!(code, 2, "dimension mismatch is a format error: {out}");
    let (code, out, _) = run(&[
        "grids",
        "--a",
        "U22",
        "--b",
        "Ycirc",
        "--transform",
        "identity",
    ]);
    assert_eq!(code, 1);
    assert!(out.contains("FAILS"));
    let (code, _, _) = run(&["les", "--problem", &fixture("les_y22_nohints.json")]);
    assert_eq!(code, 1);
}

#[test]
fn usage_and_format_errors_exit_two() {
    let (code, _, err) = run(&["compute", "--table", "NoSuchKey"]);
    assert_eq!(code, 2);
    assert!(err.contains("available"), "stderr: {err}");

    let (code, _, _) = run(&["mirror", "--poly", "p^3"]);
    assert_eq!(code, 2, "missing --dim");

    let (code, _, _) = run(&["mirror", "--table", "U22", "--poly", "p"]);
    assert_eq!(code, 2, "conflicting inputs");

    let (code, _, err) = run(&["period", "--expr", "x+q", "--vars", "x", "--max-n", "2"]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown variable"), "stderr: {err}");

    let (code, _, _) = run(&[
        "grids",
        "--a",
        "U22",
        "--b",
        "U22",
        "--transform",
        "weird(1)",
    ]);
    assert_eq!(code, 2);

    let (code, _, _) = run(&["les", "--problem", "/nonexistent/problem.json"]);
    assert_eq!(code, 2);

    let (code, _, _) = run(&["not-a-subcommand"]);
    assert_eq!(code, 2);

    let (code, _, err) = run(&[
        "diamond", "--ky", "0", "--ph", "1", "--h12", "0", "--h21", "0",
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("ph"), "stderr: {err}");
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        vec!["compute", "--table", "U22"],
        vec!["verify", "--side-a", "U22", "--side-b", "Ycirc"],
        vec!["les", "--problem", &fixture("les_y22.json")],
        vec!["catalog", "show", "Ycirc"],
        vec![
            "diamond", "--ky", "3", "--ph", "4", "--h12", "1", "--h21", "2",
        ],
    ] {
        let (_, first, _) = run(&args);
        let (_, second, _) = run(&args);
        assert_eq!(first, second, "args {args:?}");
        assert!(!first.is_empty());
    }
}

#[test]
fn table_files_are_accepted_where_keys_are() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("y.json");
    let (code, _, _) = run(&["catalog", "dump", "Ycirc", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let (code, out, _) = run(&[
        "verify",
        "--side-a",
        "U22",
        "--side-b",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("HOLDS"));
}
