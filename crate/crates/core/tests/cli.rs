use std::process::Command;

fn permeq(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_permeq"))
        .args(args)
        .env_remove("PERM_EQ_GUARDS")
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(text: &str) -> serde_json::Value {
    serde_json::from_str(text).unwrap()
}

#[test]
fn solve_counts() {
    let (code, out, _) = permeq(&[
        "solve",
        "--alpha",
        "(1,2,3,4,5,6)",
        "--eq",
        "starstar",
        "--json",
    ]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["count"], 3);
    let (code, out, _) = permeq(&[
        "solve",
        "--alpha",
        "(1,2,3,4,5,6)(7,8,9,10,11,12)",
        "--eq",
        "starstar",
        "--json",
    ]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["count"], 9);
    let (code, out, _) = permeq(&[
        "solve", "--alpha", "()", "--n", "4", "--eq", "starstar", "--json",
    ]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["solutions"], serde_json::json!(["()"]));
    assert_eq!(v["degree"], 4);
}

#[test]
fn solve_star_equation() {
    let (code, out, _) = permeq(&[
        "solve",
        "--alpha",
        "(1,2,3,4,5,6)",
        "--eq",
        "star",
        "--json",
    ]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["count"], 3);
    assert_eq!(v["equation"]["kind"], "star");
}

#[test]
fn output_is_reproducible() {
    let args = ["solve", "--alpha", "(1,2,3)(4,5,6)(7,8)", "--json"];
    assert_eq!(permeq(&args).1, permeq(&args).1);
}

#[test]
fn error_exit_codes() {
    let (code, _, err) = permeq(&["solve", "--alpha", "(1,2"]);
    assert_eq!(code, 2);
    assert!(err.contains("byte"), "{err}");
    let (code, _, err) = permeq(&[
        "solve",
        "--alpha",
        "(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15)",
        "--strategy",
        "pruned",
    ]);
    assert_eq!(code, 3);
    assert!(err.contains("pruned"), "{err}");
    let (code, _, _) = permeq(&["frobnicate"]);
    assert_eq!(code, 2);
}

#[test]
fn guards_env_raises_limit() {
    let out = Command::new(env!("CARGO_BIN_EXE_permeq"))
        .args([
            "solve",
            "--alpha",
            "(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15)",
            "--strategy",
            "pruned",
            "--json",
        ])
        .env("PERM_EQ_GUARDS", "pruned=15")
        .output()
        .unwrap();
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let out = Command::new(env!("CARGO_BIN_EXE_permeq"))
        .args(["solve", "--alpha", "(1,2,3)"])
        .env("PERM_EQ_GUARDS", "bogus=1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn certify_reports() {
    let (code, out, _) = permeq(&["certify", "--cyclic", "165", "--json"]);
    assert_eq!(code, 0);
    assert!(json(&out)
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["verdict"] == "OnlyTrivial"));
    let (_, out, _) = permeq(&["certify", "--cyclic", "6", "--json"]);
    let v = json(&out);
    assert_eq!(v[0]["verdict"], "Inconclusive");
    assert_eq!(v[0]["theorem"], "A1");
    assert_eq!(v[0]["failure"]["d"], 2);
    assert_eq!(v[0]["failure"]["r"], 3);
    let (_, out, _) = permeq(&["certify", "--cyclic", "20"]);
    assert!(out.contains("A3: Inconclusive"), "{out}");
    let (code, out, _) = permeq(&["certify", "--alpha", "(1,2,3)(4,5,6)"]);
    assert_eq!(code, 0);
    assert!(out.contains("A1: OnlyTrivial"), "{out}");
}

#[test]
fn construct_reports() {
    let (code, out, _) = permeq(&["construct", "--n", "21", "--p", "7", "--json"]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["q"], 3);
    assert_eq!(v["verified"], true);
    let (code, _, _) = permeq(&["construct", "--n", "6", "--p", "5"]);
    assert_eq!(code, 2);
}

#[test]
fn roots_reports() {
    let (_, out, _) = permeq(&["roots", "(1,2)(3,4)", "--json"]);
    assert_eq!(json(&out)["count"], 2);
    let (code, out, _) = permeq(&["roots", "(1,2)"]);
    assert_eq!(code, 0);
    assert!(out.contains("no square root"), "{out}");
    let (_, out, _) = permeq(&["roots", "()", "--n", "2", "--json"]);
    assert_eq!(json(&out)["count"], 2);
}

#[test]
fn survey_files() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let (code, out, _) = permeq(&[
        "survey",
        "--n",
        "6",
        "--output",
        a.to_str().unwrap(),
        "--workers",
        "1",
    ]);
    assert_eq!(code, 0, "{out}");
    permeq(&[
        "survey",
        "--n",
        "6",
        "--output",
        b.to_str().unwrap(),
        "--workers",
        "3",
    ]);
    let bytes = std::fs::read(&a).unwrap();
    assert_eq!(bytes, std::fs::read(&b).unwrap());
    let rows = json(std::str::from_utf8(&bytes).unwrap());
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 11);
    assert_eq!(rows[0]["partition"], serde_json::json!([6]));
    assert_eq!(rows[0]["solutionCount"], 3);
    assert_eq!(rows[10]["solutionCount"], 1);
    for row in rows {
        assert!(row["solutionCount"].as_u64().unwrap() >= 1);
        if row["certA1"] == "OnlyTrivial" {
            assert_eq!(row["solutionCount"], 1);
        }
    }
    let csv_path = dir.path().join("s.csv");
    let (code, _, _) = permeq(&[
        "survey",
        "--n",
        "5",
        "--output",
        csv_path.to_str().unwrap(),
        "--format",
        "csv",
    ]);
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(&csv_path).unwrap();
    assert_eq!(text.lines().count(), 8);
    assert!(text.ends_with('\n'));
    let (code, _, err) = permeq(&["survey", "--n", "4", "--output", "/nonexistent/dir/x.json"]);
    assert_eq!(code, 2);
    assert!(err.contains("cannot write"), "{err}");
}

#[test]
fn survey_twelve_is_stable() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for (path, workers) in [(&a, "2"), (&b, "0")] {
        let (code, _, err) = permeq(&[
            "survey",
            "--n",
            "12",
            "--output",
            path.to_str().unwrap(),
            "--format",
            "csv",
            "--workers",
            workers,
        ]);
        assert_eq!(code, 0, "{err}");
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}
