use std::path::Path;
use std::process::Command;

use gainspec::document::ResultDocument;
use serde_json::Value;

const TRIANGLE: &str = "gaingraph 3\n1 2 +1\n2 3 +1\n1 3 -1\n";
const BALANCED_SQUARE: &str = "gaingraph 4\n1 2 pi:1/3\n2 3 pi:1/4\n3 4 pi:-7/12\n1 4 +1\n";

fn gainspec(args: &[&str], tol: Option<&str>) -> (String, String, i32) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_gainspec"));
    cmd.args(args).env_remove("GAINSPEC_TOL");
    if let Some(t) = tol {
        cmd.env("GAINSPEC_TOL", t);
    }
    let out = cmd.output().unwrap();
    (String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap(), out.status.code().unwrap())
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn matrices_json_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "t.graph", TRIANGLE);
    let (out, _, code) = gainspec(&["matrices", &f, "--kind", "DL"], None);
    assert_eq!(code, 0);
    let doc = ResultDocument::from_json(&out).unwrap();
    assert_eq!(doc.matrices["DL_max"][0], vec![[2.0, 0.0], [-1.0, 0.0], [1.0, 0.0]]);

    let (out, _, code) = gainspec(&["matrices", &f, "--kind", "D", "--mode", "both", "--csv"], None);
    assert_eq!(code, 0);
    assert_eq!(out, "D_max\n0+0i,1+0i,-1+0i\n1+0i,0+0i,1+0i\n-1+0i,1+0i,0+0i\nD_min\n0+0i,1+0i,-1+0i\n1+0i,0+0i,1+0i\n-1+0i,1+0i,0+0i\n");
}

#[test]
fn spectrum_balance_compatible() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "t.graph", TRIANGLE);
    let (out, _, code) = gainspec(&["spectrum", &f], None);
    assert_eq!(code, 0);
    let doc = ResultDocument::from_json(&out).unwrap();
    assert_eq!(doc.spectra["DL_max"].eigenvalues, vec![1.0, 1.0, 4.0]);
    assert_eq!(doc.spectra["DL_max"].nullity, 0);

    let (out, _, _) = gainspec(&["balance", &f], None);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["facts"]["balanced"], Value::Bool(false));
    assert_eq!(v["facts"]["witness"]["kind"], "cycle");
    assert_eq!(v["facts"]["witness"]["gain"], "-1");

    let (out, _, _) = gainspec(&["compatible", &f], None);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["facts"]["distance_compatible"], Value::Bool(true));
    assert_eq!(v["facts"]["ordering_independent"], Value::Bool(true));
}

#[test]
fn ordering_flags() {
    let dir = tempfile::tempdir().unwrap();
    // 4-cycle with one gain i: the opposite pairs have two path gains
    let f = write(dir.path(), "c4.graph", "gaingraph 4\n1 2 pi:1/2\n2 3 +1\n3 4 +1\n1 4 +1\norder 4 3 2 1\n");
    let entry = |args: &[&str]| {
        let (out, _, code) = gainspec(args, None);
        assert_eq!(code, 0);
        ResultDocument::from_json(&out).unwrap().matrices.into_values().next().unwrap()[0][2]
    };
    assert_eq!(entry(&["matrices", &f, "--kind", "D", "--ordering", "std"]), [2.0, 0.0]);
    assert_eq!(entry(&["matrices", &f, "--kind", "D", "--ordering", "std", "--mode", "min"]), [0.0, 2.0]);
    // under the reverse order the gains are read from 3, here -i, then conjugated
    assert_eq!(entry(&["matrices", &f, "--kind", "D", "--ordering", "rev", "--mode", "min"]), [0.0, 2.0]);
    assert_eq!(entry(&["matrices", &f, "--kind", "D"]), entry(&["matrices", &f, "--kind", "D", "--ordering", "rev"]));
}

#[test]
fn verify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "sq.graph", BALANCED_SQUARE);
    let (out, _, code) = gainspec(&["verify", &f], None);
    assert_eq!(code, 0, "{out}");
    let doc = ResultDocument::from_json(&out).unwrap();
    assert!(doc.all_hold());
    assert!(doc.verdicts.iter().any(|v| v.theorem_id == "dq-upper-bound"));
    assert_eq!(doc.facts["balanced"], Value::Bool(true));

    let (_, _, code) = gainspec(&["verify", &f], Some("1e-300"));
    assert_eq!(code, 1);

    let (_, err, code) = gainspec(&["verify", &f], Some("abc"));
    assert_eq!(code, 2);
    assert!(err.contains("GAINSPEC_TOL"));
}

#[test]
fn input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.graph", "gaingraph 3\n1 2 +1\n");
    let (_, err, code) = gainspec(&["verify", &bad], None);
    assert_eq!(code, 2);
    assert!(err.contains("disconnected"), "{err}");
    let syntax = write(dir.path(), "syntax.graph", "gaingraph 2\n1 2 pi:x\n");
    let (_, err, code) = gainspec(&["balance", &syntax], None);
    assert_eq!(code, 2);
    assert!(err.contains("line 2, column 5"), "{err}");
    let (_, _, code) = gainspec(&["balance", "/nonexistent/file.graph"], None);
    assert_eq!(code, 2);
    let (_, _, code) = gainspec(&["frobnicate"], None);
    assert_eq!(code, 2);
}

#[test]
fn sweep_is_deterministic() {
    let args = ["sweep", "--n", "5", "--samples", "3", "--seed", "9"];
    let (a, _, code) = gainspec(&args, None);
    assert_eq!(code, 0);
    let (b, _, _) = gainspec(&args, None);
    assert_eq!(a, b);
    let v: Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["all_hold"], Value::Bool(true));
    assert_eq!(v["config"]["seed"], 9);
}
