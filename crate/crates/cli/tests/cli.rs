use hls_lab::{run, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("hls-lab").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn lines(s: &str) -> Vec<Value> {
    s.lines().map(|l| serde_json::from_str(l).expect("json line")).collect()
}

#[test]
fn functional_equation_n3() {
    let (code, out, _) = call(&["verify", "--check", "functional-equation", "--n", "3"]);
    assert_eq!(code, EXIT_OK);
    let v = lines(&out);
    assert_eq!(v.len(), 1);
    assert_eq!(v[0]["check"], "functional-equation");
    assert_eq!(v[0]["n"], 3);
    assert_eq!(v[0]["status"], "pass");
    assert!(v[0]["millis"].is_u64());
}

#[test]
fn hls_two_latex() {
    let (code, out, _) = call(&["compute", "--series", "hls", "--n", "2", "--format", "latex"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("1 - YX_{1}X_{2}"), "{out}");
}

#[test]
fn hls_two_json() {
    let (code, out, _) = call(&["compute", "--n", "2"]);
    assert_eq!(code, EXIT_OK);
    let v = &lines(&out)[0];
    assert_eq!(v["series"], "hls");
    assert_eq!(v["value"]["numerator"].as_array().unwrap().len(), 2);
}

#[test]
fn fnt_small_census() {
    let (code, out, _) = call(&["verify", "--check", "fnT", "--n", "2", "--p", "2", "--max-index-exp", "4"]);
    assert_eq!(code, EXIT_OK);
    let v = &lines(&out)[0];
    assert_eq!(v["status"], "pass");
    assert_eq!(v["detail"]["lattices"], 57);
}

#[test]
fn usage_errors() {
    let (code, _, err) = call(&["compute", "--n", "9"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("--n"), "{err}");
    let (code, _, err) = call(&["verify", "--check", "nope"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("--check"));
    let (code, _, err) = call(&["census", "--n", "2", "--p", "4", "--max-index-exp", "2"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("--p"));
    let (code, _, _) = call(&["frobnicate"]);
    assert_eq!(code, EXIT_USAGE);
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("verify"));
}

#[test]
fn census_outputs() {
    let (code, out, _) = call(&["census", "--n", "2", "--p", "2", "--max-index-exp", "2", "--group-by", "delta"]);
    assert_eq!(code, EXIT_OK);
    let v = lines(&out);
    let total: u64 = v[..v.len() - 1].iter().map(|r| r["count"].as_u64().unwrap()).sum();
    assert_eq!(total, 11);
    assert_eq!(v.last().unwrap()["total"], 11);

    let (code, csv, _) = call(&["census", "--n", "2", "--p", "2", "--max-index-exp", "1", "--format", "csv"]);
    assert_eq!(code, EXIT_OK);
    assert!(csv.starts_with("tableau-json,delta,type,count\n"));
    assert_eq!(csv.lines().count(), 4);
}

#[test]
fn export_to_file() {
    let dir = std::env::temp_dir().join(format!("hls-lab-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("hs2.json");
    let (code, out, _) = call(&["export", "--series", "hs", "--n", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert!(out.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["series"], "hs");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn expand_lists_coefficients() {
    let (code, out, _) = call(&["expand", "--series", "hls", "--n", "1", "--bound", "3"]);
    assert_eq!(code, EXIT_OK);
    // 1/(1 - X_1) up to degree 3.
    assert_eq!(lines(&out).len(), 4);
}

#[test]
fn deterministic_output() {
    let args = ["census", "--n", "3", "--p", "2", "--max-index-exp", "3", "--seed", "7"];
    let a = call(&args);
    let b = call(&["--seed", "99", "census", "--n", "3", "--p", "2", "--max-index-exp", "3"]);
    assert_eq!(a.0, EXIT_OK);
    assert_eq!(a.1, b.1);
}

#[test]
fn fast_suite_passes() {
    let (code, out, _) = call(&["verify", "--all", "--fast"]);
    assert_eq!(code, EXIT_OK);
    let v = lines(&out);
    assert!(v.len() > 50);
    assert!(v.iter().all(|r| r["status"] == "pass" || r["status"] == "conjecture-consistent"));
}

#[test]
fn list_names_every_check() {
    let (code, out, _) = call(&["verify", "--list"]);
    assert_eq!(code, EXIT_OK);
    let names: Vec<String> = lines(&out).iter().map(|r| r["check"].as_str().unwrap().to_string()).collect();
    for n in &names {
        let (code, _, err) = call(&["verify", "--check", n, "--n", "2", "--max-index-exp", "3"]);
        assert!(code == EXIT_OK, "{n}: {err}");
    }
}
