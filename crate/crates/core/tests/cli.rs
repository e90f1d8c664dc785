use std::process::Command;

use serde_json::Value;

fn nilsum(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_nilsum"))
        .args(args)
        .output()
        .unwrap()
}

fn report(args: &[&str]) -> Value {
    let out = nilsum(args);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn check_reports_predicates() {
    let r = report(&["check", "--spec", "sl2:p=7", "--predicates", "solvable"]);
    assert_eq!(r["schema_version"], 1);
    assert_eq!(r["command"], "check");
    assert_eq!(r["results"][0]["value"]["valid"], true);
    assert_eq!(r["results"][1]["value"], false);

    let r = report(&[
        "check",
        "--spec",
        "semidirect:two_dim_nonabelian,p=3",
        "--predicates",
        "solvable",
    ]);
    assert_eq!(r["results"][1]["value"], true);
}

#[test]
fn default_prime_fills_specs() {
    let r = report(&[
        "check",
        "--spec",
        "zassenhaus:n=1",
        "--p",
        "5",
        "--predicates",
        "nilpotent",
    ]);
    assert_eq!(r["params"]["spec"], "zassenhaus:p=5,n=1");
    assert_eq!(r["stats"]["dim"], 5);
}

#[test]
fn parse_errors_carry_a_position() {
    let out = nilsum(&["check", "--spec", "sl2:p=7,,"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("position"));
}

#[test]
fn search_over_budget_is_reported() {
    let r = report(&["search", "--spec", "sl2:p=7", "--budget-subspaces", "10"]);
    assert_eq!(r["stats"]["status"], "budget_exhausted");
}

#[test]
fn serialize_then_load() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("z.json");
    let path_s = path.to_str().unwrap();
    let r = report(&["serialize", "--spec", "zassenhaus:p=5,n=1", "--out", path_s]);
    assert_eq!(r["results"][0]["graded"], true);
    let file: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(file["grading"], serde_json::json!([-1, 0, 1, 2, 3]));
    let out = nilsum(&["serialize", "--load", path_s]);
    assert!(out.status.success());

    // flip one structure constant and the file no longer loads
    let mut bad = file.clone();
    let c = bad["sc"][0][3].as_u64().unwrap();
    bad["sc"][0][3] = ((c + 1) % 5).into();
    std::fs::write(&path, bad.to_string()).unwrap();
    let out = nilsum(&["serialize", "--load", path_s]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Jacobi"));
}

#[test]
fn report_goes_to_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("suite.json");
    let out = nilsum(&["suite", "lemma4", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let r: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(r["stats"]["all_one_dimensional"], true);
}
