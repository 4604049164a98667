use std::process::{Command, Output};

fn permstat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_permstat"))
        .args(args)
        .env_remove("PERMSTAT_MAX_RANK")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).trim().to_string()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

#[test]
fn stat_ninvsum() {
    let o = permstat(&["stat", "--perm", "3 1 4 5 6 2", "--stat", "ninvsum"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "23");
}

#[test]
fn stat_with_parameters() {
    let o = permstat(&["stat", "--perm", "4213", "--stat", "inv_k1k2", "--k", "1", "--k2", "2"]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "1"));
    let o = permstat(&["stat", "--perm", "1423", "--stat", "lbsum_variant", "--variant", "ge_k", "--k", "1"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn cosine_construct() {
    let o = permstat(&["cosine", "construct", "--k", "50"]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "1 3 5 2 4"));
}

#[test]
fn cosine_excluded_value() {
    let o = permstat(&["cosine", "construct", "--k", "12"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("not achievable"));
}

#[test]
fn cosine_count_respects_cap() {
    let o = permstat(&["cosine", "count", "--k", "100", "--max-rank", "6"]);
    assert_eq!(code(&o), 2);
    let o = permstat(&["cosine", "count", "--k", "14"]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "1"));
}

#[test]
fn dist_json() {
    let o = permstat(&["dist", "--stat", "ninvsum", "--n", "3", "--format", "json"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), r#"{"coeffs":["1","2","0","2","1"]}"#);
}

#[test]
fn dist_methods_agree() {
    let run = |m: &str| {
        stdout(&permstat(&[
            "dist", "--stat", "inv_le_k", "--k", "4", "--n", "6", "--method", m, "--format", "json",
        ]))
    };
    assert!(!run("brute").is_empty());
    assert_eq!(run("brute"), run("closed"));
    let o = permstat(&["dist", "--stat", "ninvsum", "--n", "6", "--method", "recurrence", "--cross-check"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn dist_missing_closed_form() {
    let o = permstat(&["dist", "--stat", "cosine", "--n", "4", "--method", "closed"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn bad_arguments() {
    assert_eq!(code(&permstat(&["stat", "--perm", "1 1 2", "--stat", "invsum"])), 1);
    assert_eq!(code(&permstat(&["stat", "--perm", "123", "--stat", "nope"])), 1);
    assert_eq!(code(&permstat(&["stat", "--perm", "123", "--stat", "inv_k"])), 1);
    assert_eq!(code(&permstat(&["frobnicate"])), 1);
    assert_eq!(code(&permstat(&["tables", "--table", "Q"])), 1);
    assert_eq!(code(&permstat(&["verify", "--suite", "nonsense"])), 1);
    assert_eq!(code(&permstat(&["verify", "--max-n", "12"])), 1);
}

#[test]
fn help_and_version() {
    assert_eq!(code(&permstat(&["--help"])), 0);
    assert_eq!(code(&permstat(&["--version"])), 0);
}

#[test]
fn verify_all_suites() {
    let o = permstat(&["verify", "--suite", "all", "--max-n", "6"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stdout));
    assert!(stdout(&o).lines().all(|l| l.starts_with("PASS")));
    let o = permstat(&["verify", "--suite", "zone", "--max-n", "5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v[0]["status"], "pass");
}

#[test]
fn tables_csv_and_json() {
    let o = permstat(&["tables", "--table", "N", "--n-max", "3"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.starts_with("n,coeffs_ascending"));
    assert!(out.contains(r#"3,"1 2 0 2 1""#));
    let o = permstat(&["tables", "--table", "K", "--n-max", "4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["table"], "K");
}

#[test]
fn jobs_do_not_change_output() {
    let a = permstat(&["--jobs", "1", "dist", "--stat", "cosine", "--n", "7", "--method", "brute"]);
    let b = permstat(&["--jobs", "8", "dist", "--stat", "cosine", "--n", "7", "--method", "brute"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}
