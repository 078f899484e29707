use std::process::Command;

use qspectral_cli::{run, EXIT_OK, EXIT_USAGE, EXIT_VIOLATION};

fn qs(args: &[&str]) -> qspectral_cli::Outcome {
    run(std::iter::once("qspectral").chain(args.iter().copied()))
}

fn strip_timing(json: &str) -> serde_json::Value {
    let mut v: serde_json::Value = serde_json::from_str(json).unwrap();
    v["meta"]["wall_seconds"] = serde_json::Value::Null;
    v
}

#[test]
fn gen_petersen() {
    let out = qs(&["gen", "--family", "petersen"]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(out.stdout.trim(), "IheA@GUAo");
}

#[test]
fn gen_requires_family_parameters() {
    let out = qs(&["gen", "--family", "cycle"]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("--n"));
    let out = qs(&["gen", "--family", "complete_bipartite", "--parts", "2,3"]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(out.stdout.trim(), qspectral::GraphFamily::CompleteBipartite { s: 2, t: 3 }.build().unwrap().to_graph6().unwrap());
}

#[test]
fn bound_thm1_worked_example() {
    let out = qs(&["bound", "--formula", "thm1", "--delta", "6", "--k", "3", "--l", "4", "--n", "10"]);
    assert_eq!(out.code, EXIT_OK);
    let v: f64 = out.stdout.trim().parse().unwrap();
    assert!((v - 12.0).abs() <= 1e-12);
}

#[test]
fn bound_reports_failed_hypothesis() {
    let out = qs(&["bound", "--formula", "thm1", "--delta", "6", "--k", "5", "--l", "4", "--n", "10"]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.starts_with("error:"));
}

#[test]
fn bound_json_has_value() {
    let out = qs(&["bound", "--formula", "lem3_rho", "--n", "5", "--s", "2", "--t", "2", "--format", "json"]);
    assert_eq!(out.code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert!((v["value"].as_f64().unwrap() - 2.5615528128088303).abs() <= 1e-12);
}

#[test]
fn spectra_cycle() {
    let out = qs(&["spectra", "--family", "cycle", "--n", "6", "--format", "json"]);
    assert_eq!(out.code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert!((v[0]["q"]["value"].as_f64().unwrap() - 4.0).abs() <= 1e-9);
    assert!((v[0]["rho"]["value"].as_f64().unwrap() - 2.0).abs() <= 1e-9);
}

#[test]
fn spectra_needs_exactly_one_source() {
    assert_eq!(qs(&["spectra"]).code, EXIT_USAGE);
    assert_eq!(qs(&["spectra", "--graph6", "Dhc", "--family", "petersen"]).code, EXIT_USAGE);
    let out = qs(&["spectra", "--graph6", "D!!"]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("graph6"));
}

#[test]
fn check_petersen_profile() {
    let out = qs(&["check", "--family", "petersen", "--k", "0", "--l", "1", "--s", "2", "--t", "2", "--format", "json"]);
    assert_eq!(out.code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v[0]["book_free"]["free"], true);
    assert_eq!(v[0]["k2_free"]["free"], true);
    assert_eq!(v[0]["kst_free"]["free"], true);
    assert_eq!(v[0]["srg"]["k_reg"], 3);
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(qs(&["--help"]).code, EXIT_OK);
    assert_eq!(qs(&["--version"]).code, EXIT_OK);
    assert_eq!(qs(&["nonsense"]).code, EXIT_USAGE);
}

#[test]
fn audit_json_is_reproducible_apart_from_timing() {
    let args = ["audit", "--exhaustive", "5", "--all-records"];
    let a = qs(&args);
    let b = qs(&args);
    assert_eq!(a.code, EXIT_OK);
    assert_eq!(strip_timing(&a.stdout), strip_timing(&b.stdout));
    let c = qs(&["audit", "--exhaustive", "5", "--all-records", "--jobs", "3"]);
    assert_eq!(strip_timing(&a.stdout), strip_timing(&c.stdout));
}

#[test]
fn audit_printed_lemma_violations_do_not_fail() {
    let out = qs(&["audit", "--exhaustive", "5", "--formulas", "lem1_printed"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stderr.contains("finding"));
}

#[test]
fn audit_csv_and_out_file() {
    let dir = std::env::temp_dir().join(format!("qspectral-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let corpus = dir.join("corpus.g6");
    std::fs::write(&corpus, ">>graph6<<IheA@GUAo\nO~`HW}GPHDaNaGPCcPWaN\n\nnot-a-graph\n").unwrap();
    let report = dir.join("report.csv");
    let out = qs(&[
        "audit",
        "--input",
        corpus.to_str().unwrap(),
        "--formulas",
        "thm1",
        "--format",
        "csv",
        "--out",
        report.to_str().unwrap(),
    ]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    assert!(out.stdout.is_empty());
    assert!(out.stderr.contains("skipped line 4"));
    let text = std::fs::read_to_string(&report).unwrap();
    assert!(text.starts_with("graph6,formula,params,bound,q_or_rho,residual,verdict,srg"));
    assert!(text.contains("equality"));
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn audit_friendship() {
    let out = qs(&["audit", "--friendship", "5"]);
    assert_eq!(out.code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["confirmed"], true);
}

#[test]
fn search_respects_thm1() {
    let out = qs(&["search", "--n", "10", "--k", "3", "--l", "4", "--budget", "400", "--restarts", "2", "--seed", "1", "--format", "json"]);
    assert_ne!(out.code, EXIT_VIOLATION);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert!(v["best_q"].as_f64().unwrap() <= 12.0 + 1e-8);
    assert_eq!(v["bound_violation"], false);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_qspectral");
    let ok = Command::new(bin).args(["gen", "--family", "petersen"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(EXIT_OK));
    assert_eq!(String::from_utf8_lossy(&ok.stdout).trim(), "IheA@GUAo");
    let bad = Command::new(bin).args(["bound", "--formula", "nope"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_USAGE));
}
