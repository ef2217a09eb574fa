//! End-to-end command-line behaviour: exit codes, report structure, and the
//! error paths of the document format.

use std::path::{Path, PathBuf};

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .display()
        .to_string()
}

fn run_to_file(args: &[&str]) -> (i32, serde_json::Value) {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let mut full: Vec<String> = vec![
        "stripharm".into(),
        "--out".into(),
        out.display().to_string(),
    ];
    full.extend(args.iter().map(|s| s.to_string()));
    let code = stripharm::cli::run(full);
    let report = if out.exists() {
        serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap()
    } else {
        serde_json::Value::Null
    };
    (code, report)
}

#[test]
fn identity_suite_reports_all_identities() {
    let (code, report) = run_to_file(&["identity", "--jmax", "8"]);
    assert_eq!(code, 0);
    assert_eq!(report["command"], "identity");
    assert_eq!(report["checks"].as_array().unwrap().len(), 44);
    assert!(report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["status"] == "exact-pass"));
}

#[test]
fn counterexample_exits_zero_with_growth_violation() {
    let (code, report) = run_to_file(&["counterexample"]);
    assert_eq!(code, 0);
    let checks = report["checks"].as_array().unwrap();
    assert!(checks
        .iter()
        .any(|c| c["name"].as_str().unwrap().contains("sharpness exhibit")));
    assert!(report["notes"]
        .as_array()
        .unwrap()
        .iter()
        .any(|n| n.as_str().unwrap().contains("sharp")));
}

#[test]
fn uniqueness_on_zero_spec_confirms() {
    let (code, report) = run_to_file(&[
        "uniqueness",
        &fixture("zero.json"),
        "--t0",
        "0",
        "--c",
        "pi",
        "--order",
        "1",
    ]);
    assert_eq!(code, 0);
    assert!(report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .any(|c| c["name"].as_str().unwrap().contains("confirmed")));
}

#[test]
fn uniqueness_on_counterexample_exits_one() {
    let (code, _) = run_to_file(&[
        "uniqueness",
        &fixture("counterexample.json"),
        "--t0",
        "0",
        "--c",
        "pi",
        "--order",
        "1",
    ]);
    assert_eq!(code, 1);
}

#[test]
fn parse_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{ not json").unwrap();
    let (code, _) = run_to_file(&["order", bad.to_str().unwrap()]);
    assert_eq!(code, 2);

    // harmonicity violation is a load-time error
    let nonharmonic = dir.path().join("nonharmonic.json");
    std::fs::write(
        &nonharmonic,
        r#"{"dim": 2, "modes": [{"kind": "poly-harm", "coeff": "1/1", "m": 0,
            "poly": {"2 0": "1/1"}}]}"#,
    )
    .unwrap();
    let (code, _) = run_to_file(&["order", nonharmonic.to_str().unwrap()]);
    assert_eq!(code, 2);

    let (code, _) = run_to_file(&["order", "/nonexistent/path.json"]);
    assert_eq!(code, 2);

    // unknown subcommand is a usage error
    let code = stripharm::cli::run(vec!["stripharm".to_string(), "frobnicate".to_string()]);
    assert_eq!(code, 2);
}

#[test]
fn fourier_dimension_mismatch_exits_two() {
    let (code, _) = run_to_file(&[
        "fourier",
        &fixture("t_times_y.json"),
        "--k",
        "1",
        "--y",
        "0.5,0.5",
    ]);
    assert_eq!(code, 2);
}

#[test]
fn chain_grid_table_is_written() {
    let dir = tempfile::tempdir().unwrap();
    let out: PathBuf = dir.path().join("report.json");
    let grid: PathBuf = dir.path().join("grid.csv");
    let code = stripharm::cli::run(vec![
        "stripharm".to_string(),
        "--out".to_string(),
        out.display().to_string(),
        "--grid-out".to_string(),
        grid.display().to_string(),
        "chain".to_string(),
        fixture("t3_sine.json"),
        "--order".to_string(),
        "4".to_string(),
    ]);
    assert_eq!(code, 0);
    let table = std::fs::read_to_string(&grid).unwrap();
    let mut lines = table.lines();
    assert_eq!(lines.next().unwrap(), "level,t,y1,direct,closed,absdiff");
    assert!(lines.next().is_some());
}

#[test]
fn extend_with_corrupt_tile_fails_checks() {
    let (code, report) = run_to_file(&[
        "extend",
        &fixture("counterexample.json"),
        "--t1",
        "0",
        "--t2",
        "pi",
        "--corrupt-tile",
        "1",
    ]);
    assert_eq!(code, 1);
    assert!(report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .any(|c| c["status"] == "fail"));
}

#[test]
fn nullspace_reports_exact_route_and_basis() {
    let (code, report) = run_to_file(&[
        "nullspace",
        &fixture("half_frequency.json"),
        "--odd-pairs",
        "0:0,pi:-pi",
    ]);
    assert_eq!(code, 0);
    let name = report["checks"][0]["name"].as_str().unwrap();
    assert!(name.contains("exact route"), "{name}");
    assert!(report["notes"]
        .as_array()
        .unwrap()
        .iter()
        .any(|n| n.as_str().unwrap().starts_with("basis vector")));
}

#[test]
fn report_structure_is_stable() {
    let (_, report) = run_to_file(&["order", &fixture("t3_sine.json")]);
    for key in ["command", "inputs", "checks", "notes", "exit", "timestamp"] {
        assert!(report.get(key).is_some(), "missing field {key}");
    }
    assert!(report["inputs"].as_str().unwrap().starts_with("sha256:"));
    let check = &report["checks"][0];
    for key in ["name", "status", "theorem"] {
        assert!(check.get(key).is_some(), "missing check field {key}");
    }
}
