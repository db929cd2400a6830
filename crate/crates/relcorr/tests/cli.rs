//! Black-box tests of the command-line interface: exact output bytes,
//! exit codes, CSV shapes, and manifest echoing.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_relcorr"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?} failed: {out:?}");
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn correlate_prints_twelve_decimals() {
    let text = stdout(&[
        "correlate",
        "--spin",
        "half",
        "--operator",
        "nw",
        "--backend",
        "closed",
        "--momenta",
        "cm",
        "--x",
        "0.7",
        "--a",
        "0,0,1",
        "--b",
        "0,0,1",
    ]);
    assert_eq!(text, "-1.000000000000\n");

    let text = stdout(&[
        "correlate",
        "--spin",
        "half",
        "--operator",
        "cz",
        "--backend",
        "closed",
        "--momenta",
        "eq13",
        "--x",
        "1",
        "--a",
        "0,0,1",
        "--b",
        "0.8660254,0,-0.5",
    ]);
    assert_eq!(text, "1.000000000000\n");
}

#[test]
fn correlate_backends_agree() {
    for backend in ["closed", "oracle"] {
        let text = stdout(&[
            "correlate",
            "--spin",
            "one",
            "--operator",
            "cz",
            "--backend",
            backend,
            "--momenta",
            "eq13",
            "--x",
            "1.3",
            "--a",
            "0.6,0,0.8",
            "--b",
            "0,1,0",
        ]);
        let value: f64 = text.trim().parse().unwrap();
        assert!(value.abs() <= 1.0);
        if backend == "closed" {
            continue;
        }
        let closed = stdout(&[
            "correlate",
            "--spin",
            "one",
            "--operator",
            "cz",
            "--backend",
            "closed",
            "--momenta",
            "eq13",
            "--x",
            "1.3",
            "--a",
            "0.6,0,0.8",
            "--b",
            "0,1,0",
        ]);
        assert_eq!(text, closed);
    }
}

#[test]
fn missing_closed_form_exits_3_and_names_the_alternative() {
    let out = run(&[
        "correlate",
        "--spin",
        "one",
        "--operator",
        "nw",
        "--backend",
        "closed",
        "--momenta",
        "eq13",
        "--x",
        "1",
        "--a",
        "0,0,1",
        "--b",
        "0,0,1",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("oracle"), "stderr was: {err}");

    let out = run(&[
        "correlate",
        "--spin",
        "one",
        "--operator",
        "nw",
        "--backend",
        "oracle",
        "--momenta",
        "eq13",
        "--x",
        "1",
        "--a",
        "0,0,1",
        "--b",
        "0,0,1",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn invalid_flags_exit_2() {
    // unknown enum value
    let out = run(&[
        "correlate",
        "--spin",
        "two",
        "--operator",
        "nw",
        "--x",
        "1",
        "--a",
        "0,0,1",
        "--b",
        "0,0,1",
    ]);
    assert_eq!(out.status.code(), Some(2));

    // direction that is not close to unit length
    let out = run(&[
        "correlate",
        "--spin",
        "half",
        "--operator",
        "nw",
        "--x",
        "1",
        "--a",
        "0,0,2",
        "--b",
        "0,0,1",
    ]);
    assert_eq!(out.status.code(), Some(2));

    // negative kinematic parameter
    let out = run(&[
        "correlate",
        "--spin",
        "half",
        "--operator",
        "nw",
        "--x",
        "-1",
        "--a",
        "0,0,1",
        "--b",
        "0,0,1",
    ]);
    assert_eq!(out.status.code(), Some(2));

    // inequality that needs spin one
    let out = run(&[
        "mermin",
        "--spin",
        "half",
        "--operator",
        "nw",
        "--momenta",
        "cm",
        "--x",
        "0",
        "--a",
        "0,0,1",
        "--b",
        "1,0,0",
        "--c",
        "0,1,0",
    ]);
    assert_eq!(out.status.code(), Some(2));

    // missing directions for the requested quantity
    let out = run(&[
        "sweep",
        "--spin",
        "half",
        "--operator",
        "nw",
        "--quantity",
        "chsh",
        "--a",
        "0,0,1",
        "--b",
        "0,0,1",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sweep_emits_inclusive_grid_with_fixed_columns() {
    let text = stdout(&[
        "sweep",
        "--spin",
        "half",
        "--operator",
        "both",
        "--momenta",
        "eq13",
        "--a",
        "0,0,1",
        "--b",
        "0,0,1",
        "--x-min",
        "0",
        "--x-max",
        "2",
        "--steps",
        "2",
    ]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0], "x,value_nw,value_cz");
    assert!(lines[1].starts_with("0,"));
    assert!(lines[2].starts_with("2,"));
    for line in &lines[1..] {
        assert_eq!(line.split(',').count(), 3);
        for cell in line.split(',') {
            let v: f64 = cell.parse().unwrap();
            assert!(v.is_finite());
        }
    }
}

#[test]
fn sweep_single_operator_leaves_other_column_empty() {
    let text = stdout(&[
        "sweep",
        "--spin",
        "half",
        "--operator",
        "nw",
        "--momenta",
        "eq13",
        "--a",
        "0,0,1",
        "--b",
        "0,0,1",
        "--x-min",
        "0",
        "--x-max",
        "1",
        "--steps",
        "3",
    ]);
    for line in text.lines().skip(1) {
        let cells: Vec<&str> = line.split(',').collect();
        assert_eq!(cells.len(), 3);
        assert!(!cells[1].is_empty());
        assert!(cells[2].is_empty());
    }
}

#[test]
fn extrema_rows_use_fixed_precision() {
    let text = stdout(&[
        "extrema",
        "--spin",
        "half",
        "--operator",
        "nw",
        "--momenta",
        "eq13",
        "--a",
        "0,0,1",
        "--b",
        "0.8660254037844386,0,-0.5",
    ]);
    assert_eq!(text, "x_star,value,kind\n2.000000,1.000000000,max\n");
}

#[test]
fn chsh_mermin_report_value_bound_and_flag() {
    let text = stdout(&[
        "chsh",
        "--spin",
        "half",
        "--operator",
        "nw",
        "--momenta",
        "eq13",
        "--x",
        "2",
        "--a",
        "0,0,1",
        "--b",
        "0,0,1",
        "--c",
        "0.8660254037844386,0,0.5",
        "--d",
        "0.8660254037844386,0,0.5",
        "--format",
        "csv",
    ]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "value,bound,violated");
    let cells: Vec<&str> = lines[1].split(',').collect();
    let value: f64 = cells[0].parse().unwrap();
    assert!((value - 2.5).abs() < 1e-9);
    assert_eq!(cells[1], "2");
    assert_eq!(cells[2], "true");

    let text = stdout(&[
        "mermin",
        "--spin",
        "one",
        "--operator",
        "nw",
        "--momenta",
        "cm",
        "--x",
        "0",
        "--a",
        "0,0,1",
        "--b",
        "1,0,0",
        "--c",
        "0,1,0",
        "--format",
        "csv",
    ]);
    let lines: Vec<&str> = text.lines().collect();
    let cells: Vec<&str> = lines[1].split(',').collect();
    let value: f64 = cells[0].parse().unwrap();
    assert!(
        value.abs() < 1e-12,
        "orthogonal triple should give 0, got {value}"
    );
    assert_eq!(cells[2], "false");
}

#[test]
fn json_outputs_carry_manifest_and_parse() {
    let text = stdout(&[
        "chsh",
        "--spin",
        "half",
        "--operator",
        "cz",
        "--momenta",
        "eq13",
        "--x",
        "1",
        "--a",
        "0,0,1",
        "--b",
        "0,0,1",
        "--c",
        "1,0,0",
        "--d",
        "1,0,0",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    let manifest = &doc["manifest"];
    assert_eq!(manifest["command"], "chsh");
    assert_eq!(manifest["parameters"]["spin"], "half");
    assert_eq!(manifest["parameters"]["operator"], "cz");
    assert_eq!(manifest["parameters"]["momenta"], "eq13");
    assert_eq!(manifest["parameters"]["x"], 1.0);
    assert_eq!(manifest["version"], env!("CARGO_PKG_VERSION"));
    assert!(doc["result"]["value"].is_f64());
    assert_eq!(doc["result"]["bound"], 2.0);

    let text = stdout(&[
        "figure", "4", "--x-max", "2", "--steps", "5", "--format", "json",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["manifest"]["parameters"]["figure"], 4);
    // the realized measurement axes and pair axis are part of the record
    assert_eq!(doc["manifest"]["parameters"]["momenta"], "cm");
    assert!(doc["manifest"]["parameters"]["n"].is_array());
    assert!(doc["manifest"]["parameters"]["a"].is_array());
    assert!(doc["manifest"]["parameters"]["b"].is_array());
    assert_eq!(doc["results"].as_array().unwrap().len(), 5);
}

#[test]
fn figure_datasets_have_expected_rest_values() {
    let text = stdout(&["figure", "1", "--x-max", "2", "--steps", "3"]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "x,value_nw,value_cz");
    assert_eq!(lines.len(), 4);
    let first: Vec<f64> = lines[1].split(',').map(|c| c.parse().unwrap()).collect();
    assert_eq!(first[0], 0.0);
    assert!((first[1] - 0.5).abs() < 1e-9);
    assert!((first[2] - 0.5).abs() < 1e-9);

    let text = stdout(&["figure", "2", "--x-max", "1", "--steps", "2"]);
    let first: Vec<f64> = text
        .lines()
        .nth(1)
        .unwrap()
        .split(',')
        .map(|c| c.parse().unwrap())
        .collect();
    assert!((first[1] - 2.0).abs() < 1e-12);
    assert!((first[2] - 2.0).abs() < 1e-12);

    let text = stdout(&["figure", "5", "--x-max", "1", "--steps", "2"]);
    let first: Vec<f64> = text
        .lines()
        .nth(1)
        .unwrap()
        .split(',')
        .map(|c| c.parse().unwrap())
        .collect();
    assert!((first[1] - 0.9668025123886512).abs() < 1e-12);

    let out = run(&["figure", "6"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_reports_and_exits_zero() {
    let out = run(&["verify", "--samples", "150", "--seed", "42"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("max discrepancy"));
    assert!(text.trim_end().ends_with("PASS"));

    let text = stdout(&[
        "verify",
        "--samples",
        "50",
        "--seed",
        "1",
        "--format",
        "json",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["report"]["passed"], true);
    assert_eq!(doc["report"]["samples"], 50);
}

#[test]
fn optimize_fixed_directions_finds_chsh_peak() {
    let text = stdout(&[
        "optimize",
        "--inequality",
        "chsh",
        "--spin",
        "half",
        "--operator",
        "nw",
        "--momenta",
        "eq13",
        "--x-min",
        "0",
        "--x-max",
        "10",
        "--fix-directions",
        "--a",
        "0,0,1",
        "--b",
        "0,0,1",
        "--c",
        "0.8660254037844386,0,0.5",
        "--d",
        "0.8660254037844386,0,0.5",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    let value = doc["result"]["value"].as_f64().unwrap();
    let x_star = doc["result"]["x_star"].as_f64().unwrap();
    assert!((value - 7.0_f64.sqrt()).abs() < 1e-7);
    assert!((x_star - (5.0 + 7.0_f64.sqrt()) / 9.0).abs() < 1e-4);
    assert_eq!(doc["result"]["violated"], true);

    // partial initial directions are rejected
    let out = run(&[
        "optimize",
        "--inequality",
        "chsh",
        "--spin",
        "half",
        "--operator",
        "nw",
        "--x",
        "1",
        "--a",
        "0,0,1",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn out_flag_writes_the_same_bytes_as_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sweep.csv");
    let args_base = [
        "sweep",
        "--spin",
        "one",
        "--operator",
        "cz",
        "--momenta",
        "cm",
        "--a",
        "0,0,1",
        "--b",
        "0,1,0",
        "--x-min",
        "0",
        "--x-max",
        "2",
        "--steps",
        "9",
    ];
    let streamed = stdout(&args_base);
    let mut args = args_base.to_vec();
    let path_str = path.to_str().unwrap();
    args.extend_from_slice(&["--out", path_str]);
    let silent = stdout(&args);
    assert!(silent.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), streamed);
}
