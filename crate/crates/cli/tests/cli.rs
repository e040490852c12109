use std::f64::consts::PI;
use std::process::{Command, Output};

use serde_json::Value;

fn bsv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bsv")).args(args).env_remove("BSV_PRECISION").output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

/// Header plus rows, every cell as text.
fn csv_rows(text: &str) -> (Vec<String>, Vec<Vec<String>>) {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let header = r.headers().unwrap().iter().map(str::to_owned).collect();
    let rows = r.records().map(|rec| rec.unwrap().iter().map(str::to_owned).collect()).collect();
    (header, rows)
}

fn column(text: &str, name: &str) -> Vec<f64> {
    let (header, rows) = csv_rows(text);
    let k = header.iter().position(|h| h == name).expect("column present");
    rows.iter().map(|r| r[k].parse().unwrap()).collect()
}

#[test]
fn kappa_example() {
    let out = bsv(&["kappa", "--alpha", "i", "--beta", "-1", "--delta", "1"]);
    assert!(out.status.success());
    let kappa = column(&stdout(&out), "kappa")[0];
    let u = 2.0 * PI;
    let closed = 2.0 / (u.sinh() / u - 1.0);
    assert!((kappa - closed).abs() <= 1e-12 * closed);
    assert!((kappa - 4.8062e-2).abs() <= 1e-6);
}

#[test]
fn threshold_example() {
    let out = bsv(&["threshold"]);
    assert!(out.status.success());
    let u = column(&stdout(&out), "u_star")[0];
    assert!((u - 1.0295).abs() <= 5e-4);
    let g = 4.0 * u.sinh() - (2.0 * u).sinh() - u;
    assert!(g.abs() <= 1e-12);
}

#[test]
fn selberg_example() {
    let out = bsv(&["selberg", "--interval", "-1,1", "--delta", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let (_, rows) = csv_rows(&text);
    let excess = rows.iter().find(|r| r[0] == "majorant_excess").unwrap();
    let value: f64 = excess[1].parse().unwrap();
    let bound: f64 = excess[3].parse().unwrap();
    assert!((value - 0.5).abs() <= bound.max(1e-9));
    let gap = rows.iter().find(|r| r[0] == "majorant_min_gap").unwrap();
    assert!(gap[1].parse::<f64>().unwrap() >= -1e-10);
}

#[test]
fn output_is_deterministic() {
    let args = ["rho-scan", "--interval", "-1,1", "--alpha", "i", "--deltas", "0.2,0.4,0.8", "--mode", "additive"];
    let first = bsv(&args);
    let second = bsv(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    let deltas = column(&stdout(&first), "delta");
    assert!(deltas.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn json_round_trips_and_matches_csv() {
    let args =
        ["eval", "--object", "C_alpha", "--interval", "-1,1", "--delta", "1", "--alpha", "0.5+i", "--grid", "-3:3:0.5"];
    let csv_out = bsv(&args);
    let mut json_args = vec!["--format", "json"];
    json_args.extend_from_slice(&args);
    let json_out = bsv(&json_args);
    assert!(csv_out.status.success() && json_out.status.success());
    let doc: Value = serde_json::from_slice(&json_out.stdout).unwrap();
    let reparsed: Value = serde_json::from_str(&serde_json::to_string(&doc).unwrap()).unwrap();
    assert_eq!(doc, reparsed);
    let rows = doc["rows"].as_array().unwrap();
    let values = column(&stdout(&csv_out), "value");
    assert_eq!(rows.len(), values.len());
    for (row, v) in rows.iter().zip(&values) {
        assert_eq!(row["value"].as_f64().unwrap(), *v);
        let keys: Vec<&str> = row.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys, ["t", "value", "indicator"]);
    }
    assert_eq!(doc["meta"]["command"], "eval");
    assert_eq!(doc["meta"]["parameters"]["object"], "C_alpha");
}

#[test]
fn majorant_dominates_indicator_in_output() {
    let out = bsv(&[
        "eval",
        "--object",
        "G_alpha",
        "--interval",
        "-1,1",
        "--delta",
        "2",
        "--alpha",
        "i",
        "--grid",
        "-5:5:0.01",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    for (v, chi) in column(&text, "value").iter().zip(column(&text, "indicator")) {
        assert!(*v >= chi - 1e-10);
    }
}

#[test]
fn precision_flag_and_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_bsv")).args(["threshold"]).env("BSV_PRECISION", "3").output().unwrap();
    assert!(stdout(&out).lines().nth(1).unwrap().starts_with("1.030e0,"));
    let out = Command::new(env!("CARGO_BIN_EXE_bsv"))
        .args(["--precision", "5", "threshold"])
        .env("BSV_PRECISION", "3")
        .output()
        .unwrap();
    assert!(stdout(&out).lines().nth(1).unwrap().starts_with("1.02957e0,"));
    let bad =
        Command::new(env!("CARGO_BIN_EXE_bsv")).args(["threshold"]).env("BSV_PRECISION", "many").output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("trig.csv");
    let out = bsv(&["trig", "--degree", "1", "--alpha", "2", "--beta", "1", "-o", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let means = column(&text, "mean");
    assert_eq!(means.len(), 2);
    assert!((means[0] - 4.0 / 9.0).abs() <= 1e-12);
}

#[test]
fn exit_codes() {
    assert_eq!(bsv(&["kappa", "--alpha", "1+2j", "--beta", "1", "--delta", "1"]).status.code(), Some(2));
    assert_eq!(bsv(&["selberg", "--interval", "1,-1", "--delta", "1"]).status.code(), Some(2));
    assert_eq!(bsv(&["eval", "--object", "D", "--grid", "0:1:1", "--delta", "1"]).status.code(), Some(2));
    assert_eq!(bsv(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(bsv(&["kappa", "--alpha", "-i", "--beta", "1", "--delta", "1"]).status.code(), Some(3));
    assert_eq!(
        bsv(&[
            "eval",
            "--object",
            "minorant",
            "--mode",
            "multiplicative",
            "--interval",
            "-1,1",
            "--delta",
            "1",
            "--alpha",
            "0.1i",
            "--grid",
            "0:1:1"
        ])
        .status
        .code(),
        Some(3)
    );
    assert_eq!(bsv(&["debranges", "--structure", "linear", "--alpha", "i", "--beta", "1"]).status.code(), Some(3));
    assert_eq!(bsv(&["--help"]).status.code(), Some(0));
}

#[test]
fn error_json_on_request() {
    let out = bsv(&["--error-json", "trig", "--degree", "2", "--alpha", "1", "--beta", "1"]);
    assert_eq!(out.status.code(), Some(3));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"]["kind"], "DependentKernels");
    assert_eq!(err["error"]["exit_code"], 3);
    let out = bsv(&["--error-json", "kappa", "--alpha", "oops", "--beta", "1", "--delta", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"]["kind"], "ParseError");
}

#[test]
fn debranges_reports_dependence_and_bound() {
    let out = bsv(&["--format", "json", "debranges", "--structure", "exponential:0.5", "--alpha", "i", "--beta", "-1"]);
    assert!(out.status.success());
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    let row = &doc["rows"][0];
    assert_eq!(row["independent"], true);
    assert_eq!(row["hermite_biehler"], true);
    let kappa: f64 = column(&stdout(&bsv(&["kappa", "--alpha", "i", "--beta", "-1", "--delta", "1"])), "kappa")[0];
    assert!((row["bound"].as_f64().unwrap() - kappa).abs() <= 1e-12);
}

#[test]
fn spectrum_probe_residuals_are_small() {
    let out = bsv(&["spectrum", "--alpha", "i", "--beta", "-1", "--delta", "1", "--grid", "-1.5:1.5:0.25"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let xi = column(&text, "xi");
    let re = column(&text, "transform_re");
    let kappa = 2.0 / ((2.0 * PI).sinh() / (2.0 * PI) - 1.0);
    for ((x, r), res) in xi.iter().zip(&re).zip(column(&text, "residual")) {
        assert!(res <= 1e-3 * kappa);
        if x.abs() >= 1.0 {
            assert_eq!(*r, 0.0);
        }
    }
}

#[test]
fn verify_suites_pass() {
    for suite in ["kernel", "trig", "debranges"] {
        let out = bsv(&["verify", "--suite", suite]);
        assert_eq!(out.status.code(), Some(0), "{suite}");
        let (_, rows) = csv_rows(&stdout(&out));
        assert!(!rows.is_empty());
        assert!(rows.iter().all(|r| r[4] == "true"));
    }
}
