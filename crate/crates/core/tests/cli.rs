use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_monogenic")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_coeffs_passes() {
    let o = run(&["verify", "coeffs"]);
    assert_eq!(o.status.code(), Some(0));
    for line in stdout(&o).lines() {
        let v: Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["passed"], true, "{line}");
        for key in ["identity_id", "params", "grid_spec", "max_abs_error", "threshold", "runtime_ms"] {
            assert!(v.get(key).is_some(), "{key} missing");
        }
    }
}

#[test]
fn verify_thm1_single_instance() {
    let o = run(&["verify", "thm1", "--m", "3", "--k", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let reports: Vec<Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert!(reports.iter().all(|r| r["max_abs_error"].as_f64().unwrap() < 1e-9));
    assert!(reports.iter().any(|r| r["identity_id"] == "thm1-reference"));
}

#[test]
fn usage_and_precondition_errors_exit_2() {
    let o = run(&["verify", "thm1", "--m", "4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("m must be odd"));
    assert_eq!(run(&["verify", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "gegenbauer-closed", "--alpha", "1.5", "--at", "0,1.2"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "ft", "--h", "exp(z^", "--at", "0,1"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "hermite-closed", "--grid", "x0=0:1:2"]).status.code(), Some(2));
    assert_eq!(run(&["--format", "xml"]).status.code(), Some(2));
}

#[test]
fn numeric_failure_exits_1() {
    // a tolerance nobody can meet
    let o = run(&["verify", "corollary3", "--m", "3", "--k", "1", "--tol", "1e-30"]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["corollaries", "4", "--at", "0.3,0.8", "--alpha", "0.5"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn eval_csv_shape() {
    let o = run(&["eval", "hermite-closed", "--m", "3", "--k", "0", "--grid", "x0=0:1:5,r=0.2:2:5"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 26);
    assert_eq!(lines[0].split(',').count(), 4 + 8);
    // 17 significant digits
    let cell = lines[1].split(',').nth(2).unwrap();
    let mantissa = cell.split('e').next().unwrap().trim_start_matches('-');
    assert_eq!(mantissa.replace('.', "").len(), 17, "{cell}");
}

#[test]
fn csv_and_json_agree() {
    let args = ["eval", "hermite-series", "--m", "5", "--k", "1", "--grid", "x0=-1:1:3,r=0.5:1.5:3"];
    let csv = stdout(&run(&args));
    let json: Value = serde_json::from_str(&stdout(&run(&[&args[..], &["--format", "json"]].concat()))).unwrap();
    let rows = json["rows"].as_array().unwrap();
    for (line, row) in csv.lines().skip(1).zip(rows) {
        for (cell, v) in line.split(',').zip(row.as_array().unwrap()) {
            assert_eq!(cell.parse::<f64>().unwrap(), v.as_f64().unwrap());
        }
    }
    assert_eq!(csv.lines().next().unwrap().split(',').collect::<Vec<_>>(), json["columns"].as_array().unwrap().iter().map(|c| c.as_str().unwrap()).collect::<Vec<_>>());
}

#[test]
fn eval_examples() {
    let o = run(&["eval", "gegenbauer-closed", "--m", "3", "--k", "0", "--alpha", "1.5", "--at", "0,0.6", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!((v["rows"][0][2].as_f64().unwrap() - 0.512).abs() < 1e-14);
    assert!(v["rows"][0][3].as_f64().unwrap().abs() < 1e-14);

    let o = run(&["eval", "ft", "--h", "exp(z^2)", "--m", "3", "--k", "0", "--at", "0,1", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let a = v["rows"][0][2].as_f64().unwrap();
    assert!((a + 4.0 * (-1.0f64).exp()).abs() < 1e-14, "{a}");
    assert!(v["scale"].as_str().unwrap().contains("(2k+m-1)!!"));

    // a leading minus is a value, not a flag
    let o = run(&["eval", "ft", "--h", "-z^2", "--at", "0.3,0.7", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!((v["rows"][0][2].as_f64().unwrap() - 4.0).abs() < 1e-12);
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("monogenic-cli-{}.csv", std::process::id()));
    let o = run(&["eval", "gegenbauer-series", "--alpha", "0.5", "--at", "0.1,0.3", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 2);
    std::fs::remove_file(path).unwrap();
}

#[test]
fn corollaries_tables() {
    let o = run(&["corollaries", "3", "--m", "3", "--k", "1", "--at", "0.4,0.9"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("x0,r,lhs_i,rhs_i,error_i"));
    let o = run(&["corollaries", "4", "--m", "3", "--k", "0", "--alpha", "1.5", "--at", "0.2,0.5", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["constant"], 10.0);
    assert!(v["max_error"].as_f64().unwrap() < 1e-8);
}

#[test]
fn bench_is_informational() {
    let o = run(&["bench", "hermite", "--trunc", "5", "--grid", "x0=-1:1:20,r=0.2:2:20"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let row: Vec<f64> = text.lines().nth(1).unwrap().split(',').map(|c| c.parse().unwrap()).collect();
    assert_eq!(row[0], 400.0);
    assert!(row[5] > 1e-6, "truncation at 5 terms should show");

    let o = run(&["bench", "gegenbauer", "--grid", "x0=0:1:0,r=0.2:0.5:4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 1);
}
