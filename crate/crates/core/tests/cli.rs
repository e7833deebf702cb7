use std::process::{Command, Output};

fn mobicov(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mobicov")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn value_column(csv: &str) -> Vec<f64> {
    csv.lines()
        .filter(|l| !l.starts_with('#'))
        .skip(1)
        .map(|l| l.split(',').nth(3).unwrap().parse().unwrap())
        .collect()
}

#[test]
fn coverage_matches_closed_form() {
    let o = mobicov(&["coverage", "--kind", "typical,max-signal", "--fading", "--tau-db", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with(&format!("# mobicov {}", env!("CARGO_PKG_VERSION"))));
    assert!(text.contains("# seed: 7"));
    assert!(text.contains("# config: {"));
    let v = value_column(&text);
    assert!((v[0] - 0.56010).abs() < 5e-6, "{v:?}");
    assert!((v[1] - 0.74840).abs() < 5e-6, "{v:?}");
}

#[test]
fn db_range_is_inclusive() {
    let o = mobicov(&["coverage", "--kind", "typical", "--fading", "--tau-db", "-10:10:0.5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(value_column(&stdout(&o)).len(), 41);
}

#[test]
fn runs_are_deterministic() {
    let args = ["simulate", "--t-obs", "50", "--seed", "3", "--table", "epochs", "--kind", "handover"];
    let (a, b) = (mobicov(&args), mobicov(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let c = mobicov(&["simulate", "--t-obs", "50", "--seed", "4", "--table", "epochs", "--kind", "handover"]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn json_output_round_trips() {
    let o = mobicov(&["rate", "--kind", "typical", "--metric", "stir", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let rate = doc["rows"][0]["rate"].as_f64().unwrap();
    let exact = 2f64.ln() + std::f64::consts::FRAC_PI_2;
    assert!((rate - exact).abs() < 1e-8, "{rate}");
    assert_eq!(doc["config"]["metrics"][0], "stir");
}

#[test]
fn config_file_and_overrides() {
    let dir = std::env::temp_dir().join(format!("mobicov-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("run.json");
    std::fs::write(&cfg, r#"{"params": {"alpha": 3.0}, "kinds": ["typical"], "fading": true, "tau_db": "0"}"#).unwrap();
    let out = dir.join("out.csv");
    let o = mobicov(&["coverage", "--config", cfg.to_str().unwrap(), "--alpha", "4", "-o", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&out).unwrap();
    assert!((value_column(&text)[0] - 0.56010).abs() < 5e-6);

    std::fs::write(&cfg, r#"{"params": {"alpah": 3.0}}"#).unwrap();
    let o = mobicov(&["coverage", "--config", cfg.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("alpah"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(mobicov(&["coverage", "--tau-db", "5:1:1"]).status.code(), Some(2));
    assert_eq!(mobicov(&["coverage", "--lambda", "-1"]).status.code(), Some(2));
    assert_eq!(mobicov(&["coverage", "--kind", "nope"]).status.code(), Some(2));
    assert_eq!(mobicov(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(mobicov(&[]).status.code(), Some(2));
    assert_eq!(mobicov(&["--help"]).status.code(), Some(0));
}

#[test]
fn validate_reports_and_exits() {
    let o = mobicov(&["validate", "--quick", "--criteria", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("PASS [ 6]"));
    // criterion 11 has no sign change to find
    let o = mobicov(&["validate", "--quick", "--criteria", "11"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("FAIL [11]"));
}

#[test]
fn other_commands_run() {
    for args in [
        vec!["palm", "--samples", "200", "--table", "ecdf"],
        vec!["timeseries", "--t-obs", "20", "--points", "5"],
        vec!["simulate", "--t-obs", "50", "--table", "intensities"],
        vec!["compare", "--tau-db", "0", "--alpha", "3", "--mc-samples", "5000"],
    ] {
        let o = mobicov(&args);
        assert!(matches!(o.status.code(), Some(0) | Some(1)), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        assert!(stdout(&o).lines().count() > 5, "{args:?}");
    }
}
