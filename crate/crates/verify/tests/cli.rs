use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_iso3-verify"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn bialgebra_passes_with_defaults() {
    let o = run(&["verify", "bialgebra"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("check,residual,tol,status,ms"));
    let names: Vec<&str> = lines.map(|l| l.split(',').next().unwrap()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    assert!(names.contains(&"cybe"));
}

#[test]
fn identical_seeds_give_identical_bytes() {
    for suite in ["hopf", "moduli"] {
        let a = run(&["verify", suite, "--seed", "17"]);
        let b = run(&["verify", suite, "--seed", "17"]);
        assert_eq!(a.stdout, b.stdout);
        let c = run(&["verify", suite, "--seed", "18"]);
        assert_ne!(a.stdout, c.stdout);
    }
    let a = run(&["scan", "bch", "--seed", "3", "--format", "json"]);
    let b = run(&["scan", "bch", "--seed", "3", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn zero_tolerance_reports_failure() {
    let o = run(&["verify", "bialgebra", "--tol", "cocycle=0"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    let line = text.lines().find(|l| l.starts_with("cocycle,")).unwrap();
    let fields: Vec<&str> = line.split(',').collect();
    assert_eq!(fields[2], "0e0");
    assert_eq!(fields[3], "fail");
    assert!(fields[1].parse::<f64>().unwrap() > 0.0);
}

#[test]
fn configuration_errors_exit_with_two() {
    for args in [
        &["scan", "r-limit", "--halvings", "0"][..],
        &["scan", "bch", "--halvings", "1"],
        &["verify", "hopf", "--tol", "cybe=1e-3"],
        &["verify", "bialgebra", "--tol", "cybe=-1"],
        &["verify", "bialgebra", "--tol", "cybe"],
        &["verify", "representations", "--jmax", "1.25"],
        &["verify", "nonsense"],
        &["scan", "bch", "--tol", "bch=1"],
        &["scan", "bch", "--kappa-start", "0"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn scan_table_layout() {
    let o = run(&["scan", "r-limit", "--halvings", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "check,kappa,residual,ratio,status");
    assert_eq!(lines.len(), 1 + 4 + 1);
    let last: Vec<&str> = lines[5].split(',').collect();
    assert_eq!(last[0], "r-limit.order");
    let order: f64 = last[3].parse().unwrap();
    assert!((1.8..=2.2).contains(&order));
}

#[test]
fn json_mirrors_report_fields_and_out_writes_a_file() {
    let dir = std::env::temp_dir().join(format!("iso3-verify-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("hopf.json");
    let o = run(&["verify", "hopf", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let first = &v.as_array().unwrap()[0];
    for key in ["check", "residual", "tol", "status", "ms"] {
        assert!(first.get(key).is_some(), "{key}");
    }
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn timing_is_opt_in() {
    let text = stdout(&run(&["verify", "qybe"]));
    assert!(text.lines().skip(1).all(|l| l.ends_with(",0")));
}
