use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_koszul-hecke")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn verify_hecke_passes() {
    let o = run(&["verify", "hecke", "--type", "A2", "--weight-bound", "3", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("0 failed"));
}

#[test]
fn spec_negative_control_exits_with_failure() {
    let o = run(&["verify", "hecke", "--type", "A1", "--spec", "T->T+1"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("fail     hecke/A1/relation-vi"), "{out}");
    assert!(out.contains("witness: quadratic T[1]"), "{out}");
}

#[test]
fn convolution_example_passes() {
    let o = run(&["verify", "convolution", "--dim", "1", "--fdim", "0", "--trials", "50", "--seed", "1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn json_reports_are_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let paths: Vec<String> = (0..2).map(|i| dir.path().join(format!("r{i}.json")).display().to_string()).collect();
    for p in &paths {
        let o = run(&["verify", "koszul", "--dim", "2", "--trials", "4", "--seed", "3", "--window", "-8,8", "--json", p]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    }
    let a = std::fs::read_to_string(&paths[0]).unwrap();
    assert_eq!(a, std::fs::read_to_string(&paths[1]).unwrap());
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["suite"], "koszul");
    assert_eq!(v["params"]["window"], serde_json::json!([-8, 8]));
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));
}

#[test]
fn hecke_eval_prints_normal_forms() {
    let o = run(&["hecke", "eval", "KIM(T[1])", "--type", "A1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "(-v + v^-1) * theta[0] * T[] + theta[0] * T[1]");
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        vec!["hecke", "eval", "theta[1,", "--type", "A1"],
        vec!["hecke", "eval", "T[1]", "--type", "Z9"],
        vec!["verify", "nothing"],
        vec!["verify", "koszul", "--window", "3,1"],
        vec!["verify", "koszul", "--dim", "5"],
        vec!["verify"],
    ] {
        assert_eq!(run(&args).status.code(), Some(2), "{args:?}");
    }
    let o = run(&["hecke", "eval", "theta[1,", "--type", "A1"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("offset 8"));
}
