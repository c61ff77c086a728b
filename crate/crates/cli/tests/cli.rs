use std::process::{Command, Output};

fn quiverlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quiverlab")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn documented_verify_examples_pass() {
    for args in [
        &["verify", "phi-bijection", "--type", "A3", "--all-orientations"][..],
        &["verify", "bedard", "--type", "D4"],
        &["verify", "klr-assoc", "--beta", "1,1", "--samples", "500"],
    ] {
        let o = quiverlab(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stdout(&o));
        assert!(stdout(&o).contains(": pass ("), "{}", stdout(&o));
    }
}

#[test]
fn usage_errors_exit_with_2() {
    for args in [
        &["verify", "nope"][..],
        &["quiver", "--type", "F4"],
        &["quiver", "--type", "A3", "--orientation", "1>2,2>1"],
        &["quiver", "--type", "A2", "--height", "0,0"],
        &["klr", "--beta", "1,1", "-e", "t1 * ?"],
        &["kp", "--type", "A3", "--beta", "1,1"],
        &["--dot", "klr", "--beta", "1", "-e", "x1"],
        &["frobnicate"],
    ] {
        let o = quiverlab(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn klr_parse_error_reports_position() {
    let o = quiverlab(&["klr", "--beta", "1,1", "-o", "1>2", "-e", "t1 * ?"]);
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("parse error at 5"), "{err}");
}

#[test]
fn tau_square_dump() {
    let o = quiverlab(&["klr", "--type", "A2", "-o", "1>2", "--beta", "1,1", "-e", "t1 * t1 * e(1,2)"]);
    assert_eq!(stdout(&o), "1 * x2 * e(1,2)\n-1 * x1 * e(1,2)\ndegree: 2\n");
    let o = quiverlab(&["--json", "klr", "--type", "A2", "-o", "1>2", "--beta", "1,1", "-e", "t1 t1 e(1,2)"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["degree"], serde_json::json!({"kind": "homogeneous", "value": 2}));
    assert_eq!(v["terms"].as_array().unwrap().len(), 2);
}

#[test]
fn phi_queries() {
    let o = quiverlab(&["phi", "-t", "A2", "-o", "1>2", "--root", "1,1"]);
    assert_eq!(stdout(&o), "(2, 0)\n");
    let o = quiverlab(&["phi", "-t", "A2", "-o", "1>2", "--vertex", "1,-1"]);
    assert_eq!(stdout(&o), "[0,1] k=0\n");
    let o = quiverlab(&["--json", "phi", "-t", "A2", "-o", "1>2"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v[0]["vertex"], serde_json::json!([1, 1]));
}

#[test]
fn quiver_outputs() {
    let o = quiverlab(&["--dot", "quiver", "-t", "A2", "-o", "1>2"]);
    let dot = stdout(&o);
    assert!(dot.starts_with("digraph GammaQ"));
    assert!(dot.contains("\"2_0\" -> \"1_1\""));
    let o = quiverlab(&["--json", "quiver", "-t", "D4"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["phi"].as_array().unwrap().len(), 12);
    assert_eq!(v["coxeter_number"], 6);
}

#[test]
fn kp_and_lorder_reports() {
    let o = quiverlab(&["--json", "kp", "-t", "A2", "-o", "1>2", "--beta", "1,1"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["partitions"].as_array().unwrap().len(), 2);
    assert_eq!(v["lp_plus_size"], 2);
    assert_eq!(v["order"]["preserves"], true);
    assert_eq!(v["hasse"], serde_json::json!([[1, 2]]));
    let o = quiverlab(&["lorder", "-t", "A2", "-o", "1>2", "--mu", "[[2,0,1]]", "--lambda", "[[1,1,1],[1,-1,1]]"]);
    assert_eq!(stdout(&o), "mu <= lambda, lambda - mu = a[1,0]\n");
    let o = quiverlab(&["lorder", "-t", "A2", "-o", "1>2", "--mu", "[[1,1,1]]", "--lambda", "[[1,-1,1]]"]);
    assert_eq!(stdout(&o), "mu is not <= lambda\n");
    let o = quiverlab(&["--dot", "kp", "-t", "A3", "--beta", "1,1,1"]);
    assert!(stdout(&o).starts_with("digraph KP"));
}

#[test]
fn reflect_report() {
    let o = quiverlab(&["reflect", "-t", "A2", "-o", "1>2", "--vertex", "2", "--beta", "1,1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("s_2(Q) = 2>1  height [1,2]\n"), "{out}");
    assert!(out.ends_with("PASS\n"));
    let o = quiverlab(&["reflect", "-t", "A2", "-o", "1>2", "--vertex", "1", "--beta", "1,1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn outputs_are_byte_stable() {
    for args in [
        &["--json", "verify", "klr-assoc", "--type", "A3", "--max-height", "2", "--samples", "50"][..],
        &["--json", "verify", "f-order", "--max-rank", "3", "--all-orientations"],
        &["--json", "kp", "-t", "D4", "--beta", "1,1,1,1"],
    ] {
        assert_eq!(quiverlab(args).stdout, quiverlab(args).stdout, "{args:?}");
    }
    let a = quiverlab(&["--seed", "3", "--json", "verify", "klr-assoc", "--beta", "2,1", "--samples", "20"]);
    assert_eq!(a.status.code(), Some(0));
}

#[test]
fn config_file_supplies_defaults() {
    let dir = std::env::temp_dir().join(format!("quiverlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let toml = dir.join("conf.toml");
    std::fs::write(&toml, "type = \"A3\"\norientation = \"1>2,3>2\"\n").unwrap();
    let path = toml.to_str().unwrap();
    let o = quiverlab(&["--config", path, "quiver"]);
    assert!(stdout(&o).starts_with("type A3  orientation 1>2,3>2\n"), "{}", stdout(&o));
    // a flag overrides the configured type, and the configured orientation is dropped
    let o = quiverlab(&["--config", path, "quiver", "--type", "A2"]);
    assert!(stdout(&o).starts_with("type A2  orientation 1>2\n"), "{}", stdout(&o));
    let json = dir.join("conf.json");
    std::fs::write(&json, r#"{"type": "A3", "orientation": "1>2,3>2"}"#).unwrap();
    let o2 = quiverlab(&["--config", json.to_str().unwrap(), "quiver"]);
    assert_eq!(o2.stdout, quiverlab(&["--config", path, "quiver"]).stdout);
    std::fs::write(&toml, "colour = 1\n").unwrap();
    assert_eq!(quiverlab(&["--config", path, "quiver"]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}
