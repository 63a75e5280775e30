use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn gbd_kit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gbd-kit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn csv(dir: &Path, name: &str, args: &[&str]) -> String {
    let path = dir.join(name);
    let mut full = args.to_vec();
    full.extend(["--out", path.to_str().unwrap()]);
    let out = gbd_kit(&full);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    fs::read_to_string(path).unwrap()
}

#[test]
fn dist_rows_from_the_catalog() {
    let dir = tempfile::tempdir().unwrap();
    let f_log = csv(dir.path(), "f.csv", &["dist", "--dist", "f_log", "--grid", "0:3:61"]);
    let mut lines = f_log.lines();
    assert_eq!(lines.next(), Some("# gbd-kit v1"));
    assert_eq!(lines.next(), Some("x,y,value"));
    assert_eq!(f_log.lines().count(), 2 + 61 * 61);
    assert!(f_log.lines().any(|l| l == "3,3,0"));

    let sigma = csv(dir.path(), "s.csv", &["dist", "--dist", "sigma_log", "--grid", "0:3:61"]);
    assert!(sigma.lines().any(|l| l == "1,2,inf"));

    let kl = csv(dir.path(), "k.csv", &["dist", "--dist", "kl", "--grid", "0:3:61"]);
    assert!(kl.lines().any(|l| l == "0,1,1"));
}

#[test]
fn dist_accepts_a_separate_y_grid() {
    let dir = tempfile::tempdir().unwrap();
    let text = csv(
        dir.path(),
        "d.csv",
        &["dist", "--dist", "f_id", "--grid", "0:2:3", "--grid-y", "0:1:2"],
    );
    let rows: Vec<&str> = text.lines().skip(2).collect();
    assert_eq!(rows, ["0,0,0", "0,1,0.25", "1,0,0.25", "1,1,0", "2,0,1", "2,1,0.25"]);
}

#[test]
fn env_rows_from_the_catalog() {
    let dir = tempfile::tempdir().unwrap();
    let text = csv(
        dir.path(),
        "e.csv",
        &["env", "--side", "left", "--dist", "f_log", "--gamma", "1", "--grid", "0:1:3"],
    );
    assert_eq!(text.lines().nth(1), Some("gamma,x,env,prox_lo,prox_hi"));
    assert!(text.lines().any(|l| l == "1,0.5,0,0.5,0.5"), "{text}");

    let text = csv(
        dir.path(),
        "s.csv",
        &["env", "--side", "left", "--dist", "sigma_log", "--gamma", "5", "--grid", "0.9:1.9:2"],
    );
    let row: Vec<&str> = text.lines().nth(2).unwrap().split(',').collect();
    assert_eq!(row[0], "5");
    assert!((row[2].parse::<f64>().unwrap() - 0.4).abs() < 1e-15);

    let text = csv(
        dir.path(),
        "k.csv",
        &["env", "--side", "right", "--dist", "kl", "--gamma", "0.5", "--grid", "0:1:2"],
    );
    let row: Vec<&str> = text.lines().nth(3).unwrap().split(',').collect();
    assert_eq!(row[1], "1");
    assert!((row[2].parse::<f64>().unwrap() - 0.31093).abs() < 1e-5);
}

#[test]
fn env_emits_one_block_per_gamma_in_order() {
    let dir = tempfile::tempdir().unwrap();
    let text = csv(
        dir.path(),
        "e.csv",
        &[
            "env", "--side", "right", "--dist", "kl", "--gamma", "2", "--gamma", "0.5", "--grid", "0:3:4",
        ],
    );
    let gammas: Vec<&str> = text.lines().skip(2).map(|l| l.split(',').next().unwrap()).collect();
    assert_eq!(gammas, ["2", "2", "2", "2", "0.5", "0.5", "0.5", "0.5"]);
}

#[test]
fn writes_to_stdout_without_out() {
    let out = gbd_kit(&["dist", "--dist", "kl", "--grid", "0:1:2"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("# gbd-kit v1\nx,y,value\n"));
}

#[test]
fn configuration_errors_exit_with_two() {
    for args in [
        vec!["dist", "--dist", "hellinger", "--grid", "0:1:3"],
        vec!["dist", "--dist", "kl", "--grid", "1:0:3"],
        vec!["dist", "--dist", "kl", "--grid", "0:1:1"],
        vec!["env", "--side", "up", "--dist", "kl", "--gamma", "1", "--grid", "0:1:3"],
        vec!["env", "--side", "left", "--dist", "kl", "--gamma", "-1", "--grid", "0:1:3"],
        vec!["env", "--side", "left", "--dist", "kl", "--grid", "0:1:3"],
        vec!["verify", "--suite", "everything"],
        vec!["frobnicate"],
    ] {
        let out = gbd_kit(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn unwritable_output_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("missing").join("x.csv");
    let out = gbd_kit(&["dist", "--dist", "kl", "--grid", "0:1:3", "--out", target.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cannot write output"));
}

#[test]
fn verify_writes_a_json_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let out = gbd_kit(&["verify", "--suite", "asymptotics", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(report["suite"], "asymptotics");
    assert_eq!(report["pass"], true);
    let cases = report["cases"].as_array().unwrap();
    assert!(cases.iter().any(|c| c["id"] == "gamma_to_infinity/left_sigma_log/no_convergence"));
    for c in cases {
        assert!(c["id"].is_string() && c["pass"].is_boolean() && c["max_dev"].is_number());
    }
}

#[test]
fn grids_may_start_below_zero() {
    let out = gbd_kit(&["dist", "--dist", "f_id", "--grid", "-1:1:3"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l == "-1,1,1"));
}
