use std::process::{Command, Output};

use serde_json::{json, Value};

fn hlspringer(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hlspringer"))
        .args(args)
        .env_remove("HLSPRINGER_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn frob_monomial() {
    let out = hlspringer(&["frob", "--n", "2", "--lambda", "1", "--s", "2", "--basis", "m"]);
    assert!(out.status.success());
    assert_eq!(
        stdout_json(&out),
        json!({"n": 2, "basis": "m", "terms": [
            {"partition": [2], "coeffs": [1, 1]},
            {"partition": [1, 1], "coeffs": [1, 2]},
        ]})
    );
}

#[test]
fn frob_schur_of_empty_lambda() {
    let out = hlspringer(&["frob", "--n", "2", "--lambda", "", "--s", "2", "--basis", "s"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["basis"], "s");
    assert_eq!(v["n"], 2);
}

#[test]
fn count_ymu() {
    let out = hlspringer(&["count", "--variety", "ymu", "--n", "2", "--lambda", "1", "--s", "2", "--mu", "1,1", "--p", "2"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["count"], 5);
    assert_eq!(v["variety"], "ymu");
    assert_eq!(v["mu"], json!([1, 1]));
    assert_eq!(v["p"], 2);
    assert_eq!(v["instance"]["K"], 3);
}

#[test]
fn count_steinberg_and_z() {
    let out = hlspringer(&["count", "--variety", "steinberg", "--lambda", "1,1,1", "--mu", "1,1,1", "--p", "2"]);
    assert_eq!(stdout_json(&out)["count"], 21);
    let z = |v: &str| {
        let out = hlspringer(&["count", "--variety", v, "--n", "2", "--lambda", "1", "--s", "2", "--mu", "1,1", "--alpha", "1,1"]);
        assert!(out.status.success());
        stdout_json(&out)["count"].as_u64().unwrap()
    };
    assert!(z("zhat") >= z("z"));
}

#[test]
fn verify_hl_passes() {
    let out = hlspringer(&["verify", "hl", "--max-n", "5", "--max-s", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["passed"], true);
    assert_eq!(v["identity"], "hl");
}

#[test]
fn verify_all_csv() {
    let out = hlspringer(&["verify", "all", "--max-n", "3", "--max-s", "2", "--max-k", "4", "--p", "2", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "identity,checked,passed,counterexample");
    assert_eq!(lines.len(), 12);
    assert!(lines[1..].iter().all(|l| l.contains(",true,")));
}

#[test]
fn hilb_csv() {
    let out = hlspringer(&["hilb", "--n", "2", "--lambda", "1", "--s", "2", "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "q_degree,coeff\n0,1\n1,2\n");
}

#[test]
fn hl_expand_sum_matches_frob() {
    let args = ["--n", "3", "--lambda", "1", "--s", "2"];
    let expand = stdout_json(&hlspringer(&[&["hl-expand"][..], &args].concat()));
    let frob = stdout_json(&hlspringer(&[&["frob"][..], &args].concat()));
    assert_eq!(expand["sum"], frob);
    assert!(expand["terms"].as_array().unwrap().iter().all(|t| t.get("qbinom_product").is_some()));
}

#[test]
fn output_is_deterministic() {
    let args = ["frob", "--n", "4", "--lambda", "2,1", "--s", "3", "--basis", "s"];
    assert_eq!(hlspringer(&args).stdout, hlspringer(&args).stdout);
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("hlspringer-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("frob.json");
    let out = hlspringer(&["frob", "--n", "2", "--lambda", "1", "--s", "2", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["n"], 2);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn invalid_input_exits_2() {
    let out = hlspringer(&["frob", "--n", "2", "--lambda", "3", "--s", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "InvalidInstance");

    let out = hlspringer(&["count", "--variety", "ymu", "--n", "2", "--lambda", "1", "--s", "2", "--mu", "1,1", "--p", "4"]);
    assert_eq!(out.status.code(), Some(2));

    let out = hlspringer(&["frob", "--n", "two"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(serde_json::from_slice::<Value>(&out.stderr).is_ok());
}

#[test]
fn budget_exhaustion_exits_3() {
    let out = hlspringer(&["frob", "--n", "3", "--lambda", "1", "--s", "3", "--budget", "3"]);
    assert_eq!(out.status.code(), Some(3));
    let env = Command::new(env!("CARGO_BIN_EXE_hlspringer"))
        .args(["frob", "--n", "3", "--lambda", "1", "--s", "3"])
        .env("HLSPRINGER_BUDGET", "3")
        .output()
        .unwrap();
    assert_eq!(env.status.code(), Some(3));
    let err: Value = serde_json::from_slice(&env.stderr).unwrap();
    assert_eq!(err["error"], "ResourceLimit");
}
