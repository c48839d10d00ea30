use std::fs;
use std::process::{Command, Output};

fn qec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qec")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn params_reports_saturation() {
    let o = qec(&["params", "--code", "catalog:mds4_2_q"]);
    assert!(o.status.success());
    assert!(
        stdout(&o).starts_with("[[2,2,≥3;4]] slack=0 (saturates)\n"),
        "{}",
        stdout(&o)
    );

    let o = qec(&["params", "--code", "catalog:hamming7_b", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["singleton"]["slack"], 2);
    assert_eq!(v["singleton"]["hypothesis_holds"], true);
    assert_eq!(v["display"], "[[4,4,≥3;6]]");
}

#[test]
fn codes_lists_catalog() {
    let o = qec(&["codes", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let names: Vec<&str> = v["codes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert_eq!(names, ["rep3_b", "hamming7_b", "mds4_2_q", "ext_rs5_2_q"]);
    assert_eq!(v["codes"][1]["mds"], false);
    assert!(stdout(&qec(&["codes"])).contains("[4,2,3]_4"));
}

#[test]
fn build_prints_blocks() {
    let o = qec(&["build", "--code", "catalog:mds4_2_q", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["variant"], "q4");
    assert_eq!(v["trace_blocks"]["h_q"].as_array().unwrap().len(), 4);
    assert_eq!(v["h_z_prime"].as_array().unwrap().len(), 4);

    let o = qec(&["build", "--code", "catalog:hamming7_b", "--variant", "dual", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["variant"], "dual-q2");
    assert!(v["trace_blocks"].is_null());
}

#[test]
fn verify_passes_on_catalog() {
    let o = qec(&["verify", "--code", "catalog:hamming7_b"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 7, "{text}");

    let o = qec(&[
        "verify",
        "--code",
        "catalog:mds4_2_q",
        "--variant",
        "dual",
        "--json",
        "--random-errors",
        "100",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["variant"], "dual-q4");
}

#[test]
fn verify_failure_exits_one_with_counterexample() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.code");
    // a [6,2] binary code whose true distance is 2, declared as 5
    fs::write(
        &path,
        "2 6 2\n1 0 0 0 1 0\n0 1 0 0 0 1\n0 0 1 0 1 1\n0 0 0 1 1 1\nd 5\n",
    )
    .unwrap();
    let o = qec(&["verify", "--code", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    assert!(text.contains("FAIL syndrome-distinctness"), "{text}");
    assert!(text.contains("counterexample: syndrome"), "{text}");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(qec(&["--no-such-flag", "codes"]).status.code(), Some(2));
    assert_eq!(qec(&["params"]).status.code(), Some(2));
    assert_eq!(qec(&["params", "--code", "catalog:nope"]).status.code(), Some(2));
    assert_eq!(
        qec(&["build", "--code", "catalog:hamming7_b", "--variant", "q4"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(qec(&["simulate", "--code", "catalog:mds4_2_q"]).status.code(), Some(2));
    assert_eq!(
        qec(&["simulate", "--code", "catalog:mds4_2_q", "--iid", "0.9"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(qec(&["params", "--code", "/does/not/exist"]).status.code(), Some(2));
}

#[test]
fn code_file_is_accepted() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("h.code");
    fs::write(&path, "# quaternary [4,2]\n4 4 2\n1 0 1 1\n0 1 1 w\n").unwrap();
    let o = qec(&["params", "--code", path.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).starts_with("[[2,2,≥3;4]]"));
}

#[test]
fn table_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.bin");
    let p = path.to_str().unwrap();
    let o = qec(&["table", "--code", "catalog:hamming7_b", "--out", p, "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["entries"], 19);

    let with_file = qec(&[
        "simulate",
        "--code",
        "catalog:hamming7_b",
        "--iid",
        "0.01",
        "--trials",
        "5000",
        "--table",
        p,
        "--json",
    ]);
    let without = qec(&[
        "simulate",
        "--code",
        "catalog:hamming7_b",
        "--iid",
        "0.01",
        "--trials",
        "5000",
        "--json",
    ]);
    assert!(
        with_file.status.success(),
        "{}",
        String::from_utf8_lossy(&with_file.stderr)
    );
    assert_eq!(with_file.stdout, without.stdout);

    // a table for another code is rejected
    let o = qec(&[
        "simulate",
        "--code",
        "catalog:mds4_2_q",
        "--adversarial",
        "1",
        "--table",
        p,
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn adversarial_simulation_within_radius_never_fails() {
    let o = qec(&[
        "simulate",
        "--code",
        "catalog:mds4_2_q",
        "--variant",
        "q4",
        "--adversarial",
        "1",
        "--trials",
        "100000",
        "--seed",
        "7",
    ]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("failures=0"), "{}", stdout(&o));
}
