use std::io::Write;
use std::process::{Command, Output, Stdio};

fn regdeg(args: &[&str]) -> Output {
    regdeg_with_input(args, "")
}

fn regdeg_with_input(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_regdeg"))
        .args(args)
        .env_remove("REGDEG_CACHE_DIR")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_str(stdout(o).lines().next().unwrap()).unwrap()
}

#[test]
fn ribbon_record() {
    let g6 = stdout(&regdeg(&["construct", "ribbon"]));
    let out = regdeg(&["invariants", "--graph6", g6.trim()]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!((v["reg"].as_u64(), v["deg_h"].as_u64()), (Some(2), Some(1)));
}

#[test]
fn d3_record_from_stdin() {
    let g6 = stdout(&regdeg(&["construct", "dr", "3"]));
    let v = json(&regdeg_with_input(&["invariants"], &g6));
    assert_eq!(v["reg"], 3);
    assert_eq!(v["deg_h"], 3);
    assert_eq!(v["dim"], 3);
}

#[test]
fn edge_list_input() {
    let out = regdeg_with_input(
        &["invariants", "--format", "edgelist"],
        "# pentagon\n5\n0 1\n1 2\n2 3\n3 4\n4 0\n",
    );
    assert!(out.status.success(), "{out:?}");
    assert_eq!(json(&out)["im"], 1);
}

#[test]
fn malformed_input_exits_3() {
    let out = regdeg_with_input(&["invariants"], "A_\n!!\n");
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(regdeg(&["verify", "thm9.9"]).status.code(), Some(2));
    assert_eq!(regdeg(&["count"]).status.code(), Some(2));
    assert_eq!(regdeg(&["census", "--n", "9"]).status.code(), Some(2));
    assert_eq!(
        regdeg(&["construct", "realize", "3", "1"]).status.code(),
        Some(2)
    );
}

#[test]
fn verify_suites_pass() {
    for args in [
        &["verify", "thm5.1", "--n", "5..8"][..],
        &["verify", "thm5.4", "--n", "5..500"],
        &["verify", "lemma2.2", "--samples", "200", "--n-max", "9"],
        &["verify", "thm3.6", "--n", "3..7"],
    ] {
        let out = regdeg(args);
        assert!(out.status.success(), "{args:?}: {out:?}");
        assert_eq!(json(&out)["passed"], true);
    }
}

#[test]
fn realize_cw_witness() {
    let g6 = stdout(&regdeg(&["construct", "realize-cw", "2", "6", "8"]));
    let v = json(&regdeg(&["invariants", "--graph6", g6.trim()]));
    assert_eq!(
        (v["n"].as_u64(), v["reg"].as_u64(), v["deg_h"].as_u64()),
        (Some(8), Some(2), Some(6))
    );
    let out = regdeg(&["construct", "realize-cw", "2", "2", "8"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn construct_cw_spec_as_edge_list() {
    let out = regdeg(&[
        "construct",
        "cw",
        r#"{"core_edges": [[0, 0]], "s": [1], "t": [1]}"#,
        "--format",
        "edgelist",
    ]);
    assert!(out.status.success(), "{out:?}");
    // vertex count, then one line per edge
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("5"));
    assert_eq!(lines.count(), 5);
}

#[test]
fn census_then_plot() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    assert_eq!(
        regdeg(&["plot-data", "--n", "3", "--dir", d]).status.code(),
        Some(2)
    );
    let out = regdeg(&["census", "--n", "3", "--out-dir", d]);
    assert!(out.status.success());
    assert_eq!(json(&out)["total_graphs"], 2);
    let plot = regdeg(&["plot-data", "--n", "3", "--dir", d]);
    assert_eq!(stdout(&plot), "r,d,cw\n1,1,0\n1,2,0\n");
}

#[test]
fn census_files_are_byte_stable() {
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    let run = |dir: &std::path::Path, threads: &str| {
        let out = regdeg(&[
            "--threads",
            threads,
            "census",
            "--n",
            "7",
            "--out-dir",
            dir.to_str().unwrap(),
        ]);
        assert!(out.status.success());
        std::fs::read(dir.join("rd_census_n7.csv")).unwrap()
    };
    assert_eq!(run(a.path(), "1"), run(b.path(), "3"));
}

#[test]
fn census_from_piped_graph6() {
    let graphs = stdout(&regdeg(&["enumerate", "--n", "5"]));
    assert_eq!(graphs.lines().count(), 21);
    let dir = tempfile::tempdir().unwrap();
    let out = regdeg_with_input(
        &[
            "census",
            "--n",
            "5",
            "--input",
            "-",
            "--out-dir",
            dir.path().to_str().unwrap(),
        ],
        &graphs,
    );
    assert!(out.status.success(), "{out:?}");
    assert_eq!(json(&out)["points"], 7);
}

#[test]
fn count_agrees_with_region() {
    let v = json(&regdeg(&["count", "--n", "11"]));
    assert_eq!(v[0]["count"], 11);
    let probe = json(&regdeg(&["count", "--n", "100", "--asymptotics"]));
    let ratio = probe[0]["ratio"].as_f64().unwrap();
    assert!((0.075..=0.092).contains(&ratio));
}
