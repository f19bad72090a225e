use std::process::{Command, Output};

fn qtrunc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qtrunc")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn theorem12_counts_at_fifteen() {
    let o = qtrunc(&["verify", "theorem12", "--n", "15", "--k", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("|A_1^(2)(15)| = 21"), "{text}");
    assert!(text.contains("|A_-2^(1)(15)| = 3"), "{text}");
    assert!(text.contains("difference = 18"), "{text}");
}

#[test]
fn theorem13_passes() {
    let o = qtrunc(&["verify", "theorem13", "--R", "3", "--S", "1", "--kmax", "6", "--N", "200"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).ends_with("all 6 checks passed\n"));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["verify", "pentagonal", "--N", "-5"][..],
        &["verify", "nonsense"],
        &["verify", "conjecture", "--R", "4", "--S", "4"],
        &["verify", "wang-yee", "--R", "5", "--S", "3"],
        &["verify", "gz", "--k", "0"],
        &["verify", "gz", "--k", "3..1"],
        &["verify", "gz", "--k", "2", "--kmax", "3"],
        &["verify", "gz", "--format", "xml"],
        &["table", "phi"],
        &["verify"],
        &["frobnicate"],
    ] {
        let o = qtrunc(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn bad_worker_count_is_a_usage_error() {
    let o = Command::new(env!("CARGO_BIN_EXE_qtrunc"))
        .args(["verify", "gz", "--k", "1"])
        .env("QTRUNC_WORKERS", "many")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn gz_table_csv() {
    let o = qtrunc(&["table", "gz", "--k", "3", "--N", "20", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "k,n,coefficient");
    assert_eq!(lines.len(), 22);
    assert!(!text.contains('\r'));
    assert!(lines[2..].iter().all(|l| !l.split(',').nth(2).unwrap().starts_with('-')));
}

#[test]
fn recurrence_table_columns_agree() {
    let o = qtrunc(&["table", "recurrence117", "--nmax", "12"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let rows: Vec<Vec<&str>> = text.lines().skip(1).map(|l| l.split_whitespace().collect()).collect();
    assert_eq!(rows.len(), 12);
    assert!(rows.iter().all(|r| r[1] == r[2]));
}

#[test]
fn mk_table_json() {
    let o = qtrunc(&["table", "mk", "--n", "15", "--kmax", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[1]["m_k"], "18");
    assert_eq!(rows[0]["m_k"], "41");
}

#[test]
fn series_table_json_has_string_coefficients() {
    let o = qtrunc(&["table", "theorem13", "--R", "4", "--S", "1", "--k", "2", "--N", "10", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let coeffs = v["series"][0]["coefficients"].as_array().unwrap();
    assert_eq!(coeffs.len(), 11);
    assert!(coeffs.iter().all(|c| c.as_str().unwrap().parse::<i64>().is_ok()));
    assert_eq!(v["series"][0]["params"]["R"], 4);
}

#[test]
fn json_report_and_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("wy.json");
    let o = qtrunc(&[
        "verify", "wang-yee", "--R", "4", "--S", "2", "--m", "1..2", "--N", "40", "--format", "json",
        "--out", path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["pass"], true);
    let reports = v["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 2);
    assert_eq!(reports[1]["params"]["m"], 2);
    assert_eq!(reports[1]["suite"], "wang-yee");
}

#[test]
fn csv_verify_summary_rows() {
    let o = qtrunc(&["verify", "phi", "--nmax", "5", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("suite,R,S,k,n,expected,actual,pass"));
    assert_eq!(lines.next(), Some("phi,,,,1,,,true"));
    assert_eq!(text.lines().count(), 6);
}

#[test]
fn output_is_deterministic_across_worker_counts() {
    let run = |workers: &str| {
        Command::new(env!("CARGO_BIN_EXE_qtrunc"))
            .args(["verify", "mao", "--R", "2..6", "--kmax", "3", "--N", "60", "--format", "json"])
            .env("QTRUNC_WORKERS", workers)
            .output()
            .unwrap()
    };
    let one = run("1");
    let many = run("4");
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, many.stdout);
    assert_eq!(run("4").stdout, many.stdout);
}
