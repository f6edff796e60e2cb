use std::process::{Command, Output};

fn polycount(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polycount")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn table_csv() {
    let o = polycount(&["table", "--max-d", "8", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "d,vertices,c,c_plus,c_minus");
    assert_eq!(lines.len(), 8);
    assert!(lines.contains(&"4,7,31,38,24"));
    assert_eq!(lines[1], "2,5,1,1,1");
}

#[test]
fn table_rejects_small_max_d() {
    let o = polycount(&["table", "--max-d", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--max-d"));
    assert_eq!(polycount(&["table"]).status.code(), Some(2));
    assert_eq!(polycount(&["table", "--max-d", "5", "--format", "xml"]).status.code(), Some(2));
}

#[test]
fn table_json_uses_decimal_strings() {
    let o = polycount(&["table", "--max-d", "150", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 149);
    assert_eq!(rows[2]["d"], 4);
    assert_eq!(rows[2]["vertices"], 7);
    assert_eq!(rows[2]["c_plus"], "38");
    let big = rows.last().unwrap()["c"].as_str().unwrap();
    assert!(big.parse::<u64>().is_err(), "d=150 count exceeds 64 bits");
}

#[test]
fn output_is_deterministic_across_job_counts() {
    let a = polycount(&["table", "--max-d", "60", "--format", "json", "--jobs", "1"]);
    let b = polycount(&["table", "--max-d", "60", "--format", "json", "--jobs", "4"]);
    let c = polycount(&["table", "--max-d", "60", "--format", "json", "--sequential"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn output_file() {
    let path = std::env::temp_dir().join(format!("polycount-cli-{}.csv", std::process::id()));
    let o = polycount(&["table", "--max-d", "5", "--format", "csv", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert!(written.starts_with("d,vertices,c,c_plus,c_minus\n"));
}

#[test]
fn verify_passes_with_findings() {
    let o = polycount(&["verify", "--max-size", "8"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.contains("0 failed"));
    assert!(out.contains("departs from the identity route at x^8"));
    assert!(out.contains("count of record"));
}

#[test]
fn verify_json() {
    let o = polycount(&["verify", "--max-size", "6", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["passed"], true);
    let statuses: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["status"].as_str().unwrap()).collect();
    assert!(statuses.iter().all(|s| *s != "FAIL"));
    assert_eq!(statuses.iter().filter(|s| **s == "FINDING").count(), 2);
}

#[test]
fn asymptotics_precision() {
    let o = Command::new(env!("CARGO_BIN_EXE_polycount"))
        .args(["asymptotics", "--max-d", "20", "--format", "json"])
        .env("POLYCOUNT_PRECISION", "4")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["constants"]["gamma"], "2.839");
    assert_eq!(v["constants"]["lambda"], "1.685");
    assert_eq!(v["rows"].as_array().unwrap().len(), 3 * 19);

    let bad = Command::new(env!("CARGO_BIN_EXE_polycount"))
        .args(["asymptotics", "--max-d", "20"])
        .env("POLYCOUNT_PRECISION", "zero")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert_eq!(polycount(&["asymptotics", "--max-d", "9"]).status.code(), Some(2));
}

#[test]
fn asymptotics_default_precision() {
    let o = polycount(&["asymptotics", "--max-d", "10"]);
    assert!(stdout(&o).contains("gamma = 2.83928675521\n"));
}

#[test]
fn bench_separates_timings() {
    let o = polycount(&["bench", "--max-n", "800", "--steps", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["scaling"]["sub_quadratic"], true);
    let ns: Vec<u64> = v["scaling"]["rows"].as_array().unwrap().iter().map(|r| r["n"].as_u64().unwrap()).collect();
    assert_eq!(ns, vec![200, 400, 800]);
    assert_eq!(v["timings_nondeterministic"].as_array().unwrap().len(), 3);
}
