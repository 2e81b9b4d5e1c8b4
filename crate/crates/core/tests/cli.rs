mod common;

use std::io::Write;
use std::process::{Command, Output};

fn snarkcrit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_snarkcrit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn classify_named_petersen() {
    let o = snarkcrit(&["--named", "petersen", "--command", "classify"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with("graph_index,order,is_snark,girth,"));
    let row: Vec<&str> = lines[1].split(',').collect();
    assert_eq!(&row[..11], &["0", "10", "true", "5", "5", "true", "true", "false", "true", "true", "false"]);
    assert!(row[11].parse::<u64>().is_ok() && row[12].parse::<u64>().is_ok());
}

#[test]
fn verify_local_named_petersen() {
    let o = snarkcrit(&["--named", "petersen", "--command", "verify-local", "--format", "jsonl"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["pairs"], 45);
    assert_eq!(v["inconsistent_pairs"], 0);
    assert_eq!(v["consistent"], true);
}

#[test]
fn unreadable_input_exits_2() {
    let o = snarkcrit(&["--input", "/nonexistent/corpus.g6"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn parse_error_exits_3_with_line() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "IheA@GUAo\n\nIheA@GUA").unwrap();
    let o = snarkcrit(&["--input", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn max_order_filters_but_keeps_indices() {
    let f = common::data_path("snarks_10_22.g6");
    let o = snarkcrit(&["--input", f.to_str().unwrap(), "--max-order", "18", "--no-timings"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let ids: Vec<&str> = out.lines().skip(1).map(|l| l.split(',').next().unwrap()).collect();
    assert_eq!(ids, ["0", "1", "2"]);
}

#[test]
fn stats_totals_match_records() {
    let f = common::data_path("snarks_10_22.g6");
    let path = f.to_str().unwrap();
    let stats = stdout(&snarkcrit(&["--input", path, "--command", "stats"]));
    let records = stdout(&snarkcrit(&["--input", path, "--no-timings"]));
    let header: Vec<&str> = stats.lines().next().unwrap().split(',').collect();
    let total: Vec<&str> = stats.lines().last().unwrap().split(',').collect();
    assert_eq!(total[0], "total");
    let col = |name: &str| header.iter().position(|h| *h == name).unwrap();
    let count = |field: usize| records.lines().skip(1).filter(|l| l.split(',').nth(field) == Some("true")).count();
    assert_eq!(total[col("graphs")].parse::<usize>().unwrap(), records.lines().count() - 1);
    assert_eq!(total[col("critical")].parse::<usize>().unwrap(), count(5));
    assert_eq!(total[col("bicritical")].parse::<usize>().unwrap(), count(6));
    assert_eq!(total[col("strictly_critical")].parse::<usize>().unwrap(), count(7));
    assert_eq!(total[col("strong")].parse::<usize>().unwrap(), count(10));
    let per_order: usize = stats
        .lines()
        .skip(1)
        .filter(|l| !l.starts_with("total"))
        .map(|l| l.split(',').nth(col("graphs")).unwrap().parse::<usize>().unwrap())
        .sum();
    assert_eq!(per_order, total[col("graphs")].parse::<usize>().unwrap());
}

#[test]
fn non_snark_named_graphs_are_refused() {
    let o = snarkcrit(&["--named", "theta", "--command", "verify-strong"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("not a snark"));
}

#[test]
fn bad_flags_are_rejected() {
    assert_ne!(snarkcrit(&["--named", "petersen", "--jobs", "0"]).status.code(), Some(0));
    assert_ne!(snarkcrit(&["--named", "heawood"]).status.code(), Some(0));
    assert_ne!(snarkcrit(&[]).status.code(), Some(0));
}

#[test]
fn fail_fast_without_violations_changes_nothing() {
    let f = common::data_path("snarks_10_22.g6");
    let path = f.to_str().unwrap();
    let plain = snarkcrit(&["--input", path, "--command", "verify-coincidence", "--no-timings"]);
    let fast = snarkcrit(&["--input", path, "--command", "verify-coincidence", "--no-timings", "--fail-fast", "--jobs", "3"]);
    assert_eq!(plain.status.code(), Some(0));
    assert_eq!(fast.status.code(), Some(0));
    assert_eq!(plain.stdout, fast.stdout);
    assert_eq!(stdout(&plain).lines().count(), 30);
}
