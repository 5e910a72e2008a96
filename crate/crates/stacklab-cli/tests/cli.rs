//! End-to-end tests of the command-line interface: worked values, output
//! formats, exit codes, and cache behavior, each against a private cache
//! directory so parallel tests cannot interfere.

use std::path::Path;
use std::process::{Command, Output};

use stacklab::asym;
use stacklab::genfun::{self, Variant};

fn run(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stacklab"))
        .args(args)
        .env("STACKLAB_CACHE", cache)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

#[test]
fn count_matches_worked_values() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["count", "ss", "4"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "ss(4) = 12\n");
    let o = run(dir.path(), &["count", "s", "1"]);
    assert_eq!(stdout(&o), "s(1) = 1\n");
}

#[test]
fn count_oracle_agrees() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["count", "dm", "5", "--oracle"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "dm(5) = 9, oracle = 9, match\n");
    let o = run(dir.path(), &["count", "fphi", "6", "--oracle"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).ends_with("match\n"));
}

#[test]
fn count_enforces_bounds() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&run(dir.path(), &["count", "dm", "45", "--oracle"])), 3);
    assert_eq!(code(&run(dir.path(), &["count", "s", "0"])), 2);
    assert_eq!(code(&run(dir.path(), &["count", "l", "5", "--oracle"])), 2);
}

#[test]
fn table_csv_matches_worked_rows() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(
        dir.path(),
        &["table", "--variants", "g,gs", "--max", "4", "--format", "csv"],
    );
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,g,gs");
    assert_eq!(lines[5], "4,2,5");
}

#[test]
fn table_csv_round_trips_coefficients() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(
        dir.path(),
        &["table", "--variants", "gs", "--max", "20", "--format", "csv"],
    );
    let text = stdout(&o);
    let series = genfun::series(Variant::Gs, 20);
    for (n, line) in text.lines().skip(1).enumerate() {
        let (row_n, count) = line.split_once(',').expect("two columns");
        assert_eq!(row_n, n.to_string());
        assert_eq!(count, series.coeff(n).to_string());
    }
}

#[test]
fn table_json_uses_decimal_strings() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(
        dir.path(),
        &["table", "--variants", "g,gs", "--max", "4", "--format", "json"],
    );
    let rows: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let last = &rows.as_array().unwrap()[4];
    assert_eq!(last["n"], 4);
    assert_eq!(last["g"], "2");
    assert_eq!(last["gs"], "5");
}

#[test]
fn table_rejects_false_theta_column() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&run(dir.path(), &["table", "--variants", "l", "--max", "3"])), 2);
}

#[test]
fn verify_reports_passes_and_usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["verify", "gs_eq_p", "--order", "100"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "gs_eq_p: pass at order 100\n");
    let o = run(dir.path(), &["verify", "dm_eta", "-N", "0"]);
    assert_eq!(code(&o), 0);
    let o = run(dir.path(), &["verify", "all", "--order", "60"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().count(), 14);
    assert!(stdout(&o).lines().all(|l| l.contains("pass")));
    assert_eq!(code(&run(dir.path(), &["verify", "nonsense", "--order", "5"])), 2);
}

#[test]
fn bijection_prints_the_worked_example() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["bijection", "18", "--partition", "4,4,3,3,1"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "4+4+3+3+1  ->  (3 2 0 / 4 2 1)  ->  1123(3)221\n");
}

#[test]
fn bijection_lists_single_partition_of_one() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["bijection", "1", "--all"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().count(), 1);
}

#[test]
fn bijection_check_covers_twenty() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["bijection", "20", "--check"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("round trips OK for 627 partitions of 20"), "{text}");
    assert!(text.contains("zero-top-row count 293 = g(20)"), "{text}");
}

#[test]
fn bijection_enforces_bounds() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&run(dir.path(), &["bijection", "0"])), 2);
    assert_eq!(code(&run(dir.path(), &["bijection", "45"])), 3);
}

#[test]
fn asym_ratios_tighten_with_n() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(
        dir.path(),
        &["asym", "gs", "--n", "50,200", "--format", "csv"],
    );
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let ratios: Vec<f64> = text
        .lines()
        .skip(1)
        .map(|l| l.rsplit(',').next().unwrap().parse().unwrap())
        .collect();
    assert!((ratios[1] - 1.0).abs() < (ratios[0] - 1.0).abs(), "{text}");
}

#[test]
fn asym_catalog_matches_the_library() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["asym", "--catalog"]);
    assert_eq!(code(&o), 0);
    let entries: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let entries = entries.as_array().unwrap();
    assert_eq!(entries.len(), 11);
    let s = entries.iter().find(|e| e["variant"] == "s").unwrap();
    let mt = asym::main_term(Variant::S).unwrap();
    assert_eq!(s["c"].as_f64().unwrap(), mt.c);
    assert_eq!(s["alpha"].as_f64().unwrap(), mt.alpha);
    assert_eq!(s["beta"].as_f64().unwrap(), mt.beta);
}

#[test]
fn asym_rejects_variants_without_main_terms() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&run(dir.path(), &["asym", "l", "--n", "10"])), 2);
    assert_eq!(code(&run(dir.path(), &["asym", "gs"])), 2);
}

#[test]
fn eval_hsratio_approaches_the_golden_ratio() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(
        dir.path(),
        &["eval", "hsratio", "--eps", "0.05", "--format", "csv"],
    );
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let ratio: f64 = text.lines().nth(1).unwrap().rsplit(',').next().unwrap().parse().unwrap();
    assert!((ratio - 1.0).abs() < 0.05, "{text}");
}

#[test]
fn eval_saddle_routes_agree() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(
        dir.path(),
        &["eval", "saddle", "--eps", "0.05", "--format", "csv"],
    );
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let row: Vec<&str> = text.lines().nth(1).unwrap().split(',').collect();
    assert!(row[1].starts_with('-'), "{text}");
    let ratio: f64 = row[3].parse().unwrap();
    assert!((ratio - 1.0).abs() < 0.02, "{text}");
}

#[test]
fn eval_enforces_its_domains() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&run(dir.path(), &["eval", "g", "--eps", "0.1"])), 2);
    assert_eq!(code(&run(dir.path(), &["eval", "saddle", "--eps", "0.5"])), 2);
    assert_eq!(code(&run(dir.path(), &["eval", "dm", "--eps", "-0.1"])), 2);
}

#[test]
fn cache_runs_are_byte_identical_and_monotone() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["table", "--variants", "ss", "--max", "25", "--format", "csv"];
    let cold = run(dir.path(), &args);
    assert_eq!(code(&cold), 0);
    assert!(dir.path().join("ss.json").exists());
    let warm = run(dir.path(), &args);
    assert_eq!(cold.stdout, warm.stdout);
    let mut forced: Vec<&str> = args.to_vec();
    forced.push("--force-recompute");
    let third = run(dir.path(), &forced);
    assert_eq!(cold.stdout, third.stdout);

    let smaller = run(
        dir.path(),
        &["table", "--variants", "ss", "--max", "10", "--format", "csv"],
    );
    assert_eq!(code(&smaller), 0);
    let cached: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("ss.json")).unwrap())
            .unwrap();
    assert_eq!(cached["order"], 25);
}

#[test]
fn out_flag_writes_the_same_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.csv");
    let args = [
        "table", "--variants", "d", "--max", "12", "--format", "csv",
    ];
    let direct = run(dir.path(), &args);
    let mut with_out: Vec<&str> = args.to_vec();
    let path_str = path.to_str().unwrap();
    with_out.extend(["--out", path_str]);
    let o = run(dir.path(), &with_out);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), direct.stdout);
    let bad = run(
        dir.path(),
        &["table", "--variants", "d", "--max", "3", "--out", "/nonexistent/x.csv"],
    );
    assert_eq!(code(&bad), 4);
}
