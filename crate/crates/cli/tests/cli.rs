//! Black-box tests of the `gpmyc` binary: output shapes, exit codes, and
//! run-to-run determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn gpmyc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gpmyc"))
        .args(args)
        .output()
        .expect("binary spawns")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

fn fixtures() -> String {
    PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures"))
        .display()
        .to_string()
}

// ---------------------------------------------------------------------------
// gp
// ---------------------------------------------------------------------------

#[test]
fn gp_reports_known_family_values() {
    for (args, needle) in [
        (vec!["gp", "--family", "cycle:5", "--mu"], "gp(mu(cycle:5)) = 6 "),
        (
            vec!["gp", "--family", "complete:4", "--mu", "--method", "closed"],
            "gp(mu(complete:4)) = 5 ",
        ),
        (vec!["gp", "--graph6", "Bw"], "gp(graph6:Bw) = 3 "),
        (
            vec!["gp", "--family", "cycle:7", "--mu", "--method", "partition"],
            "gp(mu(cycle:7)) = 7 ",
        ),
        (vec!["gp", "--family", "star:5", "--mu", "--method", "brute"], "gp(mu(star:5)) = 8 "),
    ] {
        let out = gpmyc(&args);
        assert!(out.status.success(), "{args:?}: {}", stderr(&out));
        let text = stdout(&out);
        assert!(text.contains(needle), "{args:?} printed {text}");
        assert!(text.contains("wall_ms="), "{args:?} printed {text}");
    }
}

#[test]
fn gp_witness_is_printed_for_search_methods() {
    let out = gpmyc(&["gp", "--family", "path:4", "--mu"]);
    assert!(stdout(&out).contains("witness={"));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["gp"],
        vec!["gp", "--family", "cycle:5", "--graph6", "Bw"],
        vec!["gp", "--family", "nosuch:3"],
        vec!["gp", "--family", "cycle:x"],
        vec!["gp", "--family", "cycle:5", "--method", "warp"],
        vec!["gp", "--family", "cycle:5", "--method", "closed"],
        vec!["gp", "--family", "path:9", "--mu", "--method", "closed"],
        vec!["check", "nosuch.suite"],
        vec!["frobnicate"],
        vec!["report", "--records", "x.json", "--format", "yaml"],
        vec!["bench", "--sizes", "3"],
    ] {
        let out = gpmyc(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}: {}", stderr(&out));
    }
}

#[test]
fn cap_errors_exit_3() {
    for args in [
        vec!["gp", "--family", "complete:12", "--mu", "--method", "brute"],
        vec!["gp", "--family", "cycle:14", "--mu", "--method", "partition"],
        vec!["bench", "--sizes", "11", "--methods", "brute"],
        vec!["bench", "--sizes", "13", "--methods", "partition"],
    ] {
        let out = gpmyc(&args);
        assert_eq!(out.status.code(), Some(3), "{args:?}: {}", stderr(&out));
    }
}

// ---------------------------------------------------------------------------
// check and report
// ---------------------------------------------------------------------------

#[test]
fn check_writes_records_that_report_renders() {
    let dir = tempfile::tempdir().expect("tempdir");
    let records_path = dir.path().join("records.json");
    let records_arg = records_path.display().to_string();

    let out = gpmyc(&[
        "check",
        "thm.cycles",
        "cor.star",
        "--fixtures",
        &fixtures(),
        "--out",
        &records_arg,
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("thm.cycles | cycle:5 | expected gp(mu) = 6 |"));
    assert!(text.contains("15 records, 15 passed, 0 failed."));

    let records =
        gpmyc_cli::records::from_json(&std::fs::read_to_string(&records_path).unwrap()).unwrap();
    assert_eq!(records.len(), 15);

    let md = gpmyc(&["report", "--records", &records_arg, "--format", "md"]);
    assert!(md.status.success());
    let md_text = stdout(&md);
    assert!(md_text.contains("## thm.cycles"));
    assert!(md_text.contains("| cycle:5 | gp(mu) = 6 |"));

    let csv = gpmyc(&["report", "--records", &records_arg, "--format", "csv"]);
    let csv_text = stdout(&csv);
    assert_eq!(csv_text.lines().count(), 16, "header plus one row per record");

    let json = gpmyc(&["report", "--records", &records_arg, "--format", "json"]);
    let round = gpmyc_cli::records::from_json(&stdout(&json)).unwrap();
    assert_eq!(round, records);
}

#[test]
fn check_exits_0_iff_all_records_pass() {
    let out = gpmyc(&["check", "lem.tree-lower", "cor.tree-exact", "--fixtures", &fixtures()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).ends_with("0 failed.\n"));
}

#[test]
fn check_output_is_deterministic_across_runs() {
    let args =
        ["check", "thm.multipartite", "lem.tree-leaf-w", "--seed", "7", "--fixtures", &fixtures()];
    let a = gpmyc(&args);
    let b = gpmyc(&args);
    assert!(a.status.success());
    // Record lines carry no timing fields, so the streams match bytewise.
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn check_seed_flag_changes_sampled_instances() {
    let run = |seed: &str| {
        stdout(&gpmyc(&["check", "cor.tree-upper", "--seed", seed, "--fixtures", &fixtures()]))
    };
    let a = run("1");
    let b = run("2");
    assert_ne!(a, b);
    assert!(a.ends_with("0 failed.\n") && b.ends_with("0 failed.\n"));
}

#[test]
fn check_honors_corpus_override() {
    let corpus = PathBuf::from(fixtures()).join("cubic10.g6").display().to_string();
    let out = gpmyc(&["check", "thm.cubic", "--corpus", &corpus, "--fixtures", &fixtures()]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("corpus summary [19 graphs]"));
    assert!(text.contains("abundant=0 of 19"));
}

#[test]
fn report_errors_use_io_exit_code() {
    let out = gpmyc(&["report", "--records", "/nonexistent/records.json"]);
    assert_eq!(out.status.code(), Some(4));

    let dir = tempfile::tempdir().expect("tempdir");
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "not json").unwrap();
    let out = gpmyc(&["report", "--records", &bad.display().to_string()]);
    assert_eq!(out.status.code(), Some(4));
}

// ---------------------------------------------------------------------------
// bench
// ---------------------------------------------------------------------------

#[test]
fn bench_emits_agreeing_values_per_instance() {
    let out = gpmyc(&["bench", "--sizes", "5,7", "--methods", "bb,partition", "--seed", "11"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "instance,method,value,median_ms");
    assert_eq!(lines.len(), 9, "two instances per size, two methods each");
    // cycle:5 rows must agree on the value 6.
    for line in &lines[1..3] {
        assert!(line.starts_with("\"cycle:5\""));
        assert!(line.contains(",6,"), "{line}");
    }
}

#[test]
fn bench_brute_is_no_faster_than_branch_and_bound() {
    // Subset scan on the 19-vertex mu(C_9) takes milliseconds; the pruned
    // search closes it in microseconds. Medians over 5 runs keep this stable.
    let out = gpmyc(&["bench", "--sizes", "9", "--methods", "brute,bb"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    let median = |method: &str| -> u128 {
        text.lines()
            .find(|l| l.starts_with("\"cycle:9\"") && l.contains(&format!(",{method},")))
            .and_then(|l| l.rsplit(',').next())
            .and_then(|ms| ms.parse().ok())
            .expect("cycle:9 row present")
    };
    assert!(median("bb") <= median("brute"));
}

#[test]
fn bench_is_deterministic_apart_from_timing() {
    let strip = |text: String| -> Vec<String> {
        text.lines()
            .map(|l| l.rsplit_once(',').map(|(head, _)| head.to_string()).unwrap_or_default())
            .collect()
    };
    let a = strip(stdout(&gpmyc(&["bench", "--sizes", "6", "--seed", "5"])));
    let b = strip(stdout(&gpmyc(&["bench", "--sizes", "6", "--seed", "5"])));
    assert_eq!(a, b);
}
