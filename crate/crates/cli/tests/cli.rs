use std::fs;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn seqlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_seqlab"))
        .args(args)
        .output()
        .expect("run seqlab")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

fn drop_timing(mut v: Value) -> Value {
    match &mut v {
        Value::Object(m) => {
            m.remove("elapsed_ms");
        }
        Value::Array(items) => {
            for item in items.iter_mut() {
                *item = drop_timing(item.take());
            }
        }
        _ => {}
    }
    v
}

#[test]
fn seq_prints_index_value_lines() {
    let out = seqlab(&["seq", "A", "1..3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1 1\n2 2\n3 5\n");

    let out = seqlab(&["seq", "a000975", "200..200", "--method", "closed"]);
    let line = stdout(&out);
    let value = line.trim().split(' ').nth(1).unwrap();
    assert_eq!(value.len(), 61);

    let out = seqlab(&["seq", "C", "0..4", "--format", "json"]);
    let v = json(&out);
    assert_eq!(v[4]["index"], 4);
    assert_eq!(v[4]["value"], "14");
}

#[test]
fn every_method_prints_the_same_terms() {
    let base = stdout(&seqlab(&["seq", "A", "1..64"]));
    for m in ["rec", "binary", "complement", "gap", "closed"] {
        assert_eq!(
            stdout(&seqlab(&["seq", "A", "1..64", "--method", m])),
            base,
            "{m}"
        );
    }
}

#[test]
fn seq_usage_errors_exit_2() {
    for args in [
        &["seq", "Z", "1..3"][..],
        &["seq", "A", "5..1"],
        &["seq", "A", "0..3"],
        &["seq", "A", "1-3"],
        &["seq", "B", "1..3", "--method", "rec"],
        &["seq", "A", "1..3", "--method", "fast"],
        &["seq", "A", "1..3", "--format", "dot"],
    ] {
        let out = seqlab(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn verify_single_claim_report() {
    let out = seqlab(&["verify", "theorem-3-2", "--max-n", "1000"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema"], "seqlab.report/v1");
    assert_eq!(v["claim_id"], "theorem-3-2");
    assert_eq!(v["status"], "pass");
    assert_eq!(v["counterexamples"], Value::Array(vec![]));
    assert!(v["elapsed_ms"].is_u64());
    let notes = v["notes"][0].as_str().unwrap();
    assert!(
        notes.ends_with("1, 2, 5, 10, 21, 42, 85, 170, 341, 682"),
        "{notes}"
    );
}

#[test]
fn planted_fault_exits_1_with_counterexample() {
    let out = seqlab(&["verify", "lemma-3-1", "--inject-fault"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["status"], "fail");
    let cx = v["counterexamples"].as_array().unwrap();
    assert!(!cx.is_empty() && cx.len() <= 10);
    assert!(cx[0]["input"].as_str().unwrap().contains("777"));
}

#[test]
fn verify_usage_errors_exit_2() {
    for args in [
        &["verify", "theorem-9-9"][..],
        &["verify", "lemma-4-6", "--max-n", "10"],
        &["verify", "lemma-3-1", "--max-bits", "10"],
        &["verify", "theorem-3-2", "--max-n", "0"],
        &["verify", "theorem-4-8", "--max-n", "10", "--max-bits", "8"],
        &["verify", "all", "--max-n", "10"],
        &["verify"],
    ] {
        assert_eq!(seqlab(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn verify_all_is_complete_and_deterministic() {
    let first = seqlab(&["verify", "all"]);
    assert_eq!(
        first.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&first.stderr)
    );
    let reports = json(&first);
    let reports = reports.as_array().unwrap();
    assert_eq!(reports.len(), 18);
    assert!(reports.iter().all(|r| r["status"] == "pass"));
    let second = seqlab(&["verify", "all"]);
    assert_eq!(drop_timing(json(&first)), drop_timing(json(&second)));
}

#[test]
fn verify_all_with_faults_fails() {
    let out = seqlab(&["verify", "all", "--inject-fault"]);
    assert_eq!(out.status.code(), Some(1));
    let reports = json(&out);
    assert!(reports
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r["status"] == "fail"));
}

#[test]
fn enumerate_listings() {
    let out = seqlab(&["enumerate", "catalan-words", "6"]);
    assert_eq!(stdout(&out), "000111\n001011\n001101\n010011\n010101\n");
    assert_eq!(stdout(&seqlab(&["enumerate", "catalan-words", "0"])), "λ\n");

    let out = seqlab(&["enumerate", "partitions", "6"]);
    assert_eq!(stdout(&out).lines().count(), 10);
    assert!(stdout(&out)
        .lines()
        .all(|l| l.starts_with("AB") && l.len() == 6));

    let out = seqlab(&["enumerate", "bubbles", "4", "--unbased", "--format", "json"]);
    let v = json(&out);
    assert_eq!(v.as_array().unwrap().len(), 5);
    assert!(v[0].as_str().unwrap().starts_with("u|"));

    let out = seqlab(&["enumerate", "gray", "3"]);
    assert_eq!(stdout(&out).lines().last(), Some("7 100"));
    let out = seqlab(&["enumerate", "ring-path", "3"]);
    assert_eq!(stdout(&out).lines().nth(5), Some("5 111"));
    let out = seqlab(&["enumerate", "gray", "10", "--limit", "4"]);
    assert_eq!(stdout(&out).lines().count(), 4);
}

#[test]
fn enumerate_run_starts() {
    let out = seqlab(&["enumerate", "run-starts", "--max-bits", "8"]);
    let firsts: Vec<u64> = stdout(&out)
        .lines()
        .map(|l| l.split(' ').next().unwrap().parse().unwrap())
        .collect();
    assert_eq!(&firsts[..6], &[3, 6, 11, 22, 39, 78]);
    assert_eq!(stdout(&out).lines().nth(2), Some("11 1011 01"));

    let out = seqlab(&[
        "enumerate",
        "run-starts",
        "--max-bits",
        "8",
        "--sorted",
        "--format",
        "json",
    ]);
    let v = json(&out);
    let ns: Vec<u64> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["n"].as_u64().unwrap())
        .collect();
    assert_eq!(&ns[..7], &[3, 6, 11, 22, 39, 43, 78]);
    assert!(ns.windows(2).all(|p| p[0] < p[1]));
}

#[test]
fn ring_path_dot() {
    let out = seqlab(&["enumerate", "ring-path", "3", "--format", "dot"]);
    assert!(out.status.success());
    let dot = stdout(&out);
    assert!(
        dot.starts_with("graph") || dot.starts_with("digraph"),
        "{dot}"
    );
    assert_eq!(dot.matches("--").count(), 7);
    assert_eq!(
        seqlab(&["enumerate", "ring-path", "7", "--format", "dot"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn enumerate_usage_errors_exit_2() {
    for args in [
        &["enumerate", "catalan-words", "26"][..],
        &["enumerate", "catalan-words", "5"],
        &["enumerate", "partitions", "21"],
        &["enumerate", "bubbles"],
        &["enumerate", "gray", "4", "--format", "dot"],
        &["enumerate", "run-starts"],
        &["enumerate", "run-starts", "--max-bits", "33"],
        &["enumerate", "run-starts", "8"],
        &["enumerate", "gray", "4", "--max-bits", "4"],
        &["enumerate", "partitions", "4", "--unbased"],
        &["enumerate", "trees", "4"],
    ] {
        assert_eq!(seqlab(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn bfile_export_then_import() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("b.txt");
    let p = path.to_str().unwrap();

    let out = seqlab(&["bfile", "export", "A", "--offset", "1", "--count", "10"]);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 10);
    assert_eq!(text.lines().next(), Some("1 1"));
    assert!(!text.contains('\r'));

    let out = seqlab(&[
        "bfile", "export", "B", "--count", "1024", "--header", "-o", p,
    ]);
    assert!(out.status.success());
    assert!(fs::read_to_string(&path).unwrap().starts_with("# A265158"));
    let out = seqlab(&["bfile", "import", p, "B", "--offset", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["checked"], 1024);
    assert_eq!(v["counterexamples"], Value::Array(vec![]));
}

#[test]
fn bfile_import_mismatch_and_parse_errors() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("a.txt");
    let p = path.to_str().unwrap();

    fs::write(&path, "# A\n1 1\n2 2\n3 5\n4 10\n5 20\n").unwrap();
    let out = seqlab(&["bfile", "import", p, "A"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["counterexamples"][0]["expected"], "21");
    assert_eq!(v["counterexamples"][0]["actual"], "20");

    fs::write(&path, "1 1\n2 2\n\n4 10\n").unwrap();
    let out = seqlab(&["bfile", "import", p, "A"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 4"));

    fs::write(&path, "2 2\n3 5\n").unwrap();
    assert_eq!(
        seqlab(&["bfile", "import", p, "A", "--offset", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(seqlab(&["bfile", "import", p, "A"]).status.code(), Some(0));
    let missing = dir.path().join("none.txt");
    assert_eq!(
        seqlab(&["bfile", "import", missing.to_str().unwrap(), "A"])
            .status
            .code(),
        Some(2)
    );
}
