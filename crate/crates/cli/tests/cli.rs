use std::process::{Command, Output};

use serde_json::Value;

fn nsg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nsg")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = nsg(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_str(stdout(&out).trim()).unwrap()
}

#[test]
fn invariants_of_three_generators() {
    let v = json(&["invariants", "10,11,26"]);
    assert_eq!(v["c"], 50);
    assert_eq!(v["k"], 8);
    assert_eq!(v["b"], 13);
    let v = json(&["invariants", "4,7,13"]);
    assert_eq!(v["b"], 1);
    assert_eq!(v["ts"], serde_json::json!([2, 2, 1, 2]));
}

#[test]
fn gaps_and_gens_flags_agree() {
    let a = json(&["invariants", "--gens", "4,7,13"]);
    let b = json(&["invariants", "--gaps", "1,2,3,5,6,9,10"]);
    assert_eq!(a, b);
}

#[test]
fn exit_codes() {
    assert_eq!(nsg(&["invariants", "1,2"]).status.code(), Some(3));
    assert_eq!(nsg(&["invariants", "4,x"]).status.code(), Some(2));
    assert_eq!(nsg(&["invariants", "4,6"]).status.code(), Some(3));
    assert_eq!(nsg(&["enumerate", "--max-genus", "3", "--filter", "q=1"]).status.code(), Some(2));
    assert_eq!(nsg(&["enumerate", "--max-genus", "3", "--max-conductor", "4"]).status.code(), Some(2));
    assert_eq!(nsg(&["verify", "nosuch"]).status.code(), Some(2));
}

#[test]
fn classify_labels() {
    assert_eq!(json(&["classify", "4,5"])["label"], "thm3.1/gorenstein");
    let v = json(&["classify", "5,12,16,18,19"]);
    assert_eq!(v["label"], "thm3.4/1");
    assert_eq!(v["matches"][0]["branch"], "2y>=c+e");
    let v = json(&["classify", "10,11,26"]);
    assert_eq!(v["label"], "unclassified");
    assert_eq!(v["q"], 13);
}

#[test]
fn classify_reports_listed_type_sequence() {
    let v = json(&["classify", "4,7,13"]);
    assert_eq!(v["corollary"]["verified"], true);
}

#[test]
fn decompose_text_and_json() {
    let out = nsg(&["decompose", "10,11,26", "--format", "text"]);
    let text = stdout(&out);
    assert!(text.contains("H_1 = {11,21,31,41}"), "{text}");
    assert!(text.contains("c = 50, p = 4, h = 0, k = 8"), "{text}");
    let v = json(&["decompose", "10,11,26"]);
    assert_eq!(v["ys"], serde_json::json!([11, 22, 26, 33, 37, 44, 48]));
    assert_eq!(v["ls"], serde_json::json!([3, 2, 2, 1, 1, 0, 0]));
}

#[test]
fn enumerate_counts_rows() {
    let out = nsg(&["enumerate", "--max-genus", "8"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("generators;e;c;genus;n;r;b;k;p;h;type_sequence;label"));
    assert_eq!(lines.count(), 155);
    let one = stdout(&nsg(&["enumerate", "--max-genus", "1"]));
    assert_eq!(one.lines().count(), 2);
    assert!(one.lines().nth(1).unwrap().starts_with("2,3;"));
}

#[test]
fn enumerate_filter_by_b() {
    let text = stdout(&nsg(&["enumerate", "--max-conductor", "12", "--filter", "b=1"]));
    let gens: Vec<&str> = text.lines().skip(1).map(|l| l.split(';').next().unwrap()).collect();
    for want in ["4,7,13", "3,5,7", "4,7,9,10"] {
        assert!(gens.contains(&want), "{want} missing from {gens:?}");
    }
    for line in text.lines().skip(1) {
        assert_eq!(line.split(';').nth(6), Some("1"), "{line}");
    }
}

#[test]
fn enumerate_json_lines_round_trip() {
    let out = nsg(&["enumerate", "--max-genus", "5", "--format", "json"]);
    let rows: Vec<Value> = stdout(&out).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows.len(), 1 + 2 + 4 + 7 + 12);
    for row in rows {
        let gens = row["generators"].as_str().unwrap();
        let again = json(&["invariants", gens]);
        for key in ["e", "c", "r", "b", "k"] {
            assert_eq!(row[key], again[key], "{gens} {key}");
        }
        assert_eq!(row["genus"], again["delta"]);
    }
}

#[test]
fn enumerate_writes_to_file() {
    let path = std::env::temp_dir().join(format!("nsg-enum-{}.csv", std::process::id()));
    let out = nsg(&["enumerate", "--max-genus", "4", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(text.lines().count(), 1 + 14);
}

#[test]
fn verify_exit_status() {
    let out = nsg(&["verify", "thm3.5", "--max-genus", "16"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["verified"], true);
    assert_eq!(v["counterexamples"], serde_json::json!([]));
    assert_eq!(nsg(&["verify", "cor3.8", "--max-genus", "14"]).status.code(), Some(0));
}

#[test]
fn decompose_small_cases() {
    let v = json(&["decompose", "4,5"]);
    assert_eq!(v["skeleton"], serde_json::json!([0, 4, 8]));
    assert_eq!(v["towers"], serde_json::json!([[5, 9], [10]]));
    let v = json(&["decompose", "3,5,7"]);
    assert_eq!(v["skeleton"], serde_json::json!([0, 3]));
    assert_eq!(v["towers"], serde_json::json!([]));
    assert_eq!(v["k"], 1);
}

#[test]
fn invariants_json_matches_library() {
    for s in nsg_core::enumerate_by_genus(6) {
        let v = json(&["invariants", &s.generators_string()]);
        let mut want = serde_json::to_value(nsg_core::invariant_report(&s)).unwrap();
        want["generators"] = serde_json::json!(s.generators());
        want["ts"] = serde_json::json!(nsg_core::type_sequence(&s).entries());
        assert_eq!(v, want);
    }
}

#[test]
fn verify_reports_checked_count() {
    let v = json(&["verify", "cor3.8", "--max-genus", "14"]);
    assert_eq!(v["verified"], true);
    assert!(v["semigroups_checked"].as_u64().unwrap() > 0);
}
