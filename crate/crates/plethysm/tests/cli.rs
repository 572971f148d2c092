use std::process::{Command, Output};

use plethysm::format::{schur_from_json, HwVectorJson};
use plethysm_core::{Partition, SchurVector};
use proptest::prelude::*;
use serde_json::Value;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_plethysm"))
        .args(args)
        .env_remove("PLETHYSM_CACHE_DIR")
        .output()
        .unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = bin(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

#[test]
fn decompose_three_three() {
    let v = schur_from_json(stdout(&["decompose", "--nu", "3", "--mu", "3"]).trim()).unwrap();
    let expected = SchurVector::from_terms(9, ["9", "7,2", "6,3", "5,2,2", "4,4,1"].map(|s| (p(s), 1))).unwrap();
    assert_eq!(v, expected);
}

#[test]
fn text_and_json_agree() {
    let args = ["decompose", "--nu", "1^4", "--mu", "2,1"];
    let json = schur_from_json(stdout(&args).trim()).unwrap();
    let text = stdout(&[&args[..], &["--format", "text"]].concat());
    let mut from_text = SchurVector::zero(12);
    for line in text.lines() {
        let mut it = line.split_whitespace();
        let c: i64 = it.next().unwrap().parse().unwrap();
        let l: Partition = it.next().unwrap().parse().unwrap();
        from_text.add_term(l, c).unwrap();
    }
    assert_eq!(json, from_text);
    assert_eq!(json.coeff(&p("6,4,2")), 2);
}

#[test]
fn maximal_json_schema() {
    let v: Value = serde_json::from_str(&stdout(&["maximal", "--nu", "1,1,1", "--mu", "1,1,1"])).unwrap();
    let weights = v["weights"].as_array().unwrap();
    assert_eq!(weights.len(), 2);
    assert!(weights.iter().all(|w| w["count"] == 1));
}

#[test]
fn pssyt_limit_keeps_count() {
    let v: Value = serde_json::from_str(&stdout(&["pssyt", "--nu", "2", "--mu", "2", "--d", "3", "--limit", "4"])).unwrap();
    assert_eq!(v["count"], 21);
    assert_eq!(v["tableaux"].as_array().unwrap().len(), 4);
    let w: Value = serde_json::from_str(&stdout(&["pssyt", "--nu", "2", "--mu", "2,1,1", "--weight", "3,2,2,1"])).unwrap();
    assert_eq!(w["count"], 5);
}

#[test]
fn hwv_json_round_trip() {
    let v: Value = serde_json::from_str(&stdout(&["hwv", "--nu", "2", "--mu", "2,1,1", "--lambda", "3,2,2,1"])).unwrap();
    assert_eq!(v["dimension"], 1);
    let vec: HwVectorJson = serde_json::from_value(v["vectors"][0].clone()).unwrap();
    let h = vec.to_hw_vector().unwrap();
    assert!(h.is_highest_weight().unwrap());
    assert_eq!(h.coeffs().len(), 4);
}

#[test]
fn verify_reports_are_json_lines() {
    for args in [
        vec!["verify", "--theorem", "1", "--nu", "2", "--mu", "2", "--lambda", "2,2", "--r", "2"],
        vec!["verify", "--theorem", "1t", "--nu", "3", "--mu", "1,1", "--lambda", "4,2", "--r", "2"],
        vec!["verify", "--theorem", "3", "--n", "2", "--n-star", "1", "--mu", "2", "--lambda", "2,2", "--lambda-star", "2"],
        vec!["verify", "--theorem", "5", "--nu", "1^3", "--mu", "2"],
    ] {
        let out = stdout(&args);
        assert_eq!(out.lines().count(), 1);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["verdict"], "pass", "{args:?}");
        assert!(v["ms"].is_number());
    }
}

#[test]
fn usage_errors_exit_one_with_one_line() {
    for args in [
        vec!["coeff", "--nu", "1,2", "--mu", "2", "--lambda", "2"],
        vec!["coeff", "--nu", "2", "--mu", "2", "--lambda", "2, 2"],
        vec!["coeff", "--nu", "2", "--mu", "2", "--lambda", "3"],
        vec!["hwv", "--nu", "2", "--mu", "2", "--lambda", "2,1,1", "--d", "2"],
        vec!["verify", "--theorem", "1", "--nu", "2", "--mu", "2", "--lambda", "2,2", "--r", "1"],
        vec!["verify", "--theorem", "4"],
        vec![],
    ] {
        let out = bin(&args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(out.stdout.is_empty());
        assert_eq!(String::from_utf8_lossy(&out.stderr).lines().count(), 1, "{args:?}");
    }
    assert_eq!(bin(&["--help"]).status.code(), Some(0));
}

#[test]
fn cache_hits_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let args = ["decompose", "--nu", "2,1", "--mu", "2", "--cache", d];
    let first = bin(&args);
    assert!(first.status.success());
    let file = dir.path().join("decompose_nu-2.1_mu-2_d-6.json");
    let stored = std::fs::read(&file).unwrap();
    assert_eq!(stored, first.stdout);
    let second = bin(&args);
    assert_eq!(second.stdout, first.stdout);
    assert!(String::from_utf8_lossy(&second.stderr).contains("cache hit"));
    assert_eq!(second.stdout, bin(&args[..5]).stdout);

    let env = Command::new(env!("CARGO_BIN_EXE_plethysm"))
        .args(&args[..5])
        .env("PLETHYSM_CACHE_DIR", d)
        .output()
        .unwrap();
    assert_eq!(env.stdout, first.stdout);
    assert!(String::from_utf8_lossy(&env.stderr).contains("cache hit"));
}

#[test]
fn threads_flag() {
    let a = stdout(&["decompose", "--nu", "2", "--mu", "3", "--threads", "1"]);
    let b = stdout(&["decompose", "--nu", "2", "--mu", "3", "--threads", "4"]);
    assert_eq!(a, b);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn json_round_trips(terms in proptest::collection::vec((0usize..7, -5i64..6), 0..6)) {
        let all = plethysm_core::partition::partitions(6, None, None);
        let mut v = SchurVector::zero(6);
        for (k, c) in terms {
            v.add_term(all[k].clone(), c).unwrap();
        }
        let text = plethysm::format::schur_to_json(&v);
        prop_assert_eq!(schur_from_json(&text).unwrap(), v);
    }
}
