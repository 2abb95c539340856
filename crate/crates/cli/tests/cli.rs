use std::process::Command;

use supercong_cli::{parse_primes, run, EXIT_FAILURES, EXIT_OK, EXIT_USAGE};

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("supercong").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn list_shows_registry() {
    let (code, out, _) = invoke(&["list"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("thm-3.2 proved {2,7} §3"));
    assert!(out.contains("conj-1.4 conjectural"));
    assert!(out.lines().count() >= 40);
    assert!(!out.contains("fixture-false"));
}

#[test]
fn list_is_stable() {
    assert_eq!(invoke(&["list"]).1, invoke(&["list"]).1);
}

#[test]
fn septic_sum_all_pass() {
    let (code, out, _) = invoke(&["--claims", "thm-3.2", "--primes", "5..1000", "--format", "csv"]);
    assert_eq!(code, EXIT_OK);
    let mut rows = csv::Reader::from_reader(out.as_bytes());
    let headers = rows.headers().unwrap().clone();
    assert_eq!(headers.iter().collect::<Vec<_>>(), ["claim", "p", "case", "lhs", "rhs", "modulus", "verdict", "micros"]);
    let mut n = 0;
    for r in rows.records() {
        let r = r.unwrap();
        let verdict = &r[6];
        if &r[1] == "7" {
            assert_eq!(verdict, "inapplicable");
        } else {
            assert_eq!(verdict, "pass", "{r:?}");
        }
        n += 1;
    }
    assert_eq!(n, 166);
}

#[test]
fn json_is_deterministic() {
    let args = ["--claims", "all", "--primes", "5..60", "--format", "json", "--seed", "7"];
    let (c1, a, _) = invoke(&args);
    let (c2, b, _) = invoke(&args);
    assert_eq!(a, b);
    assert_eq!(c1, c2);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    let rows = v.as_array().unwrap();
    assert!(!rows.is_empty());
    for key in ["claim", "p", "case", "lhs", "rhs", "modulus", "verdict", "micros"] {
        assert!(rows[0].get(key).is_some(), "{key}");
    }
}

#[test]
fn thread_count_does_not_change_output() {
    let base = ["--claims", "lemma-2.5,thm-5.4,eq-1.3", "--primes", "3..300", "--format", "csv", "--seed", "3"];
    let one = invoke(&[&base[..], &["--threads", "1"]].concat()).1;
    let four = invoke(&[&base[..], &["--threads", "4"]].concat()).1;
    assert_eq!(one, four);
}

#[test]
fn unknown_claim_is_usage_error() {
    let (code, _, err) = invoke(&["--claims", "bogus-id"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("unknown claim id `bogus-id`"));
}

#[test]
fn bad_flags_are_usage_errors() {
    assert_eq!(invoke(&["--primes", "5..x"]).0, EXIT_USAGE);
    assert_eq!(invoke(&["--primes", "9"]).0, EXIT_USAGE);
    assert_eq!(invoke(&["--format", "xml"]).0, EXIT_USAGE);
    assert_eq!(invoke(&["--no-such-flag"]).0, EXIT_USAGE);
    assert_eq!(invoke(&["--samples", "0", "--claims", "lemma-2.2"]).0, EXIT_USAGE);
}

#[test]
fn false_proved_claim_fails_the_run() {
    let (code, out, err) =
        invoke(&["--with-fixture", "--claims", "fixture-false,thm-3.2", "--primes", "5..50", "--format", "csv"]);
    assert_eq!(code, EXIT_FAILURES);
    assert!(out.contains("fixture-false,5,"));
    assert!(err.contains("proved failures: 13"));
}

#[test]
fn conjectural_failures_need_strict_flag() {
    let args = ["--claims", "conj-5.5-5", "--primes", "5..50", "--format", "csv"];
    assert_eq!(invoke(&args).0, EXIT_OK);
    assert_eq!(invoke(&[&args[..], &["--strict-conjectures"]].concat()).0, EXIT_FAILURES);
    let ok = ["--claims", "conj-1.4", "--primes", "3..200", "--strict-conjectures"];
    assert_eq!(invoke(&ok).0, EXIT_OK);
}

#[test]
fn exclude_and_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.csv");
    let p = path.to_str().unwrap();
    let (code, out, _) =
        invoke(&["--claims", "eq-1.3", "--primes", "3..50", "--exclude", "13,17", "--format", "csv", "--out", p]);
    assert_eq!(code, EXIT_OK);
    assert!(out.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("eq-1.3,11,"));
    assert!(!text.contains("eq-1.3,13,"));
    assert!(!text.contains("eq-1.3,17,"));
}

#[test]
fn timings_fill_micros_only_on_request() {
    let base = ["--claims", "thm-4.1", "--primes", "101", "--format", "csv"];
    let (_, plain, _) = invoke(&base);
    assert!(plain.lines().nth(1).unwrap().ends_with(",0"));
    let (_, timed, _) = invoke(&[&base[..], &["--timings"]].concat());
    assert!(!timed.lines().nth(1).unwrap().ends_with(",0"));
}

#[test]
fn prime_lists() {
    assert_eq!(parse_primes("5..13").unwrap(), vec![5, 7, 11, 13]);
    assert_eq!(parse_primes("13, 5..7, 13").unwrap(), vec![5, 7, 13]);
    assert_eq!(parse_primes("2..=3").unwrap(), vec![2, 3]);
    assert!(parse_primes("10..2").is_err());
    assert!(parse_primes("15").is_err());
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_supercong");
    let ok = Command::new(bin).args(["--claims", "eq-2.2", "--primes", "3..100"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let bad = Command::new(bin).args(["--claims", "bogus-id"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    let fail = Command::new(bin).args(["--with-fixture", "--claims", "fixture-false", "--primes", "5"]).output().unwrap();
    assert_eq!(fail.status.code(), Some(1));
}
