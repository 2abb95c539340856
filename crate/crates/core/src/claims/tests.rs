use super::*;

#[test]
fn septic_sum_at_eleven() {
    let r = Registry::new().verify("thm-3.2", 11).unwrap();
    assert_eq!(r.verdict, Verdict::Pass);
    assert_eq!(r.lhs, "5");
    assert_eq!(r.modulus, "p");
}

#[test]
fn septic_sum_at_three() {
    let r = Registry::new().verify("thm-3.2", 3).unwrap();
    assert_eq!(r.verdict, Verdict::Pass);
}

#[test]
fn quartic_char_sum_at_five() {
    let r = Registry::new().verify("eq-2.2", 5).unwrap();
    assert_eq!(r.verdict, Verdict::Pass);
    assert_eq!(r.lhs, "-2");
}

#[test]
fn inert_septic_case() {
    let r = Registry::new().verify("thm-2.4", 13).unwrap();
    assert_eq!(r.verdict, Verdict::Pass);
    assert_eq!(r.case, "p ≡ 3,5,6 mod 7");
}

#[test]
fn excluded_prime_is_inapplicable() {
    let r = Registry::new().verify("thm-2.4", 7).unwrap();
    assert_eq!(r.verdict, Verdict::Inapplicable);
}

#[test]
fn square_series_exhaustive_small() {
    let r = Registry::new().verify("thm-4.1", 5).unwrap();
    assert_eq!(r.verdict, Verdict::Pass);
    assert_eq!(r.case, "exhaustive");
}

#[test]
fn sampled_property_passes() {
    let r = Registry::new().verify_property("lemma-2.5", 1009, 100, 42).unwrap();
    assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
    assert_eq!(r.case, "sampled");
}

#[test]
fn registry_census() {
    let reg = Registry::new();
    assert!(reg.len() >= 40);
    assert!(reg.get("no-such-claim").is_err());
    assert!(reg.get("fixture-false").is_err());
    let mut ids: Vec<_> = reg.claims().iter().map(|c| c.id).collect();
    ids.sort();
    ids.dedup();
    assert_eq!(ids.len(), reg.len());
}

#[test]
fn false_fixture_fails() {
    let r = Registry::with_fixture().verify("fixture-false", 11).unwrap();
    assert_eq!(r.verdict, Verdict::Fail);
}

#[test]
fn sweep_is_deterministic() {
    let reg = Registry::new();
    let cfg = SweepConfig {
        claims: vec!["lemma-2.5".into(), "thm-3.2".into(), "thm-5.3".into()],
        primes: vec![3, 5, 7, 11, 13, 101, 1009],
        threads: 2,
        seed: 7,
        ..SweepConfig::default()
    };
    let (a, _) = reg.sweep(&cfg).unwrap();
    let (b, _) = reg.sweep(&SweepConfig { threads: 1, ..cfg }).unwrap();
    let ser = |v: &[ClaimReport]| format!("{v:?}");
    assert_eq!(ser(&a), ser(&b));
}

#[test]
fn empty_sweep() {
    let cfg = SweepConfig { claims: vec!["thm-3.2".into()], primes: vec![], ..SweepConfig::default() };
    let (reports, summary) = Registry::new().sweep(&cfg).unwrap();
    assert!(reports.is_empty());
    assert!(summary.exit_ok(true));
}
