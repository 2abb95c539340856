//! Acceptance suite: runs criteria 1–11 in order and prints one line per
//! criterion to stderr (uncaptured), then fails if any criterion failed.

use std::io::Write;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use supercong::binomials::{coefficients, Series};
use supercong::charsum::weil_report;
use supercong::identities::{
    check_certificates, check_recurrence_3_1, check_recurrence_4_1, lemma_3_1_grid, lemma_3_2_range,
    lemma_4_1_range, Which,
};
use supercong::primes::primes_in;
use supercong::quadform::{represent, represent_exhaustive};
use supercong::{ClaimReport, Registry, SweepConfig, ValRing, Verdict};

struct Outcome {
    ok: bool,
    detail: String,
}

fn report(n: u32, title: &str, o: &Outcome, elapsed: Duration) {
    let tag = if o.ok { "PASS" } else { "FAIL" };
    let line = format!("criterion {n}: {tag} {title} ({}; {:.1}s)", o.detail, elapsed.as_secs_f64());
    let _ = writeln!(std::io::stderr(), "{line}");
}

/// Sweeps `claims` over `primes` and requires no failure and at least one pass per claim.
fn sweep(reg: &Registry, claims: &[&str], primes: Vec<u64>, samples: usize) -> Outcome {
    sweep_reports(reg, claims, primes, samples).0
}

fn sweep_reports(reg: &Registry, claims: &[&str], primes: Vec<u64>, samples: usize) -> (Outcome, Vec<ClaimReport>) {
    let cfg = SweepConfig {
        claims: claims.iter().map(|s| s.to_string()).collect(),
        primes,
        samples,
        seed: 2024,
        ..SweepConfig::default()
    };
    let (reports, summary) = reg.sweep(&cfg).expect("known claims");
    let failures: Vec<_> = reports.iter().filter(|r| r.verdict == Verdict::Fail).collect();
    let idle: Vec<_> = summary.per_claim.iter().filter(|t| t.pass == 0).map(|t| t.claim.clone()).collect();
    let pass = reports.iter().filter(|r| r.verdict == Verdict::Pass).count();
    let mut detail = format!("{pass} pass, {} fail over {} claims", failures.len(), claims.len());
    if let Some(f) = failures.first() {
        detail.push_str(&format!("; first failure {} p={} {}: {} vs {}", f.claim, f.p, f.case, f.lhs, f.rhs));
    }
    if !idle.is_empty() {
        detail.push_str(&format!("; never passed: {idle:?}"));
    }
    let ok = failures.is_empty() && idle.is_empty();
    (Outcome { ok, detail }, reports)
}

fn within(o: Outcome, start: Instant, limit: Duration) -> Outcome {
    let t = start.elapsed();
    if t <= limit {
        o
    } else {
        Outcome { ok: false, detail: format!("{}; over the {}s budget", o.detail, limit.as_secs()) }
    }
}

fn exact_identities() -> Outcome {
    let reports = [lemma_3_1_grid(40), lemma_4_1_range(60), lemma_3_2_range(30)];
    let mut ok = reports.iter().all(|r| r.ok());
    let cases: usize = reports.iter().map(|r| r.cases).sum();
    ok &= (0..=40).all(|n| check_recurrence_3_1(n, 40));
    ok &= check_recurrence_4_1(60);
    let mut certs = 0;
    for n in 0..=40 {
        for w in [Which::Left31 { n }, Which::Right31 { n }] {
            let r = check_certificates(w, 40);
            ok &= r.failures.is_empty();
            certs += r.checked;
        }
    }
    for w in [Which::Left41, Which::Right41] {
        let r = check_certificates(w, 60);
        ok &= r.failures.is_empty();
        certs += r.checked;
    }
    Outcome { ok, detail: format!("{cases} identity cases, {certs} certificate points") }
}

fn big_binom(n: u64, k: u64) -> BigInt {
    (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
}

fn reduce_big(x: &BigInt, m: u64) -> u64 {
    let r = x % BigInt::from(m);
    let r = if r < BigInt::zero() { r + m } else { r };
    r.to_u64().unwrap()
}

fn oracle_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let primes = primes_in(3, 400);
    let mut mismatches = 0;
    for _ in 0..10_000 {
        let p = primes[rng.random_range(0..primes.len())];
        let k = rng.random_range(0..2 * p);
        let series = [Series::CentralCubed, Series::CentralQuartic, Series::CentralSquaredQuartic][rng.random_range(0..3)];
        let ring = ValRing::new(p).unwrap();
        let v = coefficients(p, series, k).unwrap()[k as usize];
        let c2 = big_binom(2 * k, k);
        let exact = match series {
            Series::CentralCubed => c2.pow(3),
            Series::CentralQuartic => c2 * big_binom(4 * k, 2 * k),
            Series::CentralSquaredQuartic => c2.pow(2) * big_binom(4 * k, 2 * k),
        };
        if reduce_big(&exact, p * p) != ring.reduce_p2(v) {
            mismatches += 1;
        }
    }
    let forms = [1u64, 2, 3, 4, 5, 6, 7, 9, 10, 13, 18, 22, 25, 37, 58];
    let mut compared = 0;
    for p in primes_in(3, 10_000) {
        for &d in &forms {
            if d % p == 0 {
                continue;
            }
            let a = represent(p, d).map(|r| (r.x.abs(), r.y.abs()));
            let b = represent_exhaustive(p, d).map(|r| (r.x.abs(), r.y.abs()));
            if a != b {
                mismatches += 1;
            }
            compared += 1;
        }
    }
    Outcome {
        ok: mismatches == 0,
        detail: format!("10000 binomial spot checks, {compared} representations, {mismatches} mismatches"),
    }
}

fn determinism(reg: &Registry) -> Outcome {
    let cfg = SweepConfig {
        claims: vec!["all".into()],
        primes: primes_in(5, 200),
        seed: 7,
        ..SweepConfig::default()
    };
    let run = |threads| {
        let (r, s) = reg.sweep(&SweepConfig { threads, ..cfg.clone() }).unwrap();
        (serde_json::to_vec(&r).unwrap(), serde_json::to_vec(&s).unwrap())
    };
    let a = run(0);
    let b = run(0);
    let c = run(1);
    Outcome { ok: a == b && a == c, detail: format!("{} report bytes", a.0.len()) }
}

#[test]
fn acceptance_criteria() {
    let reg = Registry::new();
    let mut all_ok = true;
    let mut run = |n: u32, title: &str, f: &mut dyn FnMut() -> Outcome| {
        let start = Instant::now();
        let o = f();
        report(n, title, &o, start.elapsed());
        all_ok &= o.ok;
    };

    run(1, "exact identities, recurrences and certificates", &mut || {
        let s = Instant::now();
        within(exact_identities(), s, Duration::from_secs(60))
    });
    run(2, "Beukers congruence, 5 <= p <= 1000", &mut || {
        let s = Instant::now();
        within(sweep(&reg, &["eq-1.3"], primes_in(5, 1000), 100), s, Duration::from_secs(30))
    });
    run(3, "septic central-binomial sum, 5 <= p <= 1000", &mut || {
        sweep(&reg, &["thm-3.2"], primes_in(5, 1000).into_iter().filter(|&p| p != 7).collect(), 100)
    });
    run(4, "mod p^2 sums, p <= 1000", &mut || {
        sweep(&reg, &["thm-3.3", "thm-3.4-i", "thm-3.4-ii", "thm-3.4-iii", "thm-4.3"], primes_in(3, 1000), 100)
    });
    run(5, "squaring congruence for every x, 5 <= p <= 199", &mut || {
        let s = Instant::now();
        within(sweep(&reg, &["thm-4.1"], primes_in(5, 199), 100), s, Duration::from_secs(60))
    });
    run(6, "Legendre values and character sums, p <= 2000", &mut || {
        sweep(
            &reg,
            &["thm-2.2", "thm-2.3", "thm-2.4", "thm-2.5", "thm-2.6", "thm-2.7", "thm-2.8", "eq-2.2", "eq-2.3", "eq-2.4", "eq-2.6", "eq-5.1"],
            primes_in(3, 2000),
            100,
        )
    });
    run(7, "fixed-m sums and CM evaluations, p <= 2000", &mut || {
        let s = Instant::now();
        let claims = [
            "thm-5.1-i", "thm-5.1-ii", "thm-5.1-iii", "thm-5.2", "thm-5.3", "thm-5.4", "thm-5.5", "thm-5.6", "thm-5.7",
            "thm-5.8", "thm-5.9", "thm-5.10", "thm-5.11", "thm-5.12",
        ];
        within(sweep(&reg, &claims, primes_in(3, 2000), 100), s, Duration::from_secs(120))
    });
    run(8, "property suites, exhaustive to 97 and 100 samples to 2000", &mut || {
        let claims = [
            "lemma-2.1", "lemma-2.2", "lemma-2.3", "lemma-2.4", "lemma-2.5", "lemma-2.6", "eq-1.1", "eq-1.2", "eq-1.7",
            "thm-2.1-i", "thm-2.1-ii", "cor-2.1", "lemma-4.2", "lemma-5.1",
        ];
        let (o, reports) = sweep_reports(&reg, &claims, primes_in(3, 2000), 100);
        let misplaced = reports
            .iter()
            .filter(|r| r.verdict == Verdict::Pass)
            .filter(|r| (r.p <= 97 && r.case != "exhaustive") || (r.p > 199 && r.case != "sampled"))
            .count();
        Outcome { ok: o.ok && misplaced == 0, detail: format!("{}; {misplaced} reports outside the exhaustive/sampled split", o.detail) }
    });
    run(9, "oracle equivalence", &mut oracle_equivalence);
    run(10, "Weil bound on every nonsingular cubic", &mut || {
        let w = weil_report();
        Outcome {
            ok: w.violations == 0 && w.checked > 0,
            detail: format!("{} cubics, {} violations{}", w.checked, w.violations, w.first_violation.map(|s| format!(", first {s}")).unwrap_or_default()),
        }
    });
    run(11, "determinism", &mut || determinism(&reg));

    assert!(all_ok, "some acceptance criteria failed; see the criterion lines above");
}
