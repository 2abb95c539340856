//! The claim registry: every congruence of the theory as an executable
//! predicate, evaluated one prime at a time.

mod ctx;
mod pointwise;
mod property;
mod section5;

use std::fmt;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use ctx::{Checks, PrimeCtx};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimStatus {
    Proved,
    Conjectural,
}

impl fmt::Display for ClaimStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClaimStatus::Proved => "proved",
            ClaimStatus::Conjectural => "conjectural",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inapplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inapplicable => "inapplicable",
        })
    }
}

/// What a comparison is taken modulo.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Modulus {
    P,
    P2,
    /// Equality of integers.
    Exact,
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Modulus::P => "p",
            Modulus::P2 => "p^2",
            Modulus::Exact => "exact",
        })
    }
}

/// Result of evaluating a claim at one prime, before it becomes a report.
pub(crate) enum Outcome {
    Inapplicable(String),
    Checked(Checks),
}

type PointFn = fn(&PrimeCtx) -> Result<Outcome>;
/// Checks one domain point; `None` when the point lies outside the statement.
type CheckFn = fn(&PrimeCtx, u64, bool) -> Result<Option<Checks>>;
type SizeFn = fn(&PrimeCtx) -> u64;

#[derive(Clone, Copy)]
pub(crate) enum Eval {
    Point(PointFn),
    Property { size: SizeFn, check: CheckFn },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClaimKind {
    /// A statement about one value per prime.
    Pointwise,
    /// A statement quantified over a domain at each prime; checked over the
    /// whole domain for `p ≤ exhaustive_to`, on seeded samples above.
    Property { exhaustive_to: u64 },
}

/// One registered statement.
#[derive(Clone, Copy)]
pub struct Claim {
    pub id: &'static str,
    pub status: ClaimStatus,
    pub excluded: &'static [u64],
    /// Section of the source where the statement lives, e.g. `"§3"`.
    pub location: &'static str,
    pub statement: &'static str,
    /// Every case label the claim can report.
    pub cases: &'static [&'static str],
    pub kind: ClaimKind,
    pub(crate) eval: Eval,
}

impl fmt::Debug for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Claim").field("id", &self.id).field("status", &self.status).finish_non_exhaustive()
    }
}

impl Claim {
    /// `{2,7}` style rendering of the excluded primes.
    pub fn excluded_label(&self) -> String {
        let items: Vec<String> = self.excluded.iter().map(u64::to_string).collect();
        format!("{{{}}}", items.join(","))
    }

    pub fn is_property(&self) -> bool {
        matches!(self.kind, ClaimKind::Property { .. })
    }
}

/// Verdict for one `(claim, p)` pair. `micros` is zero unless timings are requested.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimReport {
    pub claim: String,
    pub p: u64,
    pub case: String,
    pub lhs: String,
    pub rhs: String,
    pub modulus: String,
    pub verdict: Verdict,
    pub micros: u64,
}

impl ClaimReport {
    fn inapplicable(claim: &str, p: u64, why: String) -> Self {
        ClaimReport {
            claim: claim.to_string(),
            p,
            case: why,
            lhs: String::new(),
            rhs: String::new(),
            modulus: String::new(),
            verdict: Verdict::Inapplicable,
            micros: 0,
        }
    }

    fn error(claim: &str, p: u64, e: &Error) -> Self {
        let case = match e {
            Error::Registry(_) | Error::Normalization { .. } => "registry error",
            _ => "error",
        };
        ClaimReport {
            claim: claim.to_string(),
            p,
            case: case.to_string(),
            lhs: String::new(),
            rhs: e.to_string(),
            modulus: String::new(),
            verdict: Verdict::Fail,
            micros: 0,
        }
    }

    fn from_checks(claim: &str, p: u64, checks: Checks) -> Self {
        if checks.list.is_empty() {
            return ClaimReport::error(claim, p, &Error::Registry(format!("{claim} made no comparison at {p}")));
        }
        let shown = checks.list.iter().find(|c| !c.ok).unwrap_or(&checks.list[0]);
        let ok = checks.all_ok();
        let case = if ok { checks.case.clone() } else { format!("{}; {}", checks.case, shown.what) };
        ClaimReport {
            claim: claim.to_string(),
            p,
            case,
            lhs: shown.lhs.clone(),
            rhs: shown.rhs.clone(),
            modulus: shown.modulus.to_string(),
            verdict: if ok { Verdict::Pass } else { Verdict::Fail },
            micros: 0,
        }
    }
}

/// Options for a sweep over `claims × primes`.
#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub claims: Vec<String>,
    pub primes: Vec<u64>,
    /// Worker threads; `0` lets rayon decide.
    pub threads: usize,
    pub seed: u64,
    /// Draws per property claim when the domain is not covered exhaustively.
    pub samples: usize,
    pub timings: bool,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig { claims: Vec::new(), primes: Vec::new(), threads: 0, seed: 0, samples: 100, timings: false }
    }
}

/// Per-claim counts over a sweep.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ClaimTally {
    pub claim: String,
    pub status: Option<ClaimStatus>,
    pub pass: usize,
    pub fail: usize,
    pub inapplicable: usize,
    /// Case labels of passing reports, in first-seen order.
    pub cases_hit: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub per_claim: Vec<ClaimTally>,
    pub proved_failures: usize,
    pub conjectural_failures: usize,
}

impl SweepSummary {
    /// No proved claim failed, and with `strict` no conjectural claim either.
    pub fn exit_ok(&self, strict: bool) -> bool {
        self.proved_failures == 0 && (!strict || self.conjectural_failures == 0)
    }

    pub fn tally(&self, id: &str) -> Option<&ClaimTally> {
        self.per_claim.iter().find(|t| t.claim == id)
    }
}

/// The set of registered claims, in a stable order.
pub struct Registry {
    claims: Vec<Claim>,
}

impl Default for Registry {
    fn default() -> Self {
        Registry::new()
    }
}

fn fnv1a(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

impl Registry {
    pub fn new() -> Self {
        let mut claims = Vec::new();
        claims.extend(pointwise::claims());
        claims.extend(property::claims());
        claims.extend(section5::claims());
        Registry { claims }
    }

    /// The registry plus a deliberately false proved claim, `fixture-false`,
    /// used to exercise failure handling end to end.
    pub fn with_fixture() -> Self {
        let mut r = Registry::new();
        r.claims.push(pointwise::false_fixture());
        r
    }

    pub fn claims(&self) -> &[Claim] {
        &self.claims
    }

    pub fn len(&self) -> usize {
        self.claims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.claims.is_empty()
    }

    pub fn get(&self, id: &str) -> Result<&Claim> {
        self.claims.iter().find(|c| c.id == id).ok_or_else(|| Error::UnknownClaim(id.to_string()))
    }

    /// Resolves a list of ids, or every claim for `["all"]`.
    pub fn select(&self, ids: &[String]) -> Result<Vec<&Claim>> {
        if ids.iter().any(|s| s == "all") {
            return Ok(self.claims.iter().collect());
        }
        ids.iter().map(|id| self.get(id)).collect()
    }

    /// Evaluates a claim at `p` with the default sampling (100 draws, seed 0).
    pub fn verify(&self, id: &str, p: u64) -> Result<ClaimReport> {
        Ok(evaluate(self.get(id)?, p, 100, 0))
    }

    /// Evaluates a claim at `p`, drawing `samples` points from `seed` when the
    /// domain is not covered exhaustively.
    pub fn verify_property(&self, id: &str, p: u64, samples: usize, seed: u64) -> Result<ClaimReport> {
        Ok(evaluate(self.get(id)?, p, samples.max(1), seed))
    }

    /// Runs every selected claim at every prime; reports come back in
    /// `(claim, prime)` order whatever the scheduling.
    pub fn sweep(&self, cfg: &SweepConfig) -> Result<(Vec<ClaimReport>, SweepSummary)> {
        let selected = self.select(&cfg.claims)?;
        let pairs: Vec<(&Claim, u64)> =
            selected.iter().flat_map(|c| cfg.primes.iter().map(move |&p| (*c, p))).collect();
        let run = || -> Vec<ClaimReport> {
            pairs
                .par_iter()
                .map(|&(c, p)| {
                    let start = Instant::now();
                    let mut r = evaluate(c, p, cfg.samples.max(1), cfg.seed);
                    if cfg.timings {
                        r.micros = start.elapsed().as_micros() as u64;
                    }
                    r
                })
                .collect()
        };
        let reports = if cfg.threads > 0 {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(cfg.threads)
                .build()
                .map_err(|e| Error::Registry(e.to_string()))?;
            pool.install(run)
        } else {
            run()
        };
        let summary = summarize(&selected, &reports);
        Ok((reports, summary))
    }
}

fn summarize(selected: &[&Claim], reports: &[ClaimReport]) -> SweepSummary {
    let mut summary = SweepSummary::default();
    for c in selected {
        if summary.tally(c.id).is_none() {
            summary.per_claim.push(ClaimTally { claim: c.id.to_string(), status: Some(c.status), ..Default::default() });
        }
    }
    for r in reports {
        let idx = summary.per_claim.iter().position(|t| t.claim == r.claim).expect("selected claim");
        let status = summary.per_claim[idx].status;
        let t = &mut summary.per_claim[idx];
        match r.verdict {
            Verdict::Pass => {
                t.pass += 1;
                if !t.cases_hit.contains(&r.case) {
                    t.cases_hit.push(r.case.clone());
                }
            }
            Verdict::Inapplicable => t.inapplicable += 1,
            Verdict::Fail => {
                t.fail += 1;
                match status {
                    Some(ClaimStatus::Conjectural) => summary.conjectural_failures += 1,
                    _ => summary.proved_failures += 1,
                }
            }
        }
    }
    summary
}

fn applicability_error(e: &Error) -> Option<String> {
    match e {
        Error::Inapplicable(msg) => Some(msg.clone()),
        Error::PrimeTooLarge { .. } | Error::InvalidModulus(_) => Some(e.to_string()),
        _ => None,
    }
}

/// Evaluates one claim at one prime. Never panics on bad input; every
/// outcome becomes a report.
fn evaluate(claim: &Claim, p: u64, samples: usize, seed: u64) -> ClaimReport {
    if claim.excluded.contains(&p) {
        return ClaimReport::inapplicable(claim.id, p, "excluded prime".to_string());
    }
    let ctx = match PrimeCtx::new(p) {
        Ok(c) => c,
        Err(e) => {
            return match applicability_error(&e) {
                Some(msg) => ClaimReport::inapplicable(claim.id, p, msg),
                None => ClaimReport::error(claim.id, p, &e),
            }
        }
    };
    let outcome = match claim.eval {
        Eval::Point(f) => f(&ctx),
        Eval::Property { size, check } => {
            let exhaustive_to = match claim.kind {
                ClaimKind::Property { exhaustive_to } => exhaustive_to,
                ClaimKind::Pointwise => 0,
            };
            run_property(claim.id, &ctx, size, check, p <= exhaustive_to, samples, seed)
        }
    };
    match outcome {
        Ok(Outcome::Checked(checks)) => ClaimReport::from_checks(claim.id, p, checks),
        Ok(Outcome::Inapplicable(why)) => ClaimReport::inapplicable(claim.id, p, why),
        Err(e) => match applicability_error(&e) {
            Some(msg) => ClaimReport::inapplicable(claim.id, p, msg),
            None => ClaimReport::error(claim.id, p, &e),
        },
    }
}

fn run_property(
    id: &str,
    ctx: &PrimeCtx,
    size: SizeFn,
    check: CheckFn,
    exhaustive: bool,
    samples: usize,
    seed: u64,
) -> Result<Outcome> {
    let n = size(ctx);
    if n == 0 {
        return Ok(Outcome::Inapplicable("empty domain".to_string()));
    }
    let points: Vec<u64> = if exhaustive {
        (0..n).collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ fnv1a(id) ^ ctx.p.wrapping_mul(0x9e37_79b9_7f4a_7c15));
        (0..samples).map(|_| rng.random_range(0..n)).collect()
    };
    let mode = if exhaustive { "exhaustive" } else { "sampled" };
    let mut first: Option<Checks> = None;
    for pt in points {
        let Some(checks) = check(ctx, pt, exhaustive)? else { continue };
        if !checks.all_ok() {
            let mut c = checks;
            c.case = format!("{mode}: witness {}", c.case);
            return Ok(Outcome::Checked(c));
        }
        if first.is_none() {
            first = Some(checks);
        }
    }
    match first {
        Some(mut c) => {
            c.case = mode.to_string();
            Ok(Outcome::Checked(c))
        }
        None => Ok(Outcome::Inapplicable("no applicable point in the domain".to_string())),
    }
}

#[cfg(test)]
mod tests;
