//! Workloads shared by the criterion benches.

use supercong::binomials::{coefficients, Series};
use supercong::charsum::{char_sum, Cubic, QrTable};
use supercong::legendre::eval_pn;
use supercong::{Registry, Result, SweepConfig, ValRing, Zmod};

/// `Σ_{k<p} C(2k,k)³ / mᵏ mod p²` through the valuation-tracked stream.
pub fn cubed_sum_mod_p2(p: u64, m: i64) -> Result<u64> {
    let ring = ValRing::new(p)?;
    let p2 = p * p;
    let inv = supercong::arith::inv_mod(m as i128, p2)?;
    let mut w = 1u64;
    let mut acc = 0u128;
    for v in coefficients(p, Series::CentralCubed, p - 1)? {
        acc = (acc + ring.reduce_p2(v) as u128 * w as u128) % p2 as u128;
        w = (w as u128 * inv as u128 % p2 as u128) as u64;
    }
    Ok(acc as u64)
}

/// Character sum of `x³ + mx + n` over `F_p`, table included.
pub fn depressed_char_sum(p: u64, m: i128, n: i128) -> Result<i64> {
    Ok(char_sum(&Cubic::depressed(p, m, n), &QrTable::new(p)?))
}

/// `P_{(p−1)/2}(x) mod p²` by the three-term recurrence.
pub fn half_legendre_mod_p2(p: u64, x: i128) -> Result<u64> {
    Ok(eval_pn((p - 1) / 2, Zmod::new(x, p * p))?.value())
}

/// Runs `claims` over every prime in `[lo, hi]` and returns the number of passes.
pub fn sweep_passes(reg: &Registry, claims: &[&str], lo: u64, hi: u64, threads: usize) -> Result<usize> {
    let cfg = SweepConfig {
        claims: claims.iter().map(|s| s.to_string()).collect(),
        primes: supercong::primes::primes_in(lo, hi),
        threads,
        ..SweepConfig::default()
    };
    let (_, summary) = reg.sweep(&cfg)?;
    Ok(summary.per_claim.iter().map(|t| t.pass).sum())
}
