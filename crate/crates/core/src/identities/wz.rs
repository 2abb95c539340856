//! Term-wise check of WZ certificates: with `G(m,k) = R(m,k)·F(m,k)`,
//! `Σ_j a_j(m) F(m+j,k) = G(m,k+1) − G(m,k)`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use super::{binom, recurrence_3_1, recurrence_4_1};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Which {
    /// Left side of the first lemma, at a fixed `n`.
    Left31 { n: i64 },
    Right31 { n: i64 },
    Left41,
    Right41,
}

impl fmt::Display for Which {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Which::Left31 { n } => write!(f, "3.1-left (n={n})"),
            Which::Right31 { n } => write!(f, "3.1-right (n={n})"),
            Which::Left41 => write!(f, "4.1-left"),
            Which::Right41 => write!(f, "4.1-right"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateReport {
    pub which: Which,
    pub checked: usize,
    /// `(m, k)` points where a denominator of `R` vanishes.
    pub skipped_poles: Vec<(i64, i64)>,
    /// `(m, k)` points where the telescoping relation fails.
    pub failures: Vec<(i64, i64)>,
}

impl CertificateReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty() && self.checked > 0
    }
}

fn c(n: i64, k: i64) -> BigInt {
    binom(n, k)
}

impl Which {
    fn summand(&self, m: i64, k: i64) -> BigInt {
        if k < 0 || k > m {
            return BigInt::zero();
        }
        match *self {
            Which::Left31 { n } => c(2 * k, k).pow(2) * c(n + k, 2 * k) * c(k, m - k),
            Which::Right31 { n } => c(2 * k, k) * c(n + k, 2 * k) * c(2 * m - 2 * k, m - k) * c(n + m - k, 2 * m - 2 * k),
            Which::Left41 => c(2 * k, k).pow(2) * c(4 * k, 2 * k) * c(k, m - k) * BigInt::from(-64).pow((m - k) as u32),
            Which::Right41 => c(2 * k, k) * c(4 * k, 2 * k) * c(2 * (m - k), m - k) * c(4 * (m - k), 2 * (m - k)),
        }
    }

    fn recurrence(&self, m: i64) -> [BigInt; 3] {
        match *self {
            Which::Left31 { n } | Which::Right31 { n } => recurrence_3_1(n, m),
            Which::Left41 | Which::Right41 => recurrence_4_1(m),
        }
    }

    /// `R(m,k)`, or `None` at a pole.
    fn certificate(&self, m: i64, k: i64) -> Option<BigRational> {
        let big = |v: i64| BigInt::from(v);
        let (num, den) = match *self {
            Which::Left31 { .. } => (
                -big(k * k) * big(2 * k - m - 1) * big(2 * k - m) * big(m + 2),
                big(m - k + 1) * big(m + 2 - k),
            ),
            Which::Right31 { n } => {
                let p = 3 * m * n * n - 2 * n * n * k + m * m + 3 * m * n - m * k + 6 * n * n - 2 * n * k + 4 * m + 6 * n
                    - 2 * k
                    + 4;
                (
                    big(k * k) * big(m - n - k) * big(m + n - k + 1) * big(p),
                    big(m - k + 1).pow(2) * big(m - k + 2).pow(2),
                )
            }
            Which::Left41 => (
                big(-4096) * big(k * k) * big(m + 2) * big(m - 2 * k) * big(m - 2 * k + 1),
                big(m - k + 1) * big(m - k + 2),
            ),
            Which::Right41 => (
                big(16)
                    * big(k * k)
                    * big(4 * m - 4 * k + 1)
                    * big(4 * m - 4 * k + 3)
                    * big(16 * m * m - 16 * m * k + 55 * m - 26 * k + 46),
                big(m - k + 1).pow(2) * big(m - k + 2).pow(2),
            ),
        };
        (!den.is_zero()).then(|| BigRational::new(num, den))
    }

    fn g(&self, m: i64, k: i64) -> Option<BigRational> {
        Some(self.certificate(m, k)? * BigRational::from(self.summand(m, k)))
    }

    /// The telescoping relation at one point, or `None` at a pole.
    pub fn holds_at(&self, m: i64, k: i64) -> Option<bool> {
        let a = self.recurrence(m);
        let lhs: BigInt = (0..3).map(|j| a[j].clone() * self.summand(m + j as i64, k)).sum();
        let rhs = self.g(m, k + 1)? - self.g(m, k)?;
        Some(BigRational::from(lhs) == rhs)
    }
}

/// Checks the relation at every `(m, k)` with `0 ≤ m ≤ m_max`, `0 ≤ k ≤ m + 2`.
pub fn check_certificates(which: Which, m_max: i64) -> CertificateReport {
    let points: Vec<(i64, i64)> = (0..=m_max).flat_map(|m| (0..=m + 2).map(move |k| (m, k))).collect();
    let results: Vec<_> = points.par_iter().map(|&(m, k)| ((m, k), which.holds_at(m, k))).collect();
    let mut report = CertificateReport { which, checked: 0, skipped_poles: Vec::new(), failures: Vec::new() };
    for (pt, r) in results {
        match r {
            None => report.skipped_poles.push(pt),
            Some(true) => report.checked += 1,
            Some(false) => {
                report.checked += 1;
                report.failures.push(pt);
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn r1_at_one_one_vanishes() {
        assert_eq!(Which::Left31 { n: 3 }.certificate(1, 1), Some(BigRational::zero()));
    }

    #[test]
    fn k_zero_certificate_vanishes() {
        for w in [Which::Left31 { n: 2 }, Which::Right31 { n: 2 }, Which::Left41, Which::Right41] {
            assert_eq!(w.certificate(5, 0), Some(BigRational::zero()));
        }
    }

    #[test]
    fn relation_holds_at_sample_points() {
        assert_eq!(Which::Left41.holds_at(2, 1), Some(true));
        assert_eq!(Which::Right31 { n: 4 }.holds_at(3, 2), Some(true));
        // m − k + 1 = 0
        assert_eq!(Which::Left41.holds_at(2, 2), None);
    }

    #[test]
    fn small_ranges_pass() {
        for w in [Which::Left31 { n: 3 }, Which::Right31 { n: 3 }, Which::Left41, Which::Right41] {
            let r = check_certificates(w, 10);
            assert!(r.ok(), "{w}: {:?}", r.failures);
            assert!(!r.skipped_poles.is_empty());
        }
    }

    #[test]
    fn transcription_error_is_detected() {
        // Same certificate with the sign flipped must fail somewhere.
        let w = Which::Left41;
        let bad = (1..8).any(|m| {
            (1..=m).any(|k| {
                let a = w.recurrence(m);
                let lhs: BigInt = (0..3).map(|j| a[j].clone() * w.summand(m + j as i64, k)).sum();
                match (w.g(m, k + 1), w.g(m, k)) {
                    (Some(g1), Some(g0)) => BigRational::from(lhs) != -(g1 - g0),
                    _ => false,
                }
            })
        });
        assert!(bad);
    }
}
