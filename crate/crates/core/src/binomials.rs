//! Streaming generation of `C(2k,k)` and `C(4k,2k)` in valuation-tracked form,
//! and the truncated sums built from them.
//!
//! Upper summation limits are always explicit: `(p−1)/2`, `[p/4]` and `p−1`
//! give different sums.

use crate::arith::{floor_quarter, PRational, Residue, ValRing, ValUnit, Zmod};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinomKind {
    /// `C(2k, k)`
    Central,
    /// `C(4k, 2k)`
    Quartic,
}

/// State machine yielding `C(2k,k)` (or `C(4k,2k)`) for `k = 0, 1, 2, …` as
/// exact [`ValUnit`]s.
#[derive(Clone, Debug)]
pub struct BinomStream {
    ring: ValRing,
    kind: BinomKind,
    k: u64,
    value: ValUnit,
    started: bool,
}

impl BinomStream {
    pub fn new(p: u64, kind: BinomKind) -> Result<Self> {
        let ring = ValRing::new(p)?;
        Ok(BinomStream { ring, kind, k: 0, value: ring.one(), started: false })
    }

    pub fn ring(&self) -> &ValRing {
        &self.ring
    }

    /// Index of the current value.
    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn current(&self) -> ValUnit {
        self.value
    }

    /// Moves from `k` to `k+1` and returns the new value.
    pub fn advance(&mut self) -> ValUnit {
        let r = &self.ring;
        let k = self.k as i128;
        let (num, den) = match self.kind {
            // C(2k+2,k+1) = C(2k,k) · 2(2k+1) / (k+1)
            BinomKind::Central => (
                r.mul(r.from_int(2), r.from_int(2 * k + 1)),
                r.from_int(k + 1),
            ),
            // C(4k+4,2k+2) = C(4k,2k) · (4k+1)(4k+2)(4k+3)(4k+4) / ((2k+1)(2k+2))²
            BinomKind::Quartic => {
                let n = [4 * k + 1, 4 * k + 2, 4 * k + 3, 4 * k + 4]
                    .iter()
                    .fold(r.one(), |acc, &f| r.mul(acc, r.from_int(f)));
                let d = r.mul(r.from_int(2 * k + 1), r.from_int(2 * k + 2));
                (n, r.mul(d, d))
            }
        };
        let scaled = r.mul(self.value, num);
        self.value = r.div(scaled, den).expect("binomial coefficients are integers");
        self.k += 1;
        self.value
    }
}

impl Iterator for BinomStream {
    type Item = ValUnit;

    /// Yields the value at `k = 0` first, then successive values.
    fn next(&mut self) -> Option<ValUnit> {
        if !self.started {
            self.started = true;
            return Some(self.value);
        }
        Some(self.advance())
    }
}

/// Explicit upper limit of a truncated sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Upper {
    /// `(p−1)/2`
    Half,
    /// `[p/4]`
    Quarter,
    /// `p−1`
    Full,
}

impl Upper {
    pub fn bound(self, p: u64) -> u64 {
        match self {
            Upper::Half => (p - 1) / 2,
            Upper::Quarter => floor_quarter(p),
            Upper::Full => p - 1,
        }
    }
}

/// The binomial products summed in the congruences.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Series {
    /// `C(2k,k)³`
    CentralCubed,
    /// `C(2k,k)·C(4k,2k)`
    CentralQuartic,
    /// `C(2k,k)²·C(4k,2k)`
    CentralSquaredQuartic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Modulus {
    P,
    P2,
}

/// Exact coefficients of `series` for `k = 0..=last`.
pub fn coefficients(p: u64, series: Series, last: u64) -> Result<Vec<ValUnit>> {
    let central = BinomStream::new(p, BinomKind::Central)?;
    let ring = *central.ring();
    let n = last as usize + 1;
    let coeffs = match series {
        Series::CentralCubed => central.take(n).map(|c| ring.mul(ring.mul(c, c), c)).collect(),
        Series::CentralQuartic => central
            .zip(BinomStream::new(p, BinomKind::Quartic)?)
            .take(n)
            .map(|(c, q)| ring.mul(c, q))
            .collect(),
        Series::CentralSquaredQuartic => central
            .zip(BinomStream::new(p, BinomKind::Quartic)?)
            .take(n)
            .map(|(c, q)| ring.mul(ring.mul(c, c), q))
            .collect(),
    };
    Ok(coeffs)
}

/// `Σ coeffs[k] · ratioᵏ` in the ring of `ratio`, by Horner's rule.
///
/// Coefficients are reduced modulo `p²` before embedding, which is exact for
/// rings of characteristic `p` or `p²`.
pub fn series_sum<R: Residue>(ring: &ValRing, coeffs: &[ValUnit], ratio: R) -> R {
    coeffs
        .iter()
        .rev()
        .fold(ratio.zero(), |acc, &c| acc * ratio + ratio.embed(ring.reduce_p2(c) as i128))
}

fn inverse_ratio(p: u64, m: PRational, modulus: u64) -> Result<Zmod> {
    if m.divisible_by(p) {
        return Err(Error::Inapplicable(format!("{p} divides {m}")));
    }
    let inv = PRational::new(m.den(), m.num());
    Ok(Zmod::new(inv.residue(modulus)? as i128, modulus))
}

/// `Σ_{k=0}^{upper} C(2k,k)³ / mᵏ mod p²`.
pub fn sum_cb3_over_m(p: u64, m: PRational, upper: Upper) -> Result<u64> {
    let ring = ValRing::new(p)?;
    let ratio = inverse_ratio(p, m, ring.p2())?;
    let coeffs = coefficients(p, Series::CentralCubed, upper.bound(p))?;
    Ok(series_sum(&ring, &coeffs, ratio).value())
}

/// `Σ_{k=0}^{upper} C(2k,k)·C(4k,2k) / mᵏ` modulo `p` or `p²`.
///
/// Modulo `p`, terms with `[p/4] < k < p` must vanish; a surviving term is
/// reported as a route mismatch.
pub fn sum_c2k_c4k_over_m(p: u64, m: PRational, upper: Upper, modulus: Modulus) -> Result<u64> {
    let ring = ValRing::new(p)?;
    let md = match modulus {
        Modulus::P => p,
        Modulus::P2 => ring.p2(),
    };
    let ratio = inverse_ratio(p, m, md)?;
    let coeffs = coefficients(p, Series::CentralQuartic, upper.bound(p))?;
    if modulus == Modulus::P {
        let q = floor_quarter(p) as usize;
        if let Some(k) = coeffs.iter().enumerate().skip(q + 1).find(|(_, c)| ring.reduce_p(**c) != 0) {
            return Err(Error::RouteMismatch(format!("C(2k,k)C(4k,2k) not divisible by {p} at k={}", k.0)));
        }
    }
    Ok(series_sum(&ring, &coeffs, ratio).value())
}

/// `Σ_{k=0}^{p−1} C(2k,k)²·C(4k,2k) / mᵏ mod p²`.
pub fn sum_cb2_c4k_over_m(p: u64, m: PRational) -> Result<u64> {
    let ring = ValRing::new(p)?;
    let ratio = inverse_ratio(p, m, ring.p2())?;
    let coeffs = coefficients(p, Series::CentralSquaredQuartic, p - 1)?;
    Ok(series_sum(&ring, &coeffs, ratio).value())
}

/// `A(p,λ) = Σ_{k=0}^{(p−1)/2} C(n,k)² C(n+k,k) λ^{kp} mod p` with `n = (p−1)/2`,
/// from literal binomials of `n`.
///
/// The middle factor is `C(n+k,k)`. With `C(n+k,2k)` in its place the sum is
/// congruent to `Σ C(2k,k)³ (−λ/256)ᵏ` instead of `Σ C(2k,k)³ (λ/64)ᵏ`.
pub fn a_p_lambda(p: u64, lambda: PRational) -> Result<u64> {
    crate::arith::FieldDesc::base(p)?;
    let lam = Zmod::new(lambda.residue(p)? as i128, p);
    let n = (p - 1) / 2;
    let fact: Vec<Zmod> = std::iter::once(Zmod::new(1, p))
        .chain((1..p).scan(Zmod::new(1, p), |acc, i| {
            *acc = *acc * Zmod::new(i as i128, p);
            Some(*acc)
        }))
        .collect();
    let binom = |a: u64, b: u64| -> Result<Zmod> {
        Ok(fact[a as usize] * fact[b as usize].inverse()? * fact[(a - b) as usize].inverse()?)
    };
    let step = lam.pow(p);
    let mut power = Zmod::new(1, p);
    let mut acc = Zmod::new(0, p);
    for k in 0..=n {
        let c = binom(n, k)?;
        acc = acc + c * c * binom(n + k, k)? * power;
        power = power * step;
    }
    Ok(acc.value())
}
