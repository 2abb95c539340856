//! Exact big-integer checks of the binomial identities behind the modular
//! statements: two convolution lemmas, their recurrences and WZ certificates,
//! and `Sₙ(x) = Pₙ(√(1+4x))²`.

mod wz;

pub use wz::{check_certificates, CertificateReport, Which};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

/// `C(n, k)` as a big integer; zero outside `0 ≤ k ≤ n`.
pub fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

fn central(k: i64) -> BigInt {
    binom(2 * k, k)
}

/// Both sides of the first convolution lemma at `(m, n)`:
/// `Σ_k C(2k,k)² C(n+k,2k) C(k,m−k)` and
/// `Σ_k C(2k,k) C(n+k,2k) C(2m−2k,m−k) C(n+m−k,2m−2k)`.
pub fn lemma_3_1_sides(m: i64, n: i64) -> (BigInt, BigInt) {
    let left = (0..=m).map(|k| central(k).pow(2) * binom(n + k, 2 * k) * binom(k, m - k)).sum();
    let right = (0..=m)
        .map(|k| central(k) * binom(n + k, 2 * k) * central(m - k) * binom(n + m - k, 2 * (m - k)))
        .sum();
    (left, right)
}

pub fn check_lemma_3_1(m: i64, n: i64) -> bool {
    let (l, r) = lemma_3_1_sides(m, n);
    l == r
}

/// Both sides of the second convolution lemma at `m`:
/// `Σ_k C(2k,k)² C(4k,2k) C(k,m−k) (−64)^{m−k}` and
/// `Σ_k C(2k,k) C(4k,2k) C(2(m−k),m−k) C(4(m−k),2(m−k))`.
pub fn lemma_4_1_sides(m: i64) -> (BigInt, BigInt) {
    let left = (0..=m)
        .map(|k| central(k).pow(2) * binom(4 * k, 2 * k) * binom(k, m - k) * BigInt::from(-64).pow((m - k) as u32))
        .sum();
    let right = (0..=m)
        .map(|k| central(k) * binom(4 * k, 2 * k) * central(m - k) * binom(4 * (m - k), 2 * (m - k)))
        .sum();
    (left, right)
}

pub fn check_lemma_4_1(m: i64) -> bool {
    let (l, r) = lemma_4_1_sides(m);
    l == r
}

/// Coefficients of `(m+1)(m+2n+2)(m−2n) f(m) + (2m+3)(m²−2n²+3m−2n+2) f(m+1) + (m+2)³ f(m+2)`.
pub(crate) fn recurrence_3_1(n: i64, m: i64) -> [BigInt; 3] {
    [
        BigInt::from((m + 1) * (m + 2 * n + 2) * (m - 2 * n)),
        BigInt::from((2 * m + 3) * (m * m - 2 * n * n + 3 * m - 2 * n + 2)),
        BigInt::from((m + 2).pow(3)),
    ]
}

/// Coefficients of `1024(m+1)(2m+1)(2m+3) S(m) − 8(2m+3)(8m²+24m+19) S(m+1) + (m+2)³ S(m+2)`.
pub(crate) fn recurrence_4_1(m: i64) -> [BigInt; 3] {
    [
        BigInt::from(1024 * (m + 1) * (2 * m + 1) * (2 * m + 3)),
        BigInt::from(-8 * (2 * m + 3) * (8 * m * m + 24 * m + 19)),
        BigInt::from((m + 2).pow(3)),
    ]
}

fn annihilates(coeffs: &[BigInt; 3], f: &[BigInt]) -> bool {
    (coeffs[0].clone() * &f[0] + coeffs[1].clone() * &f[1] + coeffs[2].clone() * &f[2]).is_zero()
}

/// Both sides of the first lemma satisfy its recurrence for all `m ≤ m_max − 2`.
pub fn check_recurrence_3_1(n: i64, m_max: i64) -> bool {
    let sides: Vec<_> = (0..=m_max).map(|m| lemma_3_1_sides(m, n)).collect();
    let left: Vec<_> = sides.iter().map(|s| s.0.clone()).collect();
    let right: Vec<_> = sides.iter().map(|s| s.1.clone()).collect();
    (0..=m_max - 2).all(|m| {
        let c = recurrence_3_1(n, m);
        let i = m as usize;
        annihilates(&c, &left[i..i + 3]) && annihilates(&c, &right[i..i + 3])
    })
}

/// Both sides of the second lemma satisfy its recurrence for all `m ≤ m_max − 2`.
pub fn check_recurrence_4_1(m_max: i64) -> bool {
    let sides: Vec<_> = (0..=m_max).map(lemma_4_1_sides).collect();
    let left: Vec<_> = sides.iter().map(|s| s.0.clone()).collect();
    let right: Vec<_> = sides.iter().map(|s| s.1.clone()).collect();
    (0..=m_max - 2).all(|m| {
        let c = recurrence_4_1(m);
        let i = m as usize;
        annihilates(&c, &left[i..i + 3]) && annihilates(&c, &right[i..i + 3])
    })
}

/// Coefficients of `Pₙ(y)` in ascending powers of `y`, from
/// `Pₙ(y) = 2⁻ⁿ Σ_{k≤n/2} (−1)ᵏ C(n,k) C(2n−2k,n) y^{n−2k}`.
pub fn legendre_coefficients(n: i64) -> Vec<BigRational> {
    let mut c = vec![BigRational::zero(); n as usize + 1];
    let scale = BigRational::new(BigInt::one(), BigInt::from(2).pow(n as u32));
    for k in 0..=n / 2 {
        let sign = if k % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        c[(n - 2 * k) as usize] = BigRational::from(sign * binom(n, k) * binom(2 * n - 2 * k, n)) * &scale;
    }
    c
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `Pₙ(√(1+4x))²` as a polynomial in `x`: square, keep the even powers
/// `y^{2j}`, and expand `(1+4x)ʲ`.
pub fn legendre_squared_in_x(n: i64) -> Vec<BigRational> {
    let p = legendre_coefficients(n);
    let sq = poly_mul(&p, &p);
    let mut out = vec![BigRational::zero(); n as usize + 1];
    for (j, a) in sq.iter().enumerate().step_by(2) {
        let j = j / 2;
        for (i, slot) in out.iter_mut().enumerate().take(j + 1) {
            let term = binom(j as i64, i as i64) * BigInt::from(4).pow(i as u32);
            *slot += a * BigRational::from(term);
        }
    }
    debug_assert!(sq.iter().skip(1).step_by(2).all(|c| c.is_zero()));
    out
}

/// Coefficients of `Sₙ(x) = Σ_k C(2k,k)² C(n+k,2k) xᵏ`.
pub fn sn_coefficients(n: i64) -> Vec<BigRational> {
    (0..=n).map(|k| BigRational::from(central(k).pow(2) * binom(n + k, 2 * k))).collect()
}

pub fn check_lemma_3_2(n: i64) -> bool {
    legendre_squared_in_x(n) == sn_coefficients(n)
}

/// Outcome of one block of identity checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl IdentityReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

fn collect(name: &'static str, cases: Vec<(String, bool)>) -> IdentityReport {
    let n = cases.len();
    IdentityReport { name, cases: n, failures: cases.into_iter().filter(|c| !c.1).map(|c| c.0).collect() }
}

/// First lemma on the grid `0 ≤ m, n ≤ bound`, in parallel.
pub fn lemma_3_1_grid(bound: i64) -> IdentityReport {
    let cells: Vec<_> = (0..=bound).flat_map(|m| (0..=bound).map(move |n| (m, n))).collect();
    let res = cells.into_par_iter().map(|(m, n)| (format!("m={m} n={n}"), check_lemma_3_1(m, n))).collect();
    collect("lemma 3.1", res)
}

pub fn lemma_4_1_range(bound: i64) -> IdentityReport {
    let res = (0..=bound).into_par_iter().map(|m| (format!("m={m}"), check_lemma_4_1(m))).collect();
    collect("lemma 4.1", res)
}

pub fn lemma_3_2_range(bound: i64) -> IdentityReport {
    let res = (0..=bound).into_par_iter().map(|n| (format!("n={n}"), check_lemma_3_2(n))).collect();
    collect("lemma 3.2", res)
}
