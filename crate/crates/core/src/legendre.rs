//! Legendre polynomials `Pₙ` and the companion sums `Sₙ` over finite rings.

use crate::arith::{floor_quarter, FieldElem, PRational, Residue, Zmod};
use crate::binomials::{coefficients, series_sum, Series};
use crate::arith::ValRing;
use crate::error::{Error, Result};

/// Three-term recurrence `(k+1)P_{k+1} = (2k+1)xP_k − kP_{k−1}` with the
/// inverses `1/(k+1)` precomputed for one ring.
#[derive(Clone, Debug)]
pub struct Recurrence<R> {
    n: u64,
    inv: Vec<R>,
}

impl<R: Residue> Recurrence<R> {
    /// Prepares evaluation of `Pₙ` in the ring of `sample`.
    pub fn new(n: u64, sample: R) -> Result<Self> {
        let inv = (1..=n.max(1))
            .map(|k| sample.embed(k as i128).inverse())
            .collect::<Result<Vec<_>>>()
            .map_err(|_| Error::IndexTooLarge { n, p: characteristic_hint(&sample) })?;
        Ok(Recurrence { n, inv })
    }

    pub fn degree(&self) -> u64 {
        self.n
    }

    pub fn eval(&self, x: R) -> R {
        let mut prev = x.one();
        if self.n == 0 {
            return prev;
        }
        let mut cur = x;
        for k in 1..self.n {
            let next = (x.embed(2 * k as i128 + 1) * x * cur - x.embed(k as i128) * prev) * self.inv[k as usize];
            prev = cur;
            cur = next;
        }
        cur
    }
}

// Smallest k ≥ 1 with k not invertible, i.e. the characteristic's least prime factor.
fn characteristic_hint<R: Residue>(sample: &R) -> u64 {
    (2u64..).find(|&k| sample.embed(k as i128).inverse().is_err()).unwrap_or(0)
}

/// `Pₙ(x)` in the ring of `x`; fails when some `k ≤ n` is not invertible.
pub fn eval_pn<R: Residue>(n: u64, x: R) -> Result<R> {
    Ok(Recurrence::new(n, x)?.eval(x))
}

/// `Pₙ(x) mod p²` at a rational p-integer `x`.
pub fn eval_pn_mod_p2(n: u64, x: PRational, p: u64) -> Result<u64> {
    let p2 = p.checked_mul(p).ok_or(Error::PrimeTooLarge { p, what: "mod p^2 evaluation" })?;
    if n >= p {
        return Err(Error::IndexTooLarge { n, p });
    }
    let xm = Zmod::new(x.residue(p2)? as i128, p2);
    Ok(eval_pn(n, xm)?.value())
}

/// `Pₙ(t) = Σ_k C(n,k) C(n+k,k) ((t−1)/2)ᵏ`, an evaluation route independent
/// of the recurrence.
pub fn eval_pn_by_sum<R: Residue>(n: u64, t: R) -> Result<R> {
    let y = (t - t.one()).checked_div(&t.embed(2))?;
    let mut coeff = t.one();
    let mut power = t.one();
    let mut acc = t.one();
    for k in 0..n {
        let d = t.embed((k as i128 + 1) * (k as i128 + 1));
        let d = d.inverse().map_err(|_| Error::IndexTooLarge { n, p: characteristic_hint(&t) })?;
        coeff = coeff * t.embed((n - k) as i128) * t.embed((n + k + 1) as i128) * d;
        power = power * y;
        acc = acc + coeff * power;
    }
    Ok(acc)
}

/// `Sₙ(x) = Σ_{k=0}^{n} C(n,k) C(n+k,k) C(2k,k) xᵏ`.
pub fn eval_sn<R: Residue>(n: u64, x: R) -> Result<R> {
    let mut coeff = x.one();
    let mut power = x.one();
    let mut acc = x.one();
    for k in 0..n {
        let k1 = k as i128 + 1;
        let d = x
            .embed(k1 * k1 * k1)
            .inverse()
            .map_err(|_| Error::IndexTooLarge { n, p: characteristic_hint(&x) })?;
        coeff = coeff * x.embed((n - k) as i128) * x.embed((n + k + 1) as i128) * x.embed(2 * (2 * k as i128 + 1)) * d;
        power = power * x;
        acc = acc + coeff * power;
    }
    Ok(acc)
}

/// `P_{[p/4]}(t)` by the recurrence, cross-checked against the truncated sum
/// `Σ_{k≤[p/4]} C(4k,2k) C(2k,k) ((1−t)/128)ᵏ`.
pub fn eval_p_floor_quarter(t: FieldElem) -> Result<FieldElem> {
    let p = t.p();
    let q = floor_quarter(p);
    let by_recurrence = eval_pn(q, t)?;
    let ring = ValRing::new(p)?;
    let coeffs = coefficients(p, Series::CentralQuartic, q)?;
    let ratio = (t.one() - t).checked_div(&t.embed(128))?;
    let by_sum = series_sum(&ring, &coeffs, ratio);
    if by_sum != by_recurrence {
        return Err(Error::RouteMismatch(format!(
            "P_[p/4]({t}) mod {p}: recurrence {by_recurrence}, truncated sum {by_sum}"
        )));
    }
    Ok(by_recurrence)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{sqrt_in_field, FieldDesc};
    use rand::{Rng, SeedableRng};

    fn fe(v: i128, p: u64) -> FieldElem {
        FieldElem::new(v, FieldDesc::base(p).unwrap())
    }

    #[test]
    fn base_cases_and_small_values() {
        let x = fe(5, 101);
        assert_eq!(eval_pn(0, x).unwrap(), x.one());
        assert_eq!(eval_pn(1, x).unwrap(), x);
        assert_eq!(eval_pn(2, fe(3, 101)).unwrap(), fe(13, 101));
        // P_4(0) = 3/8
        let expected = fe(3, 101).checked_div(&fe(8, 101)).unwrap();
        assert_eq!(eval_pn(4, fe(0, 101)).unwrap(), expected);
    }

    #[test]
    fn index_too_large() {
        assert!(matches!(eval_pn(7, fe(2, 7)), Err(Error::IndexTooLarge { n: 7, p: 7 })));
        assert!(matches!(eval_pn_mod_p2(5, PRational::int(3), 5), Err(Error::IndexTooLarge { .. })));
    }

    #[test]
    fn mod_p2_values() {
        assert_eq!(eval_pn_mod_p2(1, PRational::int(3), 7), Ok(3));
        assert_eq!(eval_pn_mod_p2(2, PRational::int(3), 7), Ok(13));
        assert_eq!(eval_pn_mod_p2(3, PRational::int(3), 5), Ok(13));
    }

    #[test]
    fn sn_small() {
        let x = fe(9, 31);
        assert_eq!(eval_sn(0, x).unwrap(), x.one());
        assert_eq!(eval_sn(1, x).unwrap(), fe(1 + 36, 31));
        // S_1((x²−1)/4) = P_1(x)²
        for v in 0..31 {
            let x = fe(v, 31);
            let arg = (x * x - x.one()).checked_div(&x.embed(4)).unwrap();
            assert_eq!(eval_sn(1, arg).unwrap(), x * x);
        }
    }

    #[test]
    fn floor_quarter_examples() {
        for p in [5u64, 7, 11, 13, 29, 31, 101] {
            let q = floor_quarter(p);
            let minus_one = eval_p_floor_quarter(fe(-1, p)).unwrap();
            assert_eq!(minus_one, fe(crate::arith::sign_pow(q) as i128, p));
            assert_eq!(eval_p_floor_quarter(fe(1, p)).unwrap(), fe(1, p));
        }
        assert_eq!(eval_p_floor_quarter(fe(0, 11)).unwrap(), fe(5, 11));
    }

    #[test]
    fn parity() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for p in [7u64, 13, 97, 1009] {
            for _ in 0..20 {
                let x = sqrt_in_field(rng.random_range(0..p) as i128, p).unwrap();
                let n = rng.random_range(0..p);
                let s = if n % 2 == 0 { x.one() } else { -x.one() };
                assert_eq!(eval_pn(n, -x).unwrap(), s * eval_pn(n, x).unwrap());
            }
        }
    }

    #[test]
    fn recurrence_matches_sum_route() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let primes = crate::primes::primes_in(3, 2000);
        for _ in 0..100 {
            let p = primes[rng.random_range(0..primes.len())];
            let n = rng.random_range(0..p);
            let x = sqrt_in_field(rng.random_range(0..p) as i128, p).unwrap() + fe(rng.random_range(0..p) as i128, p);
            assert_eq!(eval_pn(n, x).unwrap(), eval_pn_by_sum(n, x).unwrap(), "p={p} n={n}");
        }
        // And over Z/p²Z below the characteristic.
        for p in [5u64, 11, 13] {
            let p2 = p * p;
            for v in 0..p2 {
                let x = Zmod::new(v as i128, p2);
                for n in 0..p {
                    assert_eq!(eval_pn(n, x).unwrap(), eval_pn_by_sum(n, x).unwrap());
                }
            }
        }
    }
}
