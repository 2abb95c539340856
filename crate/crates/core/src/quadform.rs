//! Representations of primes by `x² + dy²` and their sign normalizations.

use std::fmt;

use num_integer::Roots;
use serde::Serialize;

use crate::arith::modular::{inv_mod, mul_mod, reduce};
use crate::arith::{is_prime, legendre_symbol, sqrt_mod};
use crate::error::{Error, Result};

/// Side conditions used to pin down the signs of a representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Condition {
    XOneMod4,
    XOneMod3,
    YOneMod4,
    /// `y` even; the sign `(−1)^{y/2}` does not depend on the sign of `y`.
    YEven,
    /// `x` odd, swapping coordinates when `d = 1`.
    XOdd,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::XOneMod4 => "x = 1 mod 4",
            Condition::XOneMod3 => "x = 1 mod 3",
            Condition::YOneMod4 => "y = 1 mod 4",
            Condition::YEven => "y even",
            Condition::XOdd => "x odd",
        })
    }
}

/// `p = x² + dy²`, or `4p = x² + dy²` when `scaled_4p` is set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuadRep {
    pub x: i64,
    pub y: i64,
    pub d: u64,
    pub scaled_4p: bool,
    pub normalized_by: Vec<Condition>,
}

impl QuadRep {
    /// The represented integer `x² + dy²`.
    pub fn value(&self) -> u64 {
        (self.x as i128 * self.x as i128 + self.d as i128 * self.y as i128 * self.y as i128) as u64
    }
}

/// Cornacchia's algorithm for `p = x² + dy²`, returning `x, y ≥ 0`.
///
/// For `d = 1` the odd coordinate comes first; `d = 4` is solved through `d = 1`.
pub fn represent(p: u64, d: u64) -> Option<QuadRep> {
    if d == 0 || p < 3 || p.is_multiple_of(2) || d.is_multiple_of(p) || !is_prime(p) {
        return None;
    }
    if d == 4 {
        let r = represent(p, 1)?;
        return Some(rep(r.x, r.y / 2, 4));
    }
    let r0 = sqrt_mod(reduce(-(d as i128), p), p)?;
    let (mut a, mut b) = (p, r0);
    let limit = p.sqrt();
    while b > limit {
        (a, b) = (b, a % b);
    }
    let rest = p - b * b;
    if !rest.is_multiple_of(d) {
        return None;
    }
    let y2 = rest / d;
    let y = y2.sqrt();
    if y * y != y2 {
        return None;
    }
    let (x, y) = if d == 1 && b % 2 == 0 { (y, b) } else { (b, y) };
    let out = rep(x as i64, y as i64, d);
    debug_assert_eq!(out.value(), p);
    Some(out)
}

/// Exhaustive search over `0 ≤ y ≤ √(p/d)`; the oracle for [`represent`].
pub fn represent_exhaustive(p: u64, d: u64) -> Option<QuadRep> {
    let (x, y) = solve_form(p, 1, d)?;
    let (x, y) = if d == 1 && x % 2 == 0 { (y, x) } else { (x, y) };
    Some(rep(x, y, d))
}

/// Some `x, y ≥ 0` with `n = ax² + by²` by exhaustive search over `y`.
pub fn solve_form(n: u64, a: u64, b: u64) -> Option<(i64, i64)> {
    let mut y = 0u64;
    while b * y * y <= n {
        let rest = n - b * y * y;
        if rest.is_multiple_of(a) {
            let x2 = rest / a;
            let x = x2.sqrt();
            if x * x == x2 {
                return Some((x as i64, y as i64));
            }
        }
        y += 1;
    }
    None
}

/// `4p = u² + dv²` by exhaustive search.
pub fn represent_4p(p: u64, d: u64) -> Option<QuadRep> {
    let (u, v) = solve_form(4 * p, 1, d)?;
    Some(QuadRep { x: u, y: v, d, scaled_4p: true, normalized_by: Vec::new() })
}

fn rep(x: i64, y: i64, d: u64) -> QuadRep {
    QuadRep { x, y, d, scaled_4p: false, normalized_by: Vec::new() }
}

/// Flips signs (or swaps, for `d = 1`) until `cond` holds.
pub fn normalize(mut rep: QuadRep, cond: Condition) -> Result<QuadRep> {
    let fail = |r: &QuadRep| Error::Normalization { x: r.x, y: r.y, d: r.d, condition: cond.to_string() };
    match cond {
        Condition::XOneMod4 => match rep.x.rem_euclid(4) {
            1 => {}
            3 => rep.x = -rep.x,
            _ => return Err(fail(&rep)),
        },
        Condition::XOneMod3 => match rep.x.rem_euclid(3) {
            1 => {}
            2 => rep.x = -rep.x,
            _ => return Err(fail(&rep)),
        },
        Condition::YOneMod4 => match rep.y.rem_euclid(4) {
            1 => {}
            3 => rep.y = -rep.y,
            _ => return Err(fail(&rep)),
        },
        Condition::YEven => {
            if rep.y % 2 != 0 {
                return Err(fail(&rep));
            }
        }
        Condition::XOdd => {
            if rep.x % 2 == 0 {
                if rep.d == 1 && rep.y % 2 != 0 {
                    std::mem::swap(&mut rep.x, &mut rep.y);
                } else {
                    return Err(fail(&rep));
                }
            }
        }
    }
    rep.normalized_by.push(cond);
    Ok(rep)
}

/// `represent` followed by each normalization in turn.
pub fn represent_normalized(p: u64, d: u64, conds: &[Condition]) -> Result<QuadRep> {
    let mut r = represent(p, d).ok_or_else(|| Error::Inapplicable(format!("{p} is not of the form x^2+{d}y^2")))?;
    for &c in conds {
        r = normalize(r, c)?;
    }
    Ok(r)
}

/// The predicted residue of `base^{[p/4]} mod p` for `base ∈ {3, 7}`, read off
/// the normalized representation `p = A² + 3B²` or `p = C² + 7D²`.
///
/// * base 3, `p ≡ 1 mod 12`, `A ≡ 1 mod 4`: `(A/3)`.
/// * base 3, `p ≡ 7 mod 12`, `B ≡ 1 mod 4`: `(A/3)·B/A`.
/// * base 7, `p ≡ 1, 9, 25 mod 28`, `C ≡ 1 mod 4`: `(C/7)`.
/// * base 7, `p ≡ 11, 15, 23 mod 28`, `D ≡ 1 mod 4`: `−(C/7)·D/C`.
pub fn unit_power_congruence(p: u64, base: u64) -> Result<u64> {
    if base != 3 && base != 7 {
        return Err(Error::Inapplicable(format!("no unit-power rule for base {base}")));
    }
    if p.is_multiple_of(base) || p < 5 {
        return Err(Error::Inapplicable(format!("{p} divides the base {base}")));
    }
    let sym = |a: i64| -> Result<i64> { Ok(legendre_symbol(a as i128, base)? as i64) };
    let ratio = |num: i64, den: i64| -> Result<u64> { Ok(mul_mod(reduce(num as i128, p), inv_mod(den as i128, p)?, p)) };
    let r = match (base, p % 4) {
        (3, 1) if p % 3 == 1 => {
            let r = represent_normalized(p, 3, &[Condition::XOneMod4])?;
            reduce(sym(r.x)? as i128, p)
        }
        (3, 3) if p % 3 == 1 => {
            let r = represent_normalized(p, 3, &[Condition::YOneMod4])?;
            mul_mod(reduce(sym(r.x)? as i128, p), ratio(r.y, r.x)?, p)
        }
        (7, 1) if matches!(p % 7, 1 | 2 | 4) => {
            let r = represent_normalized(p, 7, &[Condition::XOneMod4])?;
            reduce(sym(r.x)? as i128, p)
        }
        (7, 3) if matches!(p % 7, 1 | 2 | 4) => {
            let r = represent_normalized(p, 7, &[Condition::YOneMod4])?;
            mul_mod(reduce(-sym(r.x)? as i128, p), ratio(r.y, r.x)?, p)
        }
        _ => return Err(Error::Inapplicable(format!("{p} outside the classes of the base-{base} rule"))),
    };
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{floor_quarter, pow_mod};
    use crate::primes::primes_in;

    #[test]
    fn examples() {
        assert_eq!(represent(29, 7).map(|r| (r.x, r.y)), Some((1, 2)));
        assert_eq!(represent(11, 7).map(|r| (r.x, r.y)), Some((2, 1)));
        assert_eq!(represent(13, 7), None);
        assert_eq!(represent(13, 4).map(|r| (r.x, r.y)), Some((3, 1)));
    }

    #[test]
    fn normalization_examples() {
        let r = represent_normalized(13, 4, &[Condition::XOneMod4]).unwrap();
        assert_eq!((r.x, r.y), (-3, 1));
        let r = represent_normalized(7, 3, &[Condition::XOneMod3]).unwrap();
        assert_eq!(r.x, -2);
        let r = represent_normalized(5, 4, &[Condition::XOneMod4]).unwrap();
        assert_eq!(r.x, 1);
        assert!(matches!(normalize(rep(2, 1, 7), Condition::XOneMod4), Err(Error::Normalization { .. })));
        let r = normalize(rep(2, 3, 1), Condition::XOdd).unwrap();
        assert_eq!((r.x, r.y), (3, 2));
    }

    #[test]
    fn cornacchia_matches_exhaustive_search() {
        for p in primes_in(3, 10_000) {
            for d in [1u64, 2, 3, 4, 5, 6, 7, 9, 10, 13, 18, 22, 25, 37, 58] {
                if d % p == 0 {
                    continue;
                }
                let fast = represent(p, d);
                let slow = represent_exhaustive(p, d);
                assert_eq!(fast.is_some(), slow.is_some(), "p={p} d={d}");
                if let (Some(f), Some(s)) = (fast, slow) {
                    assert_eq!(f.value(), p);
                    assert_eq!((f.x.abs(), f.y.abs()), (s.x.abs(), s.y.abs()), "p={p} d={d}");
                }
            }
        }
    }

    #[test]
    fn genus_classes() {
        for p in primes_in(11, 10_000) {
            assert_eq!(represent(p, 7).is_some(), matches!(p % 7, 1 | 2 | 4), "p={p}");
            assert_eq!(represent(p, 10).is_some(), matches!(p % 40, 1 | 9 | 11 | 19), "p={p}");
            assert_eq!(represent(p, 2).is_some(), matches!(p % 8, 1 | 3), "p={p}");
        }
    }

    #[test]
    fn unit_power_rules_hold() {
        assert_eq!(unit_power_congruence(13, 3), Ok(1));
        assert_eq!(unit_power_congruence(37, 3), Ok(36));
        assert!(unit_power_congruence(7, 7).is_err());
        for p in primes_in(11, 10_000) {
            for base in [3u64, 7] {
                if let Ok(r) = unit_power_congruence(p, base) {
                    assert_eq!(pow_mod(base, floor_quarter(p), p), r, "p={p} base={base}");
                }
            }
        }
    }
}
