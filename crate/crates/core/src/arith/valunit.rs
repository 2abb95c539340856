//! Valuation-tracked residues `u·pᵉ` with `p ∤ u` and `u` kept modulo `p³`.
//!
//! Every value carries absolute precision at least `p³`, which is enough to
//! divide by `p` once (as binomial recurrences need) and still reduce
//! exactly modulo `p²`.

use std::fmt;

use super::modular::{add_mod, inv_mod, mul_mod, pow_mod, reduce};
use crate::error::{Error, Result};

/// `u·pᵉ`; the canonical zero has `e = None`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ValUnit {
    e: Option<u32>,
    u: u64,
}

impl ValUnit {
    pub const ZERO: ValUnit = ValUnit { e: None, u: 0 };

    /// Valuation, or `None` for zero.
    pub fn valuation(&self) -> Option<u32> {
        self.e
    }

    pub fn unit(&self) -> u64 {
        self.u
    }

    pub fn is_zero(&self) -> bool {
        self.e.is_none()
    }
}

impl fmt::Debug for ValUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.e {
            None => write!(f, "0"),
            Some(e) => write!(f, "{}·p^{}", self.u, e),
        }
    }
}

/// Arithmetic context for [`ValUnit`] at a fixed prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ValRing {
    p: u64,
    p2: u64,
    p3: u64,
}

impl ValRing {
    /// Units are stored modulo `p³`, which must fit a machine word.
    pub fn new(p: u64) -> Result<Self> {
        if p < 3 || p.is_multiple_of(2) {
            return Err(Error::InvalidModulus(p));
        }
        let p3 = p
            .checked_mul(p)
            .and_then(|p2| p2.checked_mul(p))
            .ok_or(Error::PrimeTooLarge { p, what: "mod p^3 unit arithmetic" })?;
        Ok(ValRing { p, p2: p * p, p3 })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn p2(&self) -> u64 {
        self.p2
    }

    /// Builds `u·pᵉ` from raw parts, extracting any powers of `p` from `u`.
    pub fn from_parts(&self, u: u64, e: u32) -> ValUnit {
        let v = self.from_int(u as i128);
        match v.e {
            None => ValUnit::ZERO,
            Some(k) => ValUnit { e: Some(k + e), u: v.u },
        }
    }

    /// An integer, exactly (modulo `p³` absolute precision).
    pub fn from_int(&self, n: i128) -> ValUnit {
        if n == 0 {
            return ValUnit::ZERO;
        }
        let mut n = n;
        let mut e = 0u32;
        while n % self.p as i128 == 0 {
            n /= self.p as i128;
            e += 1;
        }
        ValUnit { e: Some(e), u: reduce(n, self.p3) }
    }

    pub fn one(&self) -> ValUnit {
        ValUnit { e: Some(0), u: 1 }
    }

    pub fn mul(&self, a: ValUnit, b: ValUnit) -> ValUnit {
        match (a.e, b.e) {
            (Some(ea), Some(eb)) => ValUnit { e: Some(ea + eb), u: mul_mod(a.u, b.u, self.p3) },
            _ => ValUnit::ZERO,
        }
    }

    /// `a / b` for nonzero `b`; the valuation may go negative only if the
    /// quotient is not p-integral, which is reported as an error.
    pub fn div(&self, a: ValUnit, b: ValUnit) -> Result<ValUnit> {
        let eb = b.e.ok_or(Error::DivisionByZero("ValRing::div"))?;
        let Some(ea) = a.e else { return Ok(ValUnit::ZERO) };
        if ea < eb {
            return Err(Error::NotPIntegral { num: a.u as i128, den: b.u as i128, p: self.p });
        }
        let inv = inv_mod(b.u as i128, self.p3)?;
        Ok(ValUnit { e: Some(ea - eb), u: mul_mod(a.u, inv, self.p3) })
    }

    /// Sum, aligning to the smaller valuation and re-extracting carries.
    pub fn add(&self, a: ValUnit, b: ValUnit) -> ValUnit {
        let (Some(ea), Some(eb)) = (a.e, b.e) else {
            return if a.is_zero() { b } else { a };
        };
        let (lo, hi, e_lo, shift) = if ea <= eb { (a, b, ea, eb - ea) } else { (b, a, eb, ea - eb) };
        let scaled = if shift >= 3 { 0 } else { mul_mod(hi.u, pow_mod(self.p, shift as u64, self.p3), self.p3) };
        let mut s = add_mod(lo.u, scaled, self.p3);
        if s == 0 {
            return ValUnit::ZERO;
        }
        let mut e = e_lo;
        while s.is_multiple_of(self.p) {
            s /= self.p;
            e += 1;
        }
        ValUnit { e: Some(e), u: s }
    }

    pub fn neg(&self, a: ValUnit) -> ValUnit {
        match a.e {
            None => a,
            Some(_) => ValUnit { e: a.e, u: self.p3 - a.u },
        }
    }

    /// `u·pᵉ mod p²`.
    pub fn reduce_p2(&self, a: ValUnit) -> u64 {
        match a.e {
            Some(0) => a.u % self.p2,
            Some(1) => mul_mod(a.u % self.p, self.p, self.p2),
            _ => 0,
        }
    }

    /// `u·pᵉ mod p`.
    pub fn reduce_p(&self, a: ValUnit) -> u64 {
        match a.e {
            Some(0) => a.u % self.p,
            _ => 0,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let r = ValRing::new(7).unwrap();
        let a = r.from_parts(3, 1);
        let b = r.from_parts(5, 1);
        let ab = r.mul(a, b);
        assert_eq!((ab.valuation(), ab.unit()), (Some(2), 15));
        assert_eq!(r.reduce_p2(ab), 0);

        let s = r.add(r.from_int(1), r.from_int(6));
        assert_eq!((s.valuation(), s.unit()), (Some(1), 1));

        assert_eq!(r.reduce_p2(r.from_parts(3, 1)), 21);
    }

    #[test]
    fn division_extracts_valuation() {
        let r = ValRing::new(11).unwrap();
        let v = r.div(r.from_int(924 * 11), r.from_int(11)).unwrap();
        assert_eq!((v.valuation(), v.unit()), (Some(1), 84));
        assert!(r.div(r.from_int(3), r.from_int(11)).is_err());
        assert!(r.div(r.one(), ValUnit::ZERO).is_err());
    }

    #[test]
    fn cancellation_to_zero() {
        let r = ValRing::new(5).unwrap();
        let a = r.from_int(17);
        assert!(r.add(a, r.neg(a)).is_zero());
    }

    #[test]
    fn rejects_oversized_prime() {
        assert!(ValRing::new(3_000_017).is_err());
        assert!(ValRing::new(2_000_003).is_ok());
    }
}
