//! The prime field `F_p` and its quadratic extension `F_p(√δ)`.
//!
//! Elements carry their [`FieldDesc`]. A base-field element may be combined
//! with an element of the extension over the same prime: the base element is
//! promoted. Mixing two different primes (or two different `δ`) is a
//! programming error and panics.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};

use super::modular::{
    add_mod, inv_mod, is_prime, least_nonresidue, legendre_symbol, mul_mod, reduce, sqrt_mod, sub_mod, MAX_PRIME,
};
use super::rational::PRational;
use super::residue::Residue;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldDesc {
    p: u64,
    ext: Option<u64>,
}

impl FieldDesc {
    /// `F_p`.
    pub fn base(p: u64) -> Result<Self> {
        if p < 3 || p.is_multiple_of(2) || p >= MAX_PRIME || !is_prime(p) {
            return Err(Error::InvalidModulus(p));
        }
        Ok(FieldDesc { p, ext: None })
    }

    /// `F_p(√δ)` with `δ` the least positive quadratic non-residue.
    pub fn extension(p: u64) -> Result<Self> {
        let base = Self::base(p)?;
        Ok(FieldDesc { ext: Some(least_nonresidue(p)?), ..base })
    }

    /// `F_p(√δ)` for a caller-chosen non-residue `δ`.
    pub fn with_nonresidue(p: u64, delta: u64) -> Result<Self> {
        let base = Self::base(p)?;
        if legendre_symbol(delta as i128, p)? != -1 {
            return Err(Error::Inapplicable(format!("{delta} is not a non-residue mod {p}")));
        }
        Ok(FieldDesc { ext: Some(delta % p), ..base })
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn nonresidue(&self) -> Option<u64> {
        self.ext
    }

    fn join(self, other: FieldDesc) -> FieldDesc {
        assert_eq!(self.p, other.p, "elements of F_{} and F_{} mixed", self.p, other.p);
        match (self.ext, other.ext) {
            (Some(a), Some(b)) => {
                assert_eq!(a, b, "elements of F_p(√{a}) and F_p(√{b}) mixed");
                self
            }
            (Some(_), None) => self,
            _ => other,
        }
    }
}

/// `a + b√δ` with `0 ≤ a, b < p`; `b = 0` whenever the descriptor has no extension.
#[derive(Clone, Copy, Debug, Eq)]
pub struct FieldElem {
    a: u64,
    b: u64,
    desc: FieldDesc,
}

impl FieldElem {
    pub fn new(v: i128, desc: FieldDesc) -> Self {
        FieldElem { a: reduce(v, desc.p), b: 0, desc }
    }

    /// `a + b√δ`; fails if `b ≠ 0` and the descriptor has no extension.
    pub fn from_parts(a: i128, b: i128, desc: FieldDesc) -> Result<Self> {
        let b = reduce(b, desc.p);
        if b != 0 && desc.ext.is_none() {
            return Err(Error::Inapplicable("surd coefficient in a base-field element".into()));
        }
        Ok(FieldElem { a: reduce(a, desc.p), b, desc })
    }

    /// Embeds a rational p-integer: `num · den⁻¹ mod p`.
    pub fn lift(r: PRational, desc: FieldDesc) -> Result<Self> {
        Ok(FieldElem::new(r.residue(desc.p)? as i128, desc))
    }

    #[inline]
    pub fn desc(&self) -> FieldDesc {
        self.desc
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.desc.p
    }

    /// Rational part `a`.
    #[inline]
    pub fn re(&self) -> u64 {
        self.a
    }

    /// Coefficient `b` of `√δ`.
    #[inline]
    pub fn im(&self) -> u64 {
        self.b
    }

    /// The residue when the element lies in `F_p`.
    pub fn as_base(&self) -> Option<u64> {
        (self.b == 0).then_some(self.a)
    }

    /// Conjugation `a + b√δ ↦ a − b√δ`, which is the Frobenius map.
    pub fn conj(&self) -> Self {
        FieldElem { b: sub_mod(0, self.b, self.desc.p), ..*self }
    }

    /// The same element viewed in `F_p(√δ)` for the canonical `δ`.
    pub fn promote(&self) -> Result<Self> {
        if self.desc.ext.is_some() {
            return Ok(*self);
        }
        Ok(FieldElem { desc: FieldDesc::extension(self.desc.p)?, ..*self })
    }

    /// Norm `a² − δb²` to `F_p`.
    pub fn norm(&self) -> u64 {
        let p = self.desc.p;
        let d = self.desc.ext.unwrap_or(0);
        sub_mod(mul_mod(self.a, self.a, p), mul_mod(d, mul_mod(self.b, self.b, p), p), p)
    }

    /// Quadratic character of a base-field element, `(a/p)`.
    pub fn legendre(&self) -> Result<i8> {
        match self.as_base() {
            Some(a) => legendre_symbol(a as i128, self.desc.p),
            None => Err(Error::Inapplicable("Legendre symbol of an element outside F_p".into())),
        }
    }
}

impl PartialEq for FieldElem {
    fn eq(&self, other: &Self) -> bool {
        if self.desc.p != other.desc.p || self.a != other.a || self.b != other.b {
            return false;
        }
        self.b == 0 || self.desc.ext == other.desc.ext
    }
}

impl Hash for FieldElem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        (self.desc.p, self.a, self.b).hash(state);
        if self.b != 0 {
            self.desc.ext.hash(state);
        }
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.b, self.desc.ext) {
            (0, _) | (_, None) => write!(f, "{}", self.a),
            (b, Some(d)) => write!(f, "{}+{}√{}", self.a, b, d),
        }
    }
}

impl Add for FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: FieldElem) -> FieldElem {
        let desc = self.desc.join(rhs.desc);
        let p = desc.p;
        FieldElem { a: add_mod(self.a, rhs.a, p), b: add_mod(self.b, rhs.b, p), desc }
    }
}

impl Sub for FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: FieldElem) -> FieldElem {
        let desc = self.desc.join(rhs.desc);
        let p = desc.p;
        FieldElem { a: sub_mod(self.a, rhs.a, p), b: sub_mod(self.b, rhs.b, p), desc }
    }
}

impl Mul for FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: FieldElem) -> FieldElem {
        let desc = self.desc.join(rhs.desc);
        let p = desc.p;
        if self.b == 0 && rhs.b == 0 {
            return FieldElem { a: mul_mod(self.a, rhs.a, p), b: 0, desc };
        }
        let d = desc.ext.expect("surd coefficients imply an extension");
        let ac = mul_mod(self.a, rhs.a, p);
        let bd = mul_mod(self.b, rhs.b, p);
        let a = add_mod(ac, mul_mod(bd, d, p), p);
        let b = add_mod(mul_mod(self.a, rhs.b, p), mul_mod(self.b, rhs.a, p), p);
        FieldElem { a, b, desc }
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        let p = self.desc.p;
        FieldElem { a: sub_mod(0, self.a, p), b: sub_mod(0, self.b, p), desc: self.desc }
    }
}

impl Residue for FieldElem {
    fn embed(&self, v: i128) -> Self {
        FieldElem::new(v, self.desc)
    }

    fn inverse(&self) -> Result<Self> {
        let p = self.desc.p;
        let n = self.norm();
        if n == 0 {
            return Err(Error::DivisionByZero("FieldElem::inverse"));
        }
        let ninv = inv_mod(n as i128, p)?;
        Ok(FieldElem {
            a: mul_mod(self.a, ninv, p),
            b: mul_mod(sub_mod(0, self.b, p), ninv, p),
            desc: self.desc,
        })
    }

    fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }
}

/// A square root of `a` in `F_p` when `a` is a square, otherwise in
/// `F_p(√δ)` (`δ` the least non-residue) as `s√δ` with `a = δs²`.
///
/// The base-field root is the smaller of the two roots; in the extension the
/// coefficient `s` is likewise the smaller root of `a/δ`.
pub fn sqrt_in_field(a: i128, p: u64) -> Result<FieldElem> {
    let base = FieldDesc::base(p)?;
    let a = reduce(a, p);
    if let Some(r) = sqrt_mod(a, p) {
        return Ok(FieldElem::new(r as i128, base));
    }
    let desc = FieldDesc::extension(p)?;
    let delta = desc.ext.expect("extension descriptor");
    let ratio = mul_mod(a, inv_mod(delta as i128, p)?, p);
    let s = sqrt_mod(ratio, p).expect("quotient of two non-residues is a residue");
    FieldElem::from_parts(0, s as i128, desc)
}
