use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::modular::{add_mod, inv_mod, mul_mod, reduce, sub_mod};
use super::residue::Residue;
use crate::error::{Error, Result};

/// An element of `Z/mZ`; used with `m = p` and `m = p²`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Zmod {
    v: u64,
    m: u64,
}

impl Zmod {
    pub fn new(v: i128, m: u64) -> Self {
        assert!(m > 0, "modulus must be positive");
        Zmod { v: reduce(v, m), m }
    }

    #[inline]
    pub fn value(&self) -> u64 {
        self.v
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.m
    }

    /// Symmetric representative in `(-m/2, m/2]`.
    pub fn signed(&self) -> i128 {
        if self.v > self.m / 2 {
            self.v as i128 - self.m as i128
        } else {
            self.v as i128
        }
    }

    /// Reduces into `Z/m'Z` for a divisor `m'` of the modulus.
    pub fn reduce_to(&self, m: u64) -> Zmod {
        debug_assert_eq!(self.m % m, 0, "{m} does not divide {}", self.m);
        Zmod { v: self.v % m, m }
    }

    fn check(&self, rhs: &Zmod) {
        assert_eq!(self.m, rhs.m, "mixed moduli {} and {}", self.m, rhs.m);
    }
}

impl fmt::Debug for Zmod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.v, self.m)
    }
}

impl fmt::Display for Zmod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl Add for Zmod {
    type Output = Zmod;
    fn add(self, rhs: Zmod) -> Zmod {
        self.check(&rhs);
        Zmod { v: add_mod(self.v, rhs.v, self.m), m: self.m }
    }
}

impl Sub for Zmod {
    type Output = Zmod;
    fn sub(self, rhs: Zmod) -> Zmod {
        self.check(&rhs);
        Zmod { v: sub_mod(self.v, rhs.v, self.m), m: self.m }
    }
}

impl Mul for Zmod {
    type Output = Zmod;
    fn mul(self, rhs: Zmod) -> Zmod {
        self.check(&rhs);
        Zmod { v: mul_mod(self.v, rhs.v, self.m), m: self.m }
    }
}

impl Neg for Zmod {
    type Output = Zmod;
    fn neg(self) -> Zmod {
        Zmod { v: sub_mod(0, self.v, self.m), m: self.m }
    }
}

impl Residue for Zmod {
    fn embed(&self, v: i128) -> Self {
        Zmod::new(v, self.m)
    }

    fn inverse(&self) -> Result<Self> {
        if self.v == 0 {
            return Err(Error::DivisionByZero("Zmod::inverse"));
        }
        Ok(Zmod { v: inv_mod(self.v as i128, self.m)?, m: self.m })
    }

    fn is_zero(&self) -> bool {
        self.v == 0
    }
}
