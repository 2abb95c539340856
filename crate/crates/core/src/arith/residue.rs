use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::Result;

/// A finite commutative ring element that knows its own ring.
///
/// Implemented by [`Zmod`](super::Zmod) (the rings `Z/pZ` and `Z/p²Z`) and by
/// [`FieldElem`](super::FieldElem) (`F_p` and `F_p(√δ)`), so that polynomial
/// and series evaluation can be written once.
pub trait Residue:
    Copy + PartialEq + Debug + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    /// The integer `v` viewed in the same ring as `self`.
    fn embed(&self, v: i128) -> Self;

    fn inverse(&self) -> Result<Self>;

    fn is_zero(&self) -> bool;

    fn zero(&self) -> Self {
        self.embed(0)
    }

    fn one(&self) -> Self {
        self.embed(1)
    }

    fn pow(&self, mut exp: u64) -> Self {
        let mut base = *self;
        let mut acc = self.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            exp >>= 1;
        }
        acc
    }

    fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(*self * rhs.inverse()?)
    }
}
