//! Exact arithmetic foundations: prime fields, the quadratic extension
//! `F_p(√δ)`, the rings `Z/pZ` and `Z/p²Z`, rational p-integers and
//! valuation-tracked residues.
//!
//! All values are immutable `Copy` data; every operation is pure.

mod field;
pub mod modular;
mod rational;
mod residue;
mod valunit;
mod zmod;

pub use field::{sqrt_in_field, FieldDesc, FieldElem};
pub use modular::{hensel_sqrt_p2, inv_mod, is_prime, legendre_symbol, pow_mod, sqrt_mod};
pub use rational::PRational;
pub use residue::Residue;
pub use valunit::{ValRing, ValUnit};
pub use zmod::Zmod;

/// `[p/4]`, written out as `(p − (p mod 4)) / 4`.
pub fn floor_quarter(p: u64) -> u64 {
    (p - p % 4) / 4
}

/// `(-1)^e` as `i64`.
pub fn sign_pow(e: u64) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}
