//! Exact verification of Legendre-polynomial congruences.
//!
//! The crate evaluates truncated binomial sums modulo `p` and `p²`, Legendre
//! polynomials over `F_p`, `F_p(√δ)` and `Z/p²Z`, cubic character sums, and
//! binary quadratic form representations, and uses them to check a registry
//! of congruence statements prime by prime. Combinatorial identities that
//! underpin the modular statements are checked exactly over the integers.

pub mod arith;
pub mod binomials;
pub mod charsum;
pub mod claims;
pub mod error;
pub mod identities;
pub mod legendre;
pub mod primes;
pub mod quadform;

pub use arith::{sqrt_in_field, FieldDesc, FieldElem, PRational, Residue, ValRing, ValUnit, Zmod};
pub use claims::{
    Claim, ClaimKind, ClaimReport, ClaimStatus, ClaimTally, Modulus, Registry, SweepConfig, SweepSummary, Verdict,
};
pub use error::{Error, Result};
pub use quadform::QuadRep;
