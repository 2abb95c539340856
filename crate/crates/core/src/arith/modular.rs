//! Word-sized modular primitives: reduction, exponentiation, inverses,
//! quadratic residuosity and square roots modulo an odd prime.

use crate::error::{Error, Result};

/// Largest prime accepted anywhere in the crate.
pub const MAX_PRIME: u64 = 1 << 61;

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

#[inline]
pub fn add_mod(a: u64, b: u64, m: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % m as u128) as u64
}

#[inline]
pub fn sub_mod(a: u64, b: u64, m: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        m - (b - a)
    }
}

/// Canonical representative of `a` in `[0, m)`.
#[inline]
pub fn reduce(a: i128, m: u64) -> u64 {
    a.rem_euclid(m as i128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

fn check_odd_modulus(p: u64) -> Result<()> {
    if p < 3 || p.is_multiple_of(2) || p >= MAX_PRIME {
        return Err(Error::InvalidModulus(p));
    }
    Ok(())
}

/// Legendre symbol `(a/p)` computed through the Jacobi reciprocity chain.
pub fn legendre_symbol(a: i128, p: u64) -> Result<i8> {
    check_odd_modulus(p)?;
    let mut a = reduce(a, p);
    let mut n = p;
    let mut sign = 1i8;
    while a != 0 {
        while a.is_multiple_of(2) {
            a /= 2;
            if matches!(n % 8, 3 | 5) {
                sign = -sign;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            sign = -sign;
        }
        a %= n;
    }
    Ok(if n == 1 { sign } else { 0 })
}

/// Inverse of `a` modulo `m` by the extended Euclidean algorithm.
pub fn inv_mod(a: i128, m: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::DivisionByZero("inv_mod"));
    }
    let (mut r0, mut r1) = (m as i128, reduce(a, m) as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    if r0 != 1 {
        return Err(Error::NotInvertible { a, m });
    }
    Ok(reduce(s0, m))
}

/// Least positive quadratic non-residue modulo the odd prime `p`.
pub fn least_nonresidue(p: u64) -> Result<u64> {
    check_odd_modulus(p)?;
    (2..p)
        .find(|&d| legendre_symbol(d as i128, p) == Ok(-1))
        .ok_or(Error::InvalidModulus(p))
}

/// Square root of a quadratic residue `a` modulo `p` (Tonelli–Shanks),
/// returning the smaller of the two roots. `None` for non-residues.
pub fn sqrt_mod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return Some(0);
    }
    if legendre_symbol(a as i128, p).ok()? != 1 {
        return None;
    }
    let r = if p % 4 == 3 {
        pow_mod(a, (p + 1) / 4, p)
    } else {
        tonelli_shanks(a, p)
    };
    Some(r.min(p - r))
}

fn tonelli_shanks(a: u64, p: u64) -> u64 {
    let mut q = p - 1;
    let mut s = 0u32;
    while q.is_multiple_of(2) {
        q /= 2;
        s += 1;
    }
    let z = least_nonresidue(p).expect("odd prime has a non-residue");
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, q.div_ceil(2), p);
    while t != 1 {
        let mut i = 0u32;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mul_mod(t2, t2, p);
            i += 1;
        }
        let b = pow_mod(c, 1u64 << (m - i - 1), p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    r
}

/// Lifts a root `r` of `x^2 = a (mod p)` to a root modulo `p^2`.
/// Requires `p ∤ a`.
pub fn hensel_sqrt_p2(a: u64, r: u64, p: u64) -> Result<u64> {
    let p2 = p * p;
    let a = a % p2;
    if a.is_multiple_of(p) {
        return Err(Error::Inapplicable(format!(
            "Hensel lift of a square root of {a}, divisible by {p}"
        )));
    }
    // r' = r - (r^2 - a) / (2r)
    let f = sub_mod(mul_mod(r, r, p2), a, p2);
    let inv2r = inv_mod(2 * r as i128, p2)?;
    Ok(sub_mod(r % p2, mul_mod(f, inv2r, p2), p2))
}

/// Deterministic Miller–Rabin for 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for sp in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(sp) {
            return n == sp;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
