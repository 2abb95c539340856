//! Cubic character sums `Σ_x (f(x)/p)`, cubic transforms and point counts.

mod cm;
mod weil;

pub use cm::{cm_curve, cm_curves, CmCurve, CmShape, Expected};
pub use weil::{weil_report, WeilReport};

use std::fmt;

use crate::arith::modular::{inv_mod, mul_mod, reduce};
use crate::arith::{legendre_symbol, FieldElem, Residue};
use crate::error::{Error, Result};

/// `c₃x³ + c₂x² + c₁x + c₀` over `F_p`; `c[i]` is the coefficient of `xⁱ`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Cubic {
    p: u64,
    c: [u64; 4],
}

impl Cubic {
    /// Coefficients in ascending degree, reduced mod `p`.
    pub fn new(p: u64, c: [i128; 4]) -> Self {
        Cubic { p, c: c.map(|v| reduce(v, p)) }
    }

    /// `x³ + mx + n`.
    pub fn depressed(p: u64, m: i128, n: i128) -> Self {
        Cubic::new(p, [n, m, 0, 1])
    }

    /// Builds a cubic from base-field elements; surd coefficients are rejected.
    pub fn from_field(c: [FieldElem; 4]) -> Result<Self> {
        let p = c[0].p();
        let mut out = [0i128; 4];
        for (o, e) in out.iter_mut().zip(c) {
            *o = e
                .as_base()
                .ok_or_else(|| Error::Inapplicable(format!("coefficient {e} is not in F_{p}")))? as i128;
        }
        Ok(Cubic::new(p, out))
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> [u64; 4] {
        self.c
    }

    pub fn eval(&self, x: u64) -> u64 {
        let p = self.p;
        let mut acc = self.c[3];
        for i in (0..3).rev() {
            acc = (mul_mod(acc, x, p) + self.c[i]) % p;
        }
        acc
    }

    /// `b²c² − 4ac³ − 4b³d − 27a²d² + 18abcd` for `ax³+bx²+cx+d`, mod `p`.
    pub fn discriminant(&self) -> u64 {
        let p = self.p as i128;
        let [d, c, b, a] = self.c.map(|v| v as i128);
        let m = |x: i128, y: i128| x * y % p;
        let t = m(m(b, b), m(c, c)) - 4 * m(a, m(c, m(c, c))) - 4 * m(m(b, m(b, b)), d) - 27 * m(m(a, a), m(d, d))
            + 18 * m(m(a, b), m(c, d));
        reduce(t, self.p)
    }

    pub fn is_nonsingular(&self) -> bool {
        self.c[3] != 0 && self.discriminant() != 0
    }
}

impl fmt::Debug for Cubic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x^3+{}x^2+{}x+{} (mod {})", self.c[3], self.c[2], self.c[1], self.c[0], self.p)
    }
}

/// Legendre symbols of every residue mod `p`, one byte each.
#[derive(Clone, Debug)]
pub struct QrTable {
    p: u64,
    chi: Vec<i8>,
}

impl QrTable {
    pub fn new(p: u64) -> Result<Self> {
        legendre_symbol(1, p)?;
        let mut chi = vec![-1i8; p as usize];
        chi[0] = 0;
        for x in 1..=(p - 1) / 2 {
            chi[mul_mod(x, x, p) as usize] = 1;
        }
        Ok(QrTable { p, chi })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn chi(&self, a: u64) -> i8 {
        self.chi[(a % self.p) as usize]
    }
}

/// `Σ_{x=0}^{p−1} (f(x)/p)` as an exact integer.
///
/// Every nonsingular cubic seen here is also checked against the Weil bound;
/// see [`weil_report`].
pub fn char_sum(f: &Cubic, table: &QrTable) -> i64 {
    assert_eq!(f.p, table.p, "cubic and table over different primes");
    let s: i64 = (0..f.p).map(|x| table.chi[f.eval(x) as usize] as i64).sum();
    weil::observe(f, s);
    s
}

/// Same as [`char_sum`] with a table built on the spot.
pub fn char_sum_p(f: &Cubic) -> Result<i64> {
    Ok(char_sum(f, &QrTable::new(f.p)?))
}

/// Removes the `x²` term: returns `g(y) = f(y − s)` with `s = c₂/(3c₃)`, and `s`.
pub fn depress(f: &Cubic) -> Result<(Cubic, u64)> {
    let p = f.p;
    if p == 3 {
        return Err(Error::Inapplicable("depression needs 3 invertible mod p".into()));
    }
    if f.c[3] == 0 {
        return Err(Error::Inapplicable("leading coefficient vanishes".into()));
    }
    let s = mul_mod(f.c[2], inv_mod(3 * f.c[3] as i128, p)?, p);
    if s == 0 {
        return Ok((*f, 0));
    }
    Ok((shift(f, reduce(-(s as i128), p)), s))
}

// f(y + h), by Taylor expansion at h.
fn shift(f: &Cubic, h: u64) -> Cubic {
    let p = f.p as i128;
    let [c0, c1, c2, c3] = f.c.map(|v| v as i128);
    let h = h as i128;
    let h2 = h * h % p;
    let h3 = h2 * h % p;
    Cubic::new(
        f.p,
        [
            (c0 + c1 * h % p + c2 * h2 % p + c3 * h3 % p) % p,
            (c1 + 2 * c2 * h % p + 3 * c3 * h2 % p) % p,
            (c2 + 3 * c3 * h) % p,
            c3,
        ],
    )
}

/// Checks `Σ((x³+a²mx+a³n)/p) = (a/p)·Σ((x³+mx+n)/p)` by computing both sides.
pub fn scale_check(m: i128, n: i128, a: i128, table: &QrTable) -> bool {
    let p = table.p;
    let am = reduce(a, p) as i128;
    let lhs = char_sum(&Cubic::depressed(p, am * am % p as i128 * m, am * am % p as i128 * am % p as i128 * n), table);
    let rhs = table.chi(am as u64) as i64 * char_sum(&Cubic::depressed(p, m, n), table);
    lhs == rhs
}

/// `#E(F_p)` for `y² = f(x)`, by counting square roots of each value plus
/// the point at infinity.
pub fn count_points(f: &Cubic) -> u64 {
    let p = f.p;
    let mut roots = vec![0u8; p as usize];
    for y in 0..p {
        roots[mul_mod(y, y, p) as usize] += 1;
    }
    1 + (0..p).map(|x| roots[f.eval(x) as usize] as u64).sum::<u64>()
}

/// `Σ_{x=0}^{p−1} f(x)^{(p−1)/2}` in the field of the coefficients, for
/// cubics whose coefficients may involve `√δ`.
pub fn power_sum(c: [FieldElem; 4]) -> FieldElem {
    let p = c[0].p();
    let e = (p - 1) / 2;
    let zero = c[0].zero();
    (0..p).fold(zero, |acc, x| {
        let x = c[0].embed(x as i128);
        let v = ((c[3] * x + c[2]) * x + c[1]) * x + c[0];
        acc + v.pow(e)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{sqrt_in_field, FieldDesc};
    use rand::{Rng, SeedableRng};

    #[test]
    fn sum_examples() {
        assert_eq!(char_sum_p(&Cubic::depressed(5, -4, 0)), Ok(-2));
        assert_eq!(char_sum_p(&Cubic::depressed(7, 0, 8)), Ok(4));
        assert_eq!(char_sum_p(&Cubic::new(7, [0, 1, 0, 0])), Ok(0));
        assert_eq!(char_sum_p(&Cubic::depressed(13, -4, 0)), Ok(6));
    }

    #[test]
    fn point_counts() {
        assert_eq!(count_points(&Cubic::depressed(5, -4, 0)), 4);
        assert_eq!(count_points(&Cubic::depressed(7, 0, 8)), 12);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for p in crate::primes::primes_in(3, 400) {
            let t = QrTable::new(p).unwrap();
            for _ in 0..5 {
                let f = Cubic::new(p, [0; 4].map(|_: i128| rng.random_range(0..p) as i128));
                assert_eq!(count_points(&f) as i64, p as i64 + 1 + char_sum(&f, &t));
            }
        }
    }

    #[test]
    fn depression_examples() {
        for p in [101u64, 1009] {
            let (g, s) = depress(&Cubic::new(p, [0, 112, 21, 1])).unwrap();
            assert_eq!(g, Cubic::depressed(p, -35, -98));
            assert_eq!(s, 7);
            // 27(x³−4x²+2x) = (3x−4)³ − 30(3x−4) − 56
            let f = Cubic::new(p, [0, 2, -4, 1]);
            let t = QrTable::new(p).unwrap();
            let chi3 = t.chi(3) as i64;
            assert_eq!(char_sum(&f, &t), chi3 * char_sum(&Cubic::depressed(p, -30, -56), &t));
            let d = Cubic::depressed(p, 5, 9);
            assert_eq!(depress(&d).unwrap(), (d, 0));
        }
        assert!(depress(&Cubic::depressed(3, 1, 1)).is_err());
    }

    #[test]
    fn depression_preserves_sums() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2);
        for p in crate::primes::primes_in(5, 600) {
            let t = QrTable::new(p).unwrap();
            let mut c = [0i128; 4].map(|_| rng.random_range(0..p) as i128);
            c[3] = rng.random_range(1..p) as i128;
            let f = Cubic::new(p, c);
            let (g, _) = depress(&f).unwrap();
            assert_eq!(g.coeffs()[2], 0);
            assert_eq!(char_sum(&f, &t), char_sum(&g, &t));
        }
    }

    #[test]
    fn scaling_identity() {
        let t = QrTable::new(7).unwrap();
        assert!(scale_check(-35, -98, 1, &t));
        assert!(scale_check(-35, -98, 0, &t));
        // x³−35x−98 at a = −7: Σ((7x³−5x+2)/p) = (−1/p)·Σ((x³−35x−98)/p)
        for p in crate::primes::primes_in(11, 300) {
            let t = QrTable::new(p).unwrap();
            assert!(scale_check(-35, -98, -7, &t));
            let lhs = char_sum(&Cubic::new(p, [2, -5, 0, 7]), &t);
            assert_eq!(lhs, t.chi(p - 1) as i64 * char_sum(&Cubic::depressed(p, -35, -98), &t));
        }
    }

    #[test]
    fn discriminants() {
        assert_eq!(Cubic::depressed(101, -3, -2).discriminant(), 0);
        assert!(Cubic::depressed(101, -4, 0).is_nonsingular());
        // −4m³ − 27n² for x³ + mx + n
        let f = Cubic::depressed(1009, 5, 7);
        assert_eq!(f.discriminant(), reduce(-4 * 125 - 27 * 49, 1009));
    }

    #[test]
    fn power_sum_matches_char_sum_on_base_field() {
        let p = 61;
        let desc = FieldDesc::base(p).unwrap();
        let c = [3i128, -7, 4, 1].map(|v| FieldElem::new(v, desc));
        let s = char_sum_p(&Cubic::new(p, [3, -7, 4, 1])).unwrap();
        assert_eq!(power_sum(c), FieldElem::new(s as i128, desc));
        // In the extension the sum lands in F_p(√δ) in general.
        let r = sqrt_in_field(2, 61).unwrap();
        let _ = power_sum([r, r, FieldElem::new(4, desc), FieldElem::new(1, desc)]);
    }
}
