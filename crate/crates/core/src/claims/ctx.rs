//! Per-prime evaluation helpers shared by the claim recipes.

use std::cell::OnceCell;

use crate::arith::{
    floor_quarter, hensel_sqrt_p2, legendre_symbol, sign_pow, sqrt_in_field, sqrt_mod, FieldDesc, FieldElem,
    PRational, Residue, ValRing, ValUnit, Zmod,
};
use crate::binomials::{coefficients, series_sum, Series};
use crate::charsum::{char_sum, Cubic, QrTable};
use crate::error::{Error, Result};
use crate::legendre::eval_pn;
use crate::quadform::{represent_normalized, Condition, QuadRep};

use super::Modulus;

/// One comparison made while checking a claim at a prime.
#[derive(Clone, Debug)]
pub(crate) struct Check {
    pub lhs: String,
    pub rhs: String,
    pub modulus: Modulus,
    pub ok: bool,
    pub what: String,
}

/// Collects the comparisons for one `(claim, p)` evaluation.
#[derive(Debug)]
pub(crate) struct Checks {
    pub case: String,
    pub list: Vec<Check>,
}

impl Checks {
    pub fn new(case: impl Into<String>) -> Self {
        Checks { case: case.into(), list: Vec::new() }
    }

    fn push(&mut self, what: &str, lhs: String, rhs: String, modulus: Modulus, ok: bool) {
        self.list.push(Check { lhs, rhs, modulus, ok, what: what.to_string() });
    }

    /// Residues modulo `p²`, compared as such.
    pub fn p2(&mut self, ctx: &PrimeCtx, what: &str, lhs: u64, rhs: u64) {
        let (l, r) = (lhs % ctx.p2, rhs % ctx.p2);
        self.push(what, l.to_string(), r.to_string(), Modulus::P2, l == r);
    }

    /// Residues compared modulo `p` only.
    pub fn p(&mut self, ctx: &PrimeCtx, what: &str, lhs: u64, rhs: u64) {
        let (l, r) = (lhs % ctx.p, rhs % ctx.p);
        self.push(what, l.to_string(), r.to_string(), Modulus::P, l == r);
    }

    pub fn field(&mut self, what: &str, lhs: FieldElem, rhs: FieldElem) {
        self.push(what, lhs.to_string(), rhs.to_string(), Modulus::P, lhs == rhs);
    }

    pub fn exact(&mut self, what: &str, lhs: i64, rhs: i64) {
        self.push(what, lhs.to_string(), rhs.to_string(), Modulus::Exact, lhs == rhs);
    }

    /// Every pair of the listed forms agrees.
    pub fn chain(&mut self, forms: &[(&str, FieldElem)]) {
        for (i, a) in forms.iter().enumerate() {
            for b in &forms[i + 1..] {
                self.field(&format!("{} = {}", a.0, b.0), a.1, b.1);
            }
        }
    }

    /// Each form against `rhs`, then every pair of forms.
    pub fn chain_to(&mut self, forms: &[(&str, FieldElem)], rhs: FieldElem) {
        for f in forms {
            self.field(&format!("{} = rhs", f.0), f.1, rhs);
        }
        self.chain(forms);
    }

    pub fn all_ok(&self) -> bool {
        self.list.iter().all(|c| c.ok)
    }
}

/// Everything a recipe needs at one prime: `n = (p−1)/2`, `q = [p/4]`,
/// a residue table, and lazily built coefficient lists.
pub(crate) struct PrimeCtx {
    pub p: u64,
    pub p2: u64,
    pub n: u64,
    pub q: u64,
    pub base: FieldDesc,
    pub ring: ValRing,
    table: OnceCell<QrTable>,
    cubes: OnceCell<Vec<ValUnit>>,
    c2c4: OnceCell<Vec<ValUnit>>,
    c2sq_c4: OnceCell<Vec<ValUnit>>,
    /// `Σ((x³+mx+n)/p)` and `Σ(x³+mx+n)^{(p−1)/2}` for every `(m, n)`, row-major in `m`.
    pub depressed_sums: OnceCell<(Vec<i64>, Vec<FieldElem>)>,
}

impl PrimeCtx {
    pub fn new(p: u64) -> Result<Self> {
        let base = FieldDesc::base(p)?;
        let ring = ValRing::new(p)?;
        Ok(PrimeCtx {
            p,
            p2: p * p,
            n: (p - 1) / 2,
            q: floor_quarter(p),
            base,
            ring,
            table: OnceCell::new(),
            cubes: OnceCell::new(),
            c2c4: OnceCell::new(),
            c2sq_c4: OnceCell::new(),
            depressed_sums: OnceCell::new(),
        })
    }

    pub fn table(&self) -> &QrTable {
        self.table.get_or_init(|| QrTable::new(self.p).expect("validated prime"))
    }

    fn coeffs<'a>(&self, cell: &'a OnceCell<Vec<ValUnit>>, series: Series) -> Result<&'a [ValUnit]> {
        if cell.get().is_none() {
            let _ = cell.set(coefficients(self.p, series, self.p - 1)?);
        }
        Ok(cell.get().expect("just set"))
    }

    pub fn fe(&self, v: i128) -> FieldElem {
        FieldElem::new(v, self.base)
    }

    pub fn rat(&self, num: i128, den: i128) -> Result<FieldElem> {
        FieldElem::lift(PRational::new(num, den), self.base)
    }

    pub fn zp2(&self, v: i128) -> Zmod {
        Zmod::new(v, self.p2)
    }

    /// `num/den mod p²`.
    pub fn rat_p2(&self, num: i128, den: i128) -> Result<Zmod> {
        Ok(self.zp2(PRational::new(num, den).residue(self.p2)? as i128))
    }

    pub fn sym(&self, a: i128) -> Result<i64> {
        Ok(legendre_symbol(a, self.p)? as i64)
    }

    /// `(−1)^e` as a field element.
    pub fn sign(&self, e: u64) -> FieldElem {
        self.fe(sign_pow(e) as i128)
    }

    /// `√a` in `F_p` or `F_p(√δ)`, negated when `flip`.
    pub fn sqrt(&self, a: i128, flip: bool) -> Result<FieldElem> {
        let r = sqrt_in_field(a, self.p)?;
        Ok(if flip { -r } else { r })
    }

    /// A square root of `a mod p²` lifted from `F_p`, when `a` is a nonzero square mod `p`.
    pub fn sqrt_p2(&self, a: Zmod, flip: bool) -> Option<Zmod> {
        let a = a.value();
        let r = sqrt_mod(a % self.p, self.p).filter(|&r| r != 0)?;
        let lifted = hensel_sqrt_p2(a, r, self.p).ok()?;
        let z = self.zp2(lifted as i128);
        Some(if flip { -z } else { z })
    }

    /// `√v` for a base-field `v`.
    pub fn sqrt_of(&self, v: FieldElem, flip: bool) -> Result<FieldElem> {
        let v = strict(v.as_base().ok_or_else(|| Error::Inapplicable(format!("{v} is not in F_p"))))?;
        self.sqrt(v as i128, flip)
    }

    /// `C(4k,2k)C(2k,k) mod p` for `k ≤ [p/4]`.
    pub fn quarter_coeffs(&self) -> Result<Vec<u64>> {
        let c = self.coeffs(&self.c2c4, Series::CentralQuartic)?;
        Ok(c[..=self.q as usize].iter().map(|&v| self.ring.reduce_p(v)).collect())
    }

    pub fn pn(&self, x: FieldElem) -> Result<FieldElem> {
        eval_pn(self.n, x)
    }

    pub fn pq(&self, x: FieldElem) -> Result<FieldElem> {
        eval_pn(self.q, x)
    }

    /// `Σ_{k≤[p/4]} C(4k,2k)C(2k,k) ratioᵏ` in the field of `ratio`.
    pub fn quarter_sum(&self, ratio: FieldElem) -> Result<FieldElem> {
        let c = self.coeffs(&self.c2c4, Series::CentralQuartic)?;
        Ok(series_sum(&self.ring, &c[..=self.q as usize], ratio))
    }

    /// `Σ_{k≤(p−1)/2} C(2k,k)³ ratioᵏ`.
    pub fn cubes_half<R: Residue>(&self, ratio: R) -> Result<R> {
        let c = self.coeffs(&self.cubes, Series::CentralCubed)?;
        Ok(series_sum(&self.ring, &c[..=self.n as usize], ratio))
    }

    /// `Σ_{k<p} C(2k,k)³ ratioᵏ`.
    pub fn cubes_full<R: Residue>(&self, ratio: R) -> Result<R> {
        let c = self.coeffs(&self.cubes, Series::CentralCubed)?;
        Ok(series_sum(&self.ring, c, ratio))
    }

    /// `Σ_{k<p} C(2k,k)C(4k,2k) ratioᵏ`.
    pub fn c2c4_full<R: Residue>(&self, ratio: R) -> Result<R> {
        let c = self.coeffs(&self.c2c4, Series::CentralQuartic)?;
        Ok(series_sum(&self.ring, c, ratio))
    }

    /// `Σ_{k<p} C(2k,k)²C(4k,2k) ratioᵏ`.
    pub fn c2sq_c4_full<R: Residue>(&self, ratio: R) -> Result<R> {
        let c = self.coeffs(&self.c2sq_c4, Series::CentralSquaredQuartic)?;
        Ok(series_sum(&self.ring, c, ratio))
    }

    /// `Σ_{k<p} C(2k,k)²C(4k,2k)/mᵏ mod p²`.
    pub fn sum_over_m(&self, m: i128) -> Result<u64> {
        Ok(self.c2sq_c4_full(self.rat_p2(1, m)?)?.value())
    }

    /// `Σ_x (f(x)/p)` for integer coefficients in ascending degree.
    pub fn chi_sum(&self, c: [i128; 4]) -> i64 {
        char_sum(&Cubic::new(self.p, c), self.table())
    }

    /// `p = x² + dy²` normalized by `conds`; a missing representation in a
    /// class where the claim asserts one is a registry error, not a skip.
    pub fn rep(&self, d: u64, conds: &[Condition]) -> Result<QuadRep> {
        represent_normalized(self.p, d, conds).map_err(|e| match e {
            Error::Inapplicable(msg) => Error::Registry(msg),
            other => other,
        })
    }

    /// `p/(2c) mod p²`.
    pub fn p_over(&self, c: i64) -> Result<u64> {
        let inv = self.rat_p2(1, c as i128)?;
        Ok((self.zp2(self.p as i128) * inv).value())
    }
}

/// Converts an applicability error into a registry error for steps whose
/// applicability the claim has already established.
pub(crate) fn strict<T>(r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Inapplicable(msg) => Error::Registry(msg),
        other => other,
    })
}

/// `C(a, b) mod m` as a product of fractions; every denominator must be a unit.
pub(crate) fn binom_mod(a: u64, b: u64, m: u64) -> Result<u64> {
    if b > a {
        return Ok(0);
    }
    let mut acc = Zmod::new(1, m);
    for i in 0..b {
        acc = acc * Zmod::new((a - i) as i128, m);
        acc = acc * Zmod::new(crate::arith::inv_mod((i + 1) as i128, m)? as i128, m);
    }
    Ok(acc.value())
}
