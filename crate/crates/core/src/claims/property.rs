//! Statements quantified over a variable at each prime. Each recipe checks
//! one domain point; the driver enumerates or samples the points.

use crate::arith::{FieldElem, PRational, Residue, Zmod};
use crate::binomials::a_p_lambda;
use crate::charsum::{char_sum, power_sum, Cubic};
use crate::error::Result;
use crate::legendre::eval_sn;

use super::ctx::{binom_mod, strict, Checks, PrimeCtx};
use super::{Claim, ClaimKind, ClaimStatus, CheckFn, Eval, SizeFn};

const SMALL: u64 = 97;

fn prop(
    id: &'static str,
    excluded: &'static [u64],
    location: &'static str,
    statement: &'static str,
    exhaustive_to: u64,
    size: SizeFn,
    check: CheckFn,
) -> Claim {
    Claim {
        id,
        status: ClaimStatus::Proved,
        excluded,
        location,
        statement,
        cases: &["exhaustive", "sampled"],
        kind: ClaimKind::Property { exhaustive_to },
        eval: Eval::Property { size, check },
    }
}

pub(super) fn claims() -> Vec<Claim> {
    vec![
        prop(
            "eq-1.1",
            &[2],
            "§1",
            "C((p−1)/2,k) ≡ C(2k,k)/(−4)ᵏ mod p and C((p−1)/2+k,2k) ≡ C(2k,k)/(−16)ᵏ mod p², k ≤ (p−1)/2",
            SMALL,
            |c| c.n + 1,
            eq_1_1,
        ),
        prop("eq-1.2", &[2], "§1", "A(p,λ) ≡ Σ_{k≤(p−1)/2} C(2k,k)³(λ/64)ᵏ mod p", SMALL, |c| c.p, eq_1_2),
        prop("eq-1.7", &[2, 3], "§1", "P_((p−1)/2)(t) ≡ −(−6/p) Σ((x³−3(t²+3)x+2t(t²−9))/p) mod p", SMALL, |c| c.p, eq_1_7),
        prop(
            "lemma-2.1",
            &[2],
            "§2",
            "C([p/4]+k,2k) ≡ C(4k,2k)/(−64)ᵏ and C(p−1−2k,(p−1)/2) ≡ (−1)^((p−1)/2) C(4k,2k)/16ᵏ mod p, k ≤ [p/4]",
            SMALL,
            |c| c.q + 1,
            lemma_2_1,
        ),
        prop("lemma-2.2", &[2], "§2", "P_[p/4](t) ≡ Σ_{k≤[p/4]} C(4k,2k)C(2k,k)((1−t)/128)ᵏ mod p", SMALL, |c| c.p, lemma_2_2),
        prop(
            "lemma-2.3",
            &[2],
            "§2",
            "Σ C(4k,2k)C(2k,k)((1−t)/128)ᵏ ≡ (−1)^[p/4] Σ C(4k,2k)C(2k,k)((1+t)/128)ᵏ mod p",
            SMALL,
            |c| c.p,
            lemma_2_3,
        ),
        prop(
            "lemma-2.4",
            &[2],
            "§2",
            "(√x)^((p−1)/2) P_((p−1)/2)(√x) ≡ (−1)^[p/4] Σ_{k≤[p/4]} C(4k,2k)C(2k,k)/64ᵏ x^((p−1)/2−k) mod p",
            SMALL,
            |c| c.p,
            lemma_2_4,
        ),
        prop(
            "lemma-2.5",
            &[2],
            "§2",
            "(2(1−x)/p)(√(x/(x−1)))ⁿ Pₙ(√(x/(x−1))) ≡ (√x)ⁿ Pₙ(√x) ≡ (x/p) P_[p/4](2/x−1) mod p, x ≢ 0,1",
            SMALL,
            |c| c.p,
            lemma_2_5,
        ),
        prop(
            "lemma-2.6",
            &[2, 3],
            "§2",
            "(√u)ⁿ Pₙ(√u) ≡ −(−6/p) Σ((ux³−3(u+3)x+2(u−9))/p) mod p",
            SMALL,
            |c| c.p,
            lemma_2_6,
        ),
        prop(
            "thm-2.1-i",
            &[2, 3],
            "§2",
            "(√t)^(−n) Pₙ(√t) ≡ P_[p/4]((2−t)/t) ≡ Σ …((t−1)/(64t))ᵏ ≡ (−1)^[p/4] Σ …/(64t)ᵏ ≡ −(−6t/p) Σ((tx³−3(t+3)x+2(t−9))/p) mod p, t ≢ 0",
            SMALL,
            |c| c.p - 1,
            thm_2_1_i,
        ),
        prop(
            "thm-2.1-ii",
            &[2, 3],
            "§2",
            "P_[p/4](t) ≡ Σ …((1−t)/128)ᵏ ≡ −(6/p) Σ((x³−3(3t+5)/2·x+9t+7)/p) mod p",
            SMALL,
            |c| c.p,
            thm_2_1_ii,
        ),
        prop(
            "cor-2.1",
            &[2, 3, 5, 7, 11, 13],
            "§2",
            "Σ((x³−3(3t+5)/2·x+9t+7)/p) = (2/p) Σ((x³+3(3t−5)/2·x+9t−7)/p)",
            SMALL,
            |c| c.p,
            cor_2_1,
        ),
        prop(
            "thm-3.1",
            &[2],
            "§3",
            "Σ_{k≤(p−1)/2} C(2k,k)³/mᵏ ≡ S_((p−1)/2)(−16/m) ≡ P_((p−1)/2)(√(1−64/m))² mod p², p ∤ m",
            SMALL,
            |c| c.p2 - c.p,
            thm_3_1,
        ),
        prop(
            "thm-4.1",
            &[2],
            "§4",
            "Σ_{k<p} C(2k,k)²C(4k,2k)(x(1−64x))ᵏ ≡ (Σ_{k<p} C(2k,k)C(4k,2k)xᵏ)² mod p²",
            199,
            |c| c.p2,
            thm_4_1,
        ),
        prop(
            "cor-4.1",
            &[2],
            "§4",
            "Σ_{k<p} C(2k,k)²C(4k,2k)/mᵏ ≡ (Σ_{k<p} C(2k,k)C(4k,2k)((1−√(1−256/m))/128)ᵏ)² mod p²",
            SMALL,
            |c| c.p2 - c.p,
            cor_4_1,
        ),
        prop(
            "lemma-4.2",
            &[2, 3],
            "§4",
            "P_[p/4](√t) ≡ −Σ_x (x³+4x²+2(1−√t)x)^((p−1)/2) mod p",
            SMALL,
            |c| c.p,
            lemma_4_2,
        ),
        prop(
            "thm-4.2",
            &[2],
            "§4",
            "Σ_{k<p} C(2k,k)²C(4k,2k)/mᵏ ≡ P_[p/4](t)² ≡ (Σ_x (x³+4x²+2(1−t)x)^((p−1)/2))² mod p, t = √(1−256/m); ≡ 0 mod p² when a factor vanishes",
            SMALL,
            |c| c.p - 1,
            thm_4_2,
        ),
        prop(
            "lemma-5.1",
            &[2],
            "§5",
            "Σ_x (x³+a²mx+a³n)^((p−1)/2) ≡ a^((p−1)/2) Σ_x (x³+mx+n)^((p−1)/2) mod p and Σ((x³+a²mx+a³n)/p) = (a/p) Σ((x³+mx+n)/p)",
            SMALL,
            |c| c.p * c.p * c.p,
            lemma_5_1,
        ),
    ]
}

fn fi(ctx: &PrimeCtx, v: i64) -> FieldElem {
    ctx.fe(v as i128)
}

/// `(√x)ⁿ Pₙ(√x)`.
fn scaled_pn(ctx: &PrimeCtx, s: FieldElem) -> Result<FieldElem> {
    Ok(s.pow(ctx.n) * ctx.pn(s)?)
}

fn eq_1_1(ctx: &PrimeCtx, k: u64, _: bool) -> Result<Option<Checks>> {
    let (p, p2, n) = (ctx.p, ctx.p2, ctx.n);
    let mut c = Checks::new(format!("k={k}"));
    let zp = |v: u64| Zmod::new(v as i128, p);
    let rhs1 = zp(binom_mod(2 * k, k, p)?) * Zmod::new(-4, p).pow(k).inverse()?;
    c.p(ctx, "C(n,k) = C(2k,k)/(-4)^k", binom_mod(n, k, p)?, rhs1.value());
    let rhs2 = ctx.zp2(binom_mod(2 * k, k, p2)? as i128) * ctx.zp2(-16).pow(k).inverse()?;
    c.p2(ctx, "C(n+k,2k) = C(2k,k)/(-16)^k", binom_mod(n + k, 2 * k, p2)?, rhs2.value());
    Ok(Some(c))
}

fn eq_1_2(ctx: &PrimeCtx, lam: u64, _: bool) -> Result<Option<Checks>> {
    let mut c = Checks::new(format!("λ={lam}"));
    let lhs = a_p_lambda(ctx.p, PRational::int(lam as i128))?;
    let rhs = ctx.cubes_half(ctx.fe(lam as i128) * ctx.rat(1, 64)?)?;
    c.field("A(p,λ) = sum C^3 (λ/64)^k", ctx.fe(lhs as i128), rhs);
    Ok(Some(c))
}

fn eq_1_7(ctx: &PrimeCtx, t: u64, _: bool) -> Result<Option<Checks>> {
    let t = t as i128;
    let mut c = Checks::new(format!("t={t}"));
    let s = ctx.chi_sum([2 * t * (t * t - 9), -3 * (t * t + 3), 0, 1]);
    c.field("P_n(t) = -(-6/p) sum", ctx.pn(ctx.fe(t))?, fi(ctx, -ctx.sym(-6)? * s));
    Ok(Some(c))
}

fn lemma_2_1(ctx: &PrimeCtx, k: u64, _: bool) -> Result<Option<Checks>> {
    let (p, q, n) = (ctx.p, ctx.q, ctx.n);
    let zp = |v: u64| Zmod::new(v as i128, p);
    let c4 = zp(binom_mod(4 * k, 2 * k, p)?);
    let mut c = Checks::new(format!("k={k}"));
    let r1 = c4 * Zmod::new(-64, p).pow(k).inverse()?;
    c.p(ctx, "C(q+k,2k) = C(4k,2k)/(-64)^k", binom_mod(q + k, 2 * k, p)?, r1.value());
    let sign = if n % 2 == 0 { 1 } else { -1 };
    let r2 = Zmod::new(sign, p) * c4 * Zmod::new(16, p).pow(k).inverse()?;
    c.p(ctx, "C(p-1-2k,n) = (-1)^n C(4k,2k)/16^k", binom_mod(p - 1 - 2 * k, n, p)?, r2.value());
    Ok(Some(c))
}

fn lemma_2_2(ctx: &PrimeCtx, t: u64, _: bool) -> Result<Option<Checks>> {
    let t = ctx.fe(t as i128);
    let mut c = Checks::new(format!("t={t}"));
    let s = ctx.quarter_sum((ctx.fe(1) - t) * ctx.rat(1, 128)?)?;
    c.field("P_q(t) = sum ((1-t)/128)^k", ctx.pq(t)?, s);
    Ok(Some(c))
}

fn lemma_2_3(ctx: &PrimeCtx, t: u64, _: bool) -> Result<Option<Checks>> {
    let t = ctx.fe(t as i128);
    let inv = ctx.rat(1, 128)?;
    let mut c = Checks::new(format!("t={t}"));
    let a = ctx.quarter_sum((ctx.fe(1) - t) * inv)?;
    let b = ctx.sign(ctx.q) * ctx.quarter_sum((ctx.fe(1) + t) * inv)?;
    c.field("sum ((1-t)/128)^k = (-1)^q sum ((1+t)/128)^k", a, b);
    Ok(Some(c))
}

fn lemma_2_4(ctx: &PrimeCtx, x: u64, _: bool) -> Result<Option<Checks>> {
    let xf = ctx.fe(x as i128);
    let inv64 = ctx.rat(1, 64)?;
    let coeffs = ctx.quarter_coeffs()?;
    let mut rhs = ctx.fe(0);
    for (k, &a) in coeffs.iter().enumerate() {
        let k = k as u64;
        rhs = rhs + ctx.fe(a as i128) * inv64.pow(k) * xf.pow(ctx.n - k);
    }
    rhs = ctx.sign(ctx.q) * rhs;
    let mut c = Checks::new(format!("x={x}"));
    for flip in [false, true] {
        let s = ctx.sqrt(x as i128, flip)?;
        c.field("(√x)^n P_n(√x) = (-1)^q sum", scaled_pn(ctx, s)?, rhs);
    }
    Ok(Some(c))
}

fn lemma_2_5(ctx: &PrimeCtx, x: u64, _: bool) -> Result<Option<Checks>> {
    if x <= 1 {
        return Ok(None);
    }
    let xf = ctx.fe(x as i128);
    let y = xf.checked_div(&(xf - ctx.fe(1)))?;
    let sym = |v: FieldElem| -> Result<FieldElem> { Ok(fi(ctx, v.legendre()? as i64)) };
    let tail = sym(xf)? * ctx.pq(ctx.fe(2).checked_div(&xf)? - ctx.fe(1))?;
    let mut c = Checks::new(format!("x={x}"));
    for flip in [false, true] {
        let a = sym(ctx.fe(2) * (ctx.fe(1) - xf))? * scaled_pn(ctx, ctx.sqrt_of(y, flip)?)?;
        let b = scaled_pn(ctx, ctx.sqrt(x as i128, flip)?)?;
        c.chain(&[("(2(1-x)/p)(√y)^n P_n(√y)", a), ("(√x)^n P_n(√x)", b), ("(x/p) P_q(2/x-1)", tail)]);
    }
    Ok(Some(c))
}

fn lemma_2_6(ctx: &PrimeCtx, u: u64, _: bool) -> Result<Option<Checks>> {
    let ui = u as i128;
    let s = ctx.chi_sum([2 * (ui - 9), -3 * (ui + 3), 0, ui]);
    let rhs = fi(ctx, -ctx.sym(-6)? * s);
    let mut c = Checks::new(format!("u={u}"));
    for flip in [false, true] {
        c.field("(√u)^n P_n(√u) = -(-6/p) sum", scaled_pn(ctx, ctx.sqrt(ui, flip)?)?, rhs);
    }
    Ok(Some(c))
}

fn thm_2_1_i(ctx: &PrimeCtx, idx: u64, _: bool) -> Result<Option<Checks>> {
    let t = idx as i128 + 1;
    let tf = ctx.fe(t);
    let tinv = tf.inverse()?;
    let inv64 = ctx.rat(1, 64)?;
    let b = ctx.pq((ctx.fe(2) - tf) * tinv)?;
    let sum1 = ctx.quarter_sum((tf - ctx.fe(1)) * inv64 * tinv)?;
    let sum2 = ctx.sign(ctx.q) * ctx.quarter_sum(inv64 * tinv)?;
    let s = ctx.chi_sum([2 * (t - 9), -3 * (t + 3), 0, t]);
    let cs = fi(ctx, -ctx.sym(-6 * t)? * s);
    let mut c = Checks::new(format!("t={t}"));
    for flip in [false, true] {
        let r = ctx.sqrt(t, flip)?;
        let a = r.pow(ctx.n).inverse()? * ctx.pn(r)?;
        c.chain(&[
            ("(√t)^-n P_n(√t)", a),
            ("P_q((2-t)/t)", b),
            ("sum ((t-1)/(64t))^k", sum1),
            ("(-1)^q sum 1/(64t)^k", sum2),
            ("-(-6t/p) sum", cs),
        ]);
    }
    Ok(Some(c))
}

/// `x³ − 3(3t+5)/2·x + 9t + 7` and `x³ + 3(3t−5)/2·x + 9t − 7` over `F_p`.
fn thm_2_1_cubics(ctx: &PrimeCtx, t: i128) -> Result<(Cubic, Cubic)> {
    let one = ctx.fe(1);
    let zero = ctx.fe(0);
    let f = Cubic::from_field([ctx.fe(9 * t + 7), ctx.rat(-3 * (3 * t + 5), 2)?, zero, one])?;
    let g = Cubic::from_field([ctx.fe(9 * t - 7), ctx.rat(3 * (3 * t - 5), 2)?, zero, one])?;
    Ok((f, g))
}

fn thm_2_1_ii(ctx: &PrimeCtx, t: u64, _: bool) -> Result<Option<Checks>> {
    let tf = ctx.fe(t as i128);
    let (f, _) = thm_2_1_cubics(ctx, t as i128)?;
    let s = char_sum(&f, ctx.table());
    let mut c = Checks::new(format!("t={t}"));
    c.chain(&[
        ("P_q(t)", ctx.pq(tf)?),
        ("sum ((1-t)/128)^k", ctx.quarter_sum((ctx.fe(1) - tf) * ctx.rat(1, 128)?)?),
        ("-(6/p) sum", fi(ctx, -ctx.sym(6)? * s)),
    ]);
    Ok(Some(c))
}

fn cor_2_1(ctx: &PrimeCtx, t: u64, _: bool) -> Result<Option<Checks>> {
    let (f, g) = thm_2_1_cubics(ctx, t as i128)?;
    let mut c = Checks::new(format!("t={t}"));
    c.exact("sum f = (2/p) sum g", char_sum(&f, ctx.table()), ctx.sym(2)? * char_sum(&g, ctx.table()));
    Ok(Some(c))
}

/// The `idx`-th residue mod `p²` prime to `p`.
fn unit_mod_p2(ctx: &PrimeCtx, idx: u64) -> u64 {
    (idx / (ctx.p - 1)) * ctx.p + idx % (ctx.p - 1) + 1
}

fn thm_3_1(ctx: &PrimeCtx, idx: u64, _: bool) -> Result<Option<Checks>> {
    let m = unit_mod_p2(ctx, idx);
    let minv = ctx.zp2(m as i128).inverse()?;
    let lhs = ctx.cubes_half(minv)?;
    let sn = eval_sn(ctx.n, ctx.zp2(-16) * minv)?;
    let u = ctx.zp2(1) - ctx.zp2(64) * minv;
    let mut c = Checks::new(format!("m={m}"));
    c.p2(ctx, "sum = S_n(-16/m)", lhs.value(), sn.value());
    for flip in [false, true] {
        if let Some(r) = ctx.sqrt_p2(u, flip) {
            let pn = crate::legendre::eval_pn(ctx.n, r)?;
            c.p2(ctx, "sum = P_n(√(1-64/m))^2", lhs.value(), (pn * pn).value());
        }
    }
    Ok(Some(c))
}

fn thm_4_1(ctx: &PrimeCtx, x: u64, _: bool) -> Result<Option<Checks>> {
    let xz = ctx.zp2(x as i128);
    let lhs = ctx.c2sq_c4_full(xz * (ctx.zp2(1) - ctx.zp2(64) * xz))?;
    let s = ctx.c2c4_full(xz)?;
    let mut c = Checks::new(format!("x={x}"));
    c.p2(ctx, "sum C^2C4 (x(1-64x))^k = (sum C C4 x^k)^2", lhs.value(), (s * s).value());
    Ok(Some(c))
}

fn cor_4_1(ctx: &PrimeCtx, idx: u64, _: bool) -> Result<Option<Checks>> {
    let m = unit_mod_p2(ctx, idx);
    let minv = ctx.zp2(m as i128).inverse()?;
    let u = ctx.zp2(1) - ctx.zp2(256) * minv;
    if ctx.sqrt_p2(u, false).is_none() {
        return Ok(None);
    }
    let lhs = ctx.c2sq_c4_full(minv)?;
    let inv128 = ctx.zp2(128).inverse()?;
    let mut c = Checks::new(format!("m={m}"));
    for flip in [false, true] {
        let r = strict(ctx.sqrt_p2(u, flip).ok_or_else(|| crate::error::Error::Inapplicable("no root".into())))?;
        let s = ctx.c2c4_full((ctx.zp2(1) - r) * inv128)?;
        c.p2(ctx, "sum/m^k = (sum ((1-√(1-256/m))/128)^k)^2", lhs.value(), (s * s).value());
    }
    Ok(Some(c))
}

fn quartic_power_sum(ctx: &PrimeCtx, s: FieldElem) -> FieldElem {
    power_sum([ctx.fe(0), ctx.fe(2) * (ctx.fe(1) - s), ctx.fe(4), ctx.fe(1)])
}

fn lemma_4_2(ctx: &PrimeCtx, t: u64, _: bool) -> Result<Option<Checks>> {
    let mut c = Checks::new(format!("t={t}"));
    for flip in [false, true] {
        let s = ctx.sqrt(t as i128, flip)?;
        c.field("P_q(√t) = -sum (x^3+4x^2+2(1-√t)x)^n", ctx.pq(s)?, -quartic_power_sum(ctx, s));
    }
    Ok(Some(c))
}

fn thm_4_2(ctx: &PrimeCtx, idx: u64, _: bool) -> Result<Option<Checks>> {
    let m = idx as i128 + 1;
    let l = ctx.sum_over_m(m)?;
    let u = ctx.fe(1) - ctx.fe(256) * ctx.fe(m).inverse()?;
    let u2 = ctx.zp2(1) - ctx.zp2(256) * ctx.zp2(m).inverse()?;
    // t is a p-adic integer unless p exactly divides 1 − 256/m
    let integral = !(u.is_zero() && !u2.is_zero());
    let mut c = Checks::new(format!("m={m}"));
    for flip in [false, true] {
        let t = ctx.sqrt_of(u, flip)?;
        let a = ctx.pq(t)?;
        let b = quartic_power_sum(ctx, t);
        c.chain(&[("sum/m^k", ctx.fe((l % ctx.p) as i128)), ("P_q(t)^2", a * a), ("(power sum)^2", b * b)]);
        if integral && (a.is_zero() || b.is_zero()) {
            c.p2(ctx, "sum/m^k = 0 when a factor vanishes", l, 0);
        }
    }
    Ok(Some(c))
}

/// Both sums of `x³ + mx + n` for every `(m, n)`.
fn depressed_tables(ctx: &PrimeCtx) -> &(Vec<i64>, Vec<FieldElem>) {
    ctx.depressed_sums.get_or_init(|| {
        let p = ctx.p;
        let mut chars = Vec::with_capacity((p * p) as usize);
        let mut powers = Vec::with_capacity((p * p) as usize);
        for m in 0..p {
            for n in 0..p {
                chars.push(char_sum(&Cubic::depressed(p, m as i128, n as i128), ctx.table()));
                powers.push(power_sum([ctx.fe(n as i128), ctx.fe(m as i128), ctx.fe(0), ctx.fe(1)]));
            }
        }
        (chars, powers)
    })
}

fn lemma_5_1(ctx: &PrimeCtx, idx: u64, exhaustive: bool) -> Result<Option<Checks>> {
    let p = ctx.p;
    let (a, m, n) = (idx / (p * p), (idx / p) % p, idx % p);
    let m2 = a * a % p * m % p;
    let n2 = a * a % p * a % p * n % p;
    let (s_scaled, s, e_scaled, e) = if exhaustive {
        let (chars, powers) = depressed_tables(ctx);
        let at = |m: u64, n: u64| (m * p + n) as usize;
        (chars[at(m2, n2)], chars[at(m, n)], powers[at(m2, n2)], powers[at(m, n)])
    } else {
        let f = |m: u64, n: u64| {
            (
                char_sum(&Cubic::depressed(p, m as i128, n as i128), ctx.table()),
                power_sum([ctx.fe(n as i128), ctx.fe(m as i128), ctx.fe(0), ctx.fe(1)]),
            )
        };
        let (s2, e2) = f(m2, n2);
        let (s1, e1) = f(m, n);
        (s2, s1, e2, e1)
    };
    let af = ctx.fe(a as i128);
    let mut c = Checks::new(format!("a={a} m={m} n={n}"));
    c.field("power sums", e_scaled, af.pow(ctx.n) * e);
    c.exact("character sums", s_scaled, ctx.table().chi(a) as i64 * s);
    Ok(Some(c))
}
