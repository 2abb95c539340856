//! Statements about a single value per prime: Legendre values at fixed
//! points, character sums of fixed cubics, and the `C(2k,k)³` sums.

use crate::arith::{legendre_symbol, pow_mod, sign_pow, FieldElem};
use crate::error::Result;
use crate::legendre::eval_pn;
use crate::quadform::unit_power_congruence;
use crate::quadform::Condition::{XOdd, XOneMod4, YOneMod4};

use super::ctx::{strict, Checks, PrimeCtx};
use super::{Claim, ClaimKind, ClaimStatus, Eval, Outcome, PointFn};

pub(super) fn point(
    id: &'static str,
    status: ClaimStatus,
    excluded: &'static [u64],
    location: &'static str,
    statement: &'static str,
    cases: &'static [&'static str],
    f: PointFn,
) -> Claim {
    Claim { id, status, excluded, location, statement, cases, kind: ClaimKind::Pointwise, eval: Eval::Point(f) }
}

/// `(a/q)` for a small odd prime `q`.
pub(super) fn sym_mod(a: i64, q: u64) -> Result<i64> {
    Ok(legendre_symbol(a as i128, q)? as i64)
}

fn done(c: Checks) -> Result<Outcome> {
    Ok(Outcome::Checked(c))
}

fn outside(ctx: &PrimeCtx, what: &str) -> Result<Outcome> {
    Ok(Outcome::Inapplicable(format!("p = {} outside {what}", ctx.p)))
}

/// `p ≡ 1,2,4 mod 7`.
pub(super) fn septic_split(p: u64) -> bool {
    matches!(p % 7, 1 | 2 | 4)
}

pub(super) const SEPTIC: &[&str] = &["p ≡ 1,2,4 mod 7", "p ≡ 3,5,6 mod 7"];

pub(super) fn septic_label(p: u64) -> &'static str {
    if septic_split(p) {
        SEPTIC[0]
    } else {
        SEPTIC[1]
    }
}

pub(super) fn claims() -> Vec<Claim> {
    use ClaimStatus::{Conjectural, Proved};
    vec![
        point(
            "eq-1.3",
            Proved,
            &[2],
            "§1",
            "Σ_{k≤(p−1)/2} C(2k,k)³/64ᵏ ≡ 0 mod p² (p ≡ 3 mod 4), 4x²−2p mod p² (p = x²+4y²)",
            &["p ≡ 1 mod 4", "p ≡ 3 mod 4"],
            eq_1_3,
        ),
        point(
            "conj-1.4",
            Conjectural,
            &[2, 7],
            "§1",
            "Σ_{k<p} C(2k,k)³ ≡ 0 mod p² (p ≡ 3,5,6 mod 7), 4x²−2p mod p² (p = x²+7y²)",
            SEPTIC,
            conj_1_4,
        ),
        point(
            "thm-2.2",
            Proved,
            &[2, 3],
            "§2",
            "P_[p/4](−7/9) ≡ Σ C(4k,2k)C(2k,k)/72ᵏ ≡ (−1)^[p/4] Σ …/576ᵏ ≡ (−1)^((p−1)/4)(p/3)2a or 0 mod p",
            &["p ≡ 1 mod 4", "p ≡ 3 mod 4"],
            thm_2_2,
        ),
        point(
            "thm-2.3",
            Proved,
            &[2, 3],
            "§2",
            "P_[p/4](−5/3) ≡ Σ …/48ᵏ ≡ (−1)^[p/4] Σ …/(−192)ᵏ ≡ 2A or 0 mod p",
            &["p ≡ 1 mod 3", "p ≡ 2 mod 3"],
            thm_2_3,
        ),
        point(
            "thm-2.4",
            Proved,
            &[2, 3, 7],
            "§2",
            "P_[p/4](−65/63) ≡ Σ …/63ᵏ ≡ (−1)^[p/4] Σ …/(−4032)ᵏ ≡ 2C(p/3)(C/7) or 0 mod p",
            SEPTIC,
            thm_2_4,
        ),
        point(
            "thm-2.5",
            Proved,
            &[2, 3, 7],
            "§2",
            "P_((p−1)/2)(3√7/8) and (−1)^[p/4] P_((p−1)/2)(√−63) mod p",
            &["p ≡ 1,9,25 mod 28", "p ≡ 11,15,23 mod 28", "p ≡ 3,5,6 mod 7"],
            thm_2_5,
        ),
        point(
            "thm-2.6",
            Proved,
            &[2],
            "§2",
            "P_((p−1)/2)(3√2/4) ≡ (−1)^(b/2)2a, 4b or 0 mod p",
            &["p ≡ 1 mod 8", "p ≡ 5 mod 8", "p ≡ 3 mod 4"],
            thm_2_6,
        ),
        point(
            "thm-2.7",
            Proved,
            &[2],
            "§2",
            "P_((p−1)/2)(√2) ≡ (−1)^((p−1)/8+(c−1)/4)2c, −2√2d or 0 mod p",
            &["p ≡ 1 mod 8", "p ≡ 3 mod 8", "p ≡ 5,7 mod 8"],
            thm_2_7,
        ),
        point(
            "thm-2.8",
            Proved,
            &[2, 3],
            "§2",
            "P_((p−1)/2)(√−3) and P_((p−1)/2)(√3/2) mod p",
            &["p ≡ 1 mod 12", "p ≡ 7 mod 12", "p ≡ 2 mod 3"],
            thm_2_8,
        ),
        point(
            "eq-2.2",
            Proved,
            &[2],
            "§2",
            "Σ((x³−4x)/p) = −2a (p = a²+4b², a ≡ 1 mod 4) or 0",
            &["p ≡ 1 mod 4", "p ≡ 3 mod 4"],
            eq_2_2,
        ),
        point(
            "eq-2.3",
            Proved,
            &[2, 3],
            "§2",
            "Σ((x³+8)/p) = −2A(2/p) (p = A²+3B², A ≡ 1 mod 3) or 0",
            &["p ≡ 1 mod 3", "p ≡ 2 mod 3"],
            eq_2_3,
        ),
        point(
            "eq-2.4",
            Proved,
            &[2, 3, 7],
            "§2",
            "Σ((7x³−5x+2)/p) = (−1)^((p+1)/2)2C(C/7) or 0",
            SEPTIC,
            eq_2_4,
        ),
        point(
            "eq-2.5",
            Proved,
            &[2, 3, 7],
            "§2",
            "7^[p/4] ≡ (C/7) or −(C/7)D/C mod p",
            &["p ≡ 1,9,25 mod 28", "p ≡ 11,15,23 mod 28"],
            eq_2_5,
        ),
        point(
            "eq-2.6",
            Proved,
            &[2, 3],
            "§2",
            "Σ((x³−30x−56)/p) = (−1)^((p+7)/8)(p/3)2c, (−1)^((p−3)/8)(p/3)2c or 0",
            &["p ≡ 1 mod 8", "p ≡ 3 mod 8", "p ≡ 5,7 mod 8"],
            eq_2_6,
        ),
        point(
            "eq-2.7",
            Proved,
            &[2, 3],
            "§2",
            "3^[p/4] ≡ (A/3) or (A/3)B/A mod p",
            &["p ≡ 1 mod 12", "p ≡ 7 mod 12"],
            eq_2_7,
        ),
        point(
            "thm-3.2",
            Proved,
            &[2, 7],
            "§3",
            "Σ_{k≤(p−1)/2} C(2k,k)³ ≡ (−1)^((p−1)/2) Σ C(2k,k)³/4096ᵏ ≡ 0 mod p² or 4C² mod p",
            SEPTIC,
            thm_3_2,
        ),
        point(
            "thm-3.3",
            Proved,
            &[2],
            "§3",
            "Σ_{k≤(p−1)/2} C(2k,k)³/(−8)ᵏ ≡ 0 or 4a²−2p mod p²",
            &["p ≡ 1 mod 4", "p ≡ 3 mod 4"],
            thm_3_3,
        ),
        point(
            "thm-3.4-i",
            Proved,
            &[2],
            "§3",
            "Σ_{k≤(p−1)/2} C(2k,k)³/(−512)ᵏ ≡ 0 mod p² for p ≡ 3 mod 4",
            &["p ≡ 3 mod 4"],
            thm_3_4_i,
        ),
        point(
            "thm-3.4-ii",
            Proved,
            &[2],
            "§3",
            "Σ_{k≤(p−1)/2} C(2k,k)³/(−64)ᵏ ≡ 0 mod p² for p ≡ 5,7 mod 8",
            &["p ≡ 5,7 mod 8"],
            thm_3_4_ii,
        ),
        point(
            "thm-3.4-iii",
            Proved,
            &[2],
            "§3",
            "Σ_{k≤(p−1)/2} C(2k,k)³/16ᵏ ≡ Σ C(2k,k)³/256ᵏ ≡ 0 mod p² for p ≡ 2 mod 3",
            &["p ≡ 2 mod 3"],
            thm_3_4_iii,
        ),
        point(
            "thm-4.3",
            Proved,
            &[2],
            "§4",
            "Σ_{k<p} C(2k,k)C(4k,2k)/128ᵏ ≡ (−1)^([p/8]+(p−1)/2)(2c − p/(2c)) mod p²",
            &["p ≡ 1,3 mod 8"],
            thm_4_3,
        ),
    ]
}

/// A proved claim that is false: `Σ_{k≤(p−1)/2} C(2k,k)³ ≡ 1 mod p²`.
pub(super) fn false_fixture() -> Claim {
    point(
        "fixture-false",
        ClaimStatus::Proved,
        &[2],
        "-",
        "deliberately false: Σ_{k≤(p−1)/2} C(2k,k)³ ≡ 1 mod p²",
        &["all p"],
        |ctx| {
            let mut c = Checks::new("all p");
            let l = ctx.cubes_half(ctx.zp2(1))?.value();
            c.p2(ctx, "sum = 1", l, 1);
            done(c)
        },
    )
}

fn z(ctx: &PrimeCtx, v: i128) -> u64 {
    ctx.zp2(v).value()
}

fn fi(ctx: &PrimeCtx, v: i64) -> FieldElem {
    ctx.fe(v as i128)
}

fn eq_1_3(ctx: &PrimeCtx) -> Result<Outcome> {
    let l = ctx.cubes_half(ctx.rat_p2(1, 64)?)?.value();
    if ctx.p % 4 == 3 {
        let mut c = Checks::new("p ≡ 3 mod 4");
        c.p2(ctx, "sum = 0", l, 0);
        return done(c);
    }
    let x = ctx.rep(4, &[])?.x as i128;
    let mut c = Checks::new("p ≡ 1 mod 4");
    c.p2(ctx, "sum = 4x^2-2p", l, z(ctx, 4 * x * x - 2 * ctx.p as i128));
    done(c)
}

fn conj_1_4(ctx: &PrimeCtx) -> Result<Outcome> {
    let l = ctx.cubes_full(ctx.zp2(1))?.value();
    let mut c = Checks::new(septic_label(ctx.p));
    if septic_split(ctx.p) {
        let x = ctx.rep(7, &[])?.x as i128;
        c.p2(ctx, "sum = 4x^2-2p", l, z(ctx, 4 * x * x - 2 * ctx.p as i128));
    } else {
        c.p2(ctx, "sum = 0", l, 0);
    }
    done(c)
}

/// `P_[p/4](a)`, `Σ …/m₁ᵏ` and `(−1)^[p/4] Σ …/m₂ᵏ` for the chained statements.
fn quarter_forms(ctx: &PrimeCtx, a: (i128, i128), m1: i128, m2: i128) -> Result<[(&'static str, FieldElem); 3]> {
    Ok([
        ("P_[p/4]", ctx.pq(ctx.rat(a.0, a.1)?)?),
        ("sum/m1^k", ctx.quarter_sum(ctx.rat(1, m1)?)?),
        ("(-1)^[p/4] sum/m2^k", ctx.sign(ctx.q) * ctx.quarter_sum(ctx.rat(1, m2)?)?),
    ])
}

fn thm_2_2(ctx: &PrimeCtx) -> Result<Outcome> {
    let p = ctx.p;
    let forms = quarter_forms(ctx, (-7, 9), 72, 576)?;
    let (case, rhs) = if p % 4 == 1 {
        let a = ctx.rep(1, &[XOdd, XOneMod4])?.x;
        ("p ≡ 1 mod 4", sign_pow((p - 1) / 4) * sym_mod(p as i64, 3)? * 2 * a)
    } else {
        ("p ≡ 3 mod 4", 0)
    };
    let mut c = Checks::new(case);
    c.chain_to(&forms, fi(ctx, rhs));
    done(c)
}

fn thm_2_3(ctx: &PrimeCtx) -> Result<Outcome> {
    let forms = quarter_forms(ctx, (-5, 3), 48, -192)?;
    let (case, rhs) = if ctx.p % 3 == 1 {
        ("p ≡ 1 mod 3", 2 * ctx.rep(3, &[crate::quadform::Condition::XOneMod3])?.x)
    } else {
        ("p ≡ 2 mod 3", 0)
    };
    let mut c = Checks::new(case);
    c.chain_to(&forms, fi(ctx, rhs));
    done(c)
}

fn thm_2_4(ctx: &PrimeCtx) -> Result<Outcome> {
    let p = ctx.p;
    let [a, b, d] = quarter_forms(ctx, (-65, 63), 63, -4032)?;
    let s = -ctx.sym(-21)? * ctx.chi_sum([2, -5, 0, 7]);
    let forms = [a, b, d, ("-(-21/p) sum((7x^3-5x+2)/p)", fi(ctx, s))];
    let rhs = if septic_split(p) {
        let cc = ctx.rep(7, &[])?.x;
        2 * cc * sym_mod(p as i64, 3)? * sym_mod(cc, 7)?
    } else {
        0
    };
    let mut c = Checks::new(septic_label(p));
    c.chain_to(&forms, fi(ctx, rhs));
    done(c)
}

fn thm_2_5(ctx: &PrimeCtx) -> Result<Outcome> {
    let p = ctx.p;
    let case = match p % 28 {
        1 | 9 | 25 => "p ≡ 1,9,25 mod 28",
        11 | 15 | 23 => "p ≡ 11,15,23 mod 28",
        _ => "p ≡ 3,5,6 mod 7",
    };
    let mut c = Checks::new(case);
    for flip in [false, true] {
        let s7 = ctx.sqrt(7, flip)?;
        let r = ctx.sqrt(-7, flip)?;
        let (rhs1, rhs2) = match p % 28 {
            1 | 9 | 25 => {
                let cc = fi(ctx, 2 * ctx.rep(7, &[XOneMod4])?.x);
                (cc, cc)
            }
            11 | 15 | 23 => {
                let d = fi(ctx, ctx.rep(7, &[YOneMod4])?.y);
                (fi(ctx, -2) * s7 * d, fi(ctx, 2) * d * r)
            }
            _ => (ctx.fe(0), ctx.fe(0)),
        };
        c.field("P_n(3√7/8)", ctx.pn(s7 * ctx.rat(3, 8)?)?, rhs1);
        c.field("(-1)^[p/4] P_n(√-63)", ctx.sign(ctx.q) * ctx.pn(fi(ctx, 3) * r)?, rhs2);
    }
    done(c)
}

fn thm_2_6(ctx: &PrimeCtx) -> Result<Outcome> {
    let p = ctx.p;
    let (case, rhs) = match p % 8 {
        1 => {
            let r = ctx.rep(4, &[XOneMod4])?;
            ("p ≡ 1 mod 8", sign_pow((r.y / 2).unsigned_abs()) * 2 * r.x)
        }
        5 => ("p ≡ 5 mod 8", 4 * ctx.rep(4, &[YOneMod4])?.y),
        _ => ("p ≡ 3 mod 4", 0),
    };
    let mut c = Checks::new(case);
    for flip in [false, true] {
        let x = ctx.sqrt(2, flip)? * ctx.rat(3, 4)?;
        c.field("P_n(3√2/4)", ctx.pn(x)?, fi(ctx, rhs));
    }
    done(c)
}

fn thm_2_7(ctx: &PrimeCtx) -> Result<Outcome> {
    let p = ctx.p;
    let case = match p % 8 {
        1 => "p ≡ 1 mod 8",
        3 => "p ≡ 3 mod 8",
        _ => "p ≡ 5,7 mod 8",
    };
    let mut c = Checks::new(case);
    for flip in [false, true] {
        let s2 = ctx.sqrt(2, flip)?;
        let rhs = match p % 8 {
            1 => {
                let cc = ctx.rep(2, &[XOneMod4])?.x;
                let e = (p - 1) / 8 + ((cc - 1) / 4).rem_euclid(2) as u64;
                fi(ctx, sign_pow(e) * 2 * cc)
            }
            3 => fi(ctx, -2) * s2 * fi(ctx, ctx.rep(2, &[YOneMod4])?.y),
            _ => ctx.fe(0),
        };
        c.field("P_n(√2)", ctx.pn(s2)?, rhs);
    }
    done(c)
}

fn thm_2_8(ctx: &PrimeCtx) -> Result<Outcome> {
    let p = ctx.p;
    let case = match p % 12 {
        1 => "p ≡ 1 mod 12",
        7 => "p ≡ 7 mod 12",
        _ => "p ≡ 2 mod 3",
    };
    let mut c = Checks::new(case);
    for flip in [false, true] {
        let r = ctx.sqrt(-3, flip)?;
        let s3 = ctx.sqrt(3, flip)?;
        let (rhs1, rhs2) = match p % 12 {
            1 => {
                let a = ctx.rep(3, &[XOneMod4])?.x;
                (fi(ctx, sign_pow((p - 1) / 4) * 2 * a), fi(ctx, 2 * a))
            }
            7 => {
                let b = fi(ctx, ctx.rep(3, &[YOneMod4])?.y);
                (ctx.sign((p - 3) / 4) * fi(ctx, 2) * b * r, fi(ctx, -2) * s3 * b)
            }
            _ => (ctx.fe(0), ctx.fe(0)),
        };
        c.field("P_n(√-3)", ctx.pn(r)?, rhs1);
        c.field("P_n(√3/2)", ctx.pn(s3 * ctx.rat(1, 2)?)?, rhs2);
    }
    done(c)
}

fn eq_2_2(ctx: &PrimeCtx) -> Result<Outcome> {
    let s = ctx.chi_sum([0, -4, 0, 1]);
    let mut c;
    if ctx.p % 4 == 1 {
        c = Checks::new("p ≡ 1 mod 4");
        c.exact("sum = -2a", s, -2 * ctx.rep(4, &[XOneMod4])?.x);
    } else {
        c = Checks::new("p ≡ 3 mod 4");
        c.exact("sum = 0", s, 0);
    }
    done(c)
}

fn eq_2_3(ctx: &PrimeCtx) -> Result<Outcome> {
    let s = ctx.chi_sum([8, 0, 0, 1]);
    let mut c;
    if ctx.p % 3 == 1 {
        c = Checks::new("p ≡ 1 mod 3");
        let a = ctx.rep(3, &[crate::quadform::Condition::XOneMod3])?.x;
        c.exact("sum = -2A(2/p)", s, -2 * a * ctx.sym(2)?);
    } else {
        c = Checks::new("p ≡ 2 mod 3");
        c.exact("sum = 0", s, 0);
    }
    done(c)
}

fn eq_2_4(ctx: &PrimeCtx) -> Result<Outcome> {
    let p = ctx.p;
    let s = ctx.chi_sum([2, -5, 0, 7]);
    let mut c = Checks::new(septic_label(p));
    if septic_split(p) {
        let cc = ctx.rep(7, &[])?.x;
        c.exact("sum = (-1)^((p+1)/2) 2C(C/7)", s, sign_pow(p.div_ceil(2)) * 2 * cc * sym_mod(cc, 7)?);
    } else {
        c.exact("sum = 0", s, 0);
    }
    done(c)
}

fn eq_2_5(ctx: &PrimeCtx) -> Result<Outcome> {
    let p = ctx.p;
    if !septic_split(p) {
        return outside(ctx, "p ≡ 1,2,4 mod 7");
    }
    let case = if p % 4 == 1 { "p ≡ 1,9,25 mod 28" } else { "p ≡ 11,15,23 mod 28" };
    let mut c = Checks::new(case);
    c.p(ctx, "7^[p/4] = rule", pow_mod(7, ctx.q, p), strict(unit_power_congruence(p, 7))?);
    done(c)
}

fn eq_2_6(ctx: &PrimeCtx) -> Result<Outcome> {
    let p = ctx.p;
    let s = ctx.chi_sum([-56, -30, 0, 1]);
    let t = ctx.chi_sum([0, 2, -4, 1]);
    let mut c;
    match p % 8 {
        1 | 3 => {
            let cc = ctx.rep(2, &[XOneMod4])?.x;
            let e = if p % 8 == 1 { p.div_ceil(8) } else { (p - 3) / 8 };
            c = Checks::new(if p % 8 == 1 { "p ≡ 1 mod 8" } else { "p ≡ 3 mod 8" });
            c.exact("sum((x^3-30x-56)/p)", s, sign_pow(e) * sym_mod(p as i64, 3)? * 2 * cc);
            c.exact("sum((x^3-4x^2+2x)/p)", t, sign_pow(p / 8 + 1) * 2 * cc);
        }
        _ => {
            c = Checks::new("p ≡ 5,7 mod 8");
            c.exact("sum((x^3-30x-56)/p)", s, 0);
            c.exact("sum((x^3-4x^2+2x)/p)", t, 0);
        }
    }
    done(c)
}

fn eq_2_7(ctx: &PrimeCtx) -> Result<Outcome> {
    let p = ctx.p;
    if p % 3 != 1 {
        return outside(ctx, "p ≡ 1 mod 3");
    }
    let case = if p % 12 == 1 { "p ≡ 1 mod 12" } else { "p ≡ 7 mod 12" };
    let mut c = Checks::new(case);
    c.p(ctx, "3^[p/4] = rule", pow_mod(3, ctx.q, p), strict(unit_power_congruence(p, 3))?);
    done(c)
}

fn thm_3_2(ctx: &PrimeCtx) -> Result<Outcome> {
    let p = ctx.p;
    let l1 = ctx.cubes_half(ctx.zp2(1))?.value();
    let l2 = (ctx.zp2(sign_pow(ctx.n) as i128) * ctx.cubes_half(ctx.rat_p2(1, 4096)?)?).value();
    let mut c = Checks::new(septic_label(p));
    if septic_split(p) {
        let cc = ctx.rep(7, &[])?.x as i128;
        let rhs = z(ctx, 4 * cc * cc);
        c.p(ctx, "sum = 4C^2", l1, rhs);
        c.p(ctx, "(-1)^n sum/4096^k = 4C^2", l2, rhs);
        c.p(ctx, "sum = (-1)^n sum/4096^k", l1, l2);
    } else {
        c.p2(ctx, "sum = 0", l1, 0);
        c.p2(ctx, "(-1)^n sum/4096^k = 0", l2, 0);
        c.p2(ctx, "sum = (-1)^n sum/4096^k", l1, l2);
    }
    done(c)
}

fn thm_3_3(ctx: &PrimeCtx) -> Result<Outcome> {
    let p = ctx.p;
    let l = ctx.cubes_half(ctx.rat_p2(-1, 8)?)?;
    let pn3 = eval_pn(ctx.n, ctx.zp2(3))?;
    let mut c;
    if p % 4 == 1 {
        let a = ctx.rep(4, &[XOneMod4])?.x;
        c = Checks::new("p ≡ 1 mod 4");
        c.p2(ctx, "sum = 4a^2-2p", l.value(), z(ctx, 4 * (a as i128).pow(2) - 2 * p as i128));
        let two_a = ctx.zp2(2 * a as i128);
        let rhs = ctx.zp2(sign_pow((p - 1) / 4) as i128) * (two_a - ctx.zp2(ctx.p_over(2 * a)? as i128));
        c.p2(ctx, "P_n(3) = ±(2a - p/(2a))", pn3.value(), rhs.value());
        c.p2(ctx, "sum = P_n(3)^2", l.value(), (pn3 * pn3).value());
    } else {
        c = Checks::new("p ≡ 3 mod 4");
        c.p2(ctx, "sum = 0", l.value(), 0);
        c.p(ctx, "P_n(3) = 0", pn3.value(), 0);
    }
    done(c)
}

fn zero_sums(ctx: &PrimeCtx, case: &str, ms: &[i128]) -> Result<Outcome> {
    let mut c = Checks::new(case);
    let vals: Vec<u64> = ms.iter().map(|&m| Ok(ctx.cubes_half(ctx.rat_p2(1, m)?)?.value())).collect::<Result<_>>()?;
    for (m, v) in ms.iter().zip(&vals) {
        c.p2(ctx, &format!("sum/({m})^k = 0"), *v, 0);
    }
    if vals.len() == 2 {
        c.p2(ctx, "forms agree", vals[0], vals[1]);
    }
    done(c)
}

fn thm_3_4_i(ctx: &PrimeCtx) -> Result<Outcome> {
    if ctx.p % 4 != 3 {
        return outside(ctx, "p ≡ 3 mod 4");
    }
    zero_sums(ctx, "p ≡ 3 mod 4", &[-512])
}

fn thm_3_4_ii(ctx: &PrimeCtx) -> Result<Outcome> {
    if !matches!(ctx.p % 8, 5 | 7) {
        return outside(ctx, "p ≡ 5,7 mod 8");
    }
    zero_sums(ctx, "p ≡ 5,7 mod 8", &[-64])
}

fn thm_3_4_iii(ctx: &PrimeCtx) -> Result<Outcome> {
    if ctx.p % 3 != 2 {
        return outside(ctx, "p ≡ 2 mod 3");
    }
    zero_sums(ctx, "p ≡ 2 mod 3", &[16, 256])
}

fn thm_4_3(ctx: &PrimeCtx) -> Result<Outcome> {
    let p = ctx.p;
    if !matches!(p % 8, 1 | 3) {
        return outside(ctx, "p ≡ 1,3 mod 8");
    }
    let cc = ctx.rep(2, &[XOneMod4])?.x;
    let s = ctx.c2c4_full(ctx.rat_p2(1, 128)?)?;
    let sign = ctx.zp2(sign_pow(p / 8 + ctx.n) as i128);
    let rhs = sign * (ctx.zp2(2 * cc as i128) - ctx.zp2(ctx.p_over(2 * cc)? as i128));
    let sq = ctx.c2sq_c4_full(ctx.rat_p2(1, 256)?)?.value();
    let mut c = Checks::new("p ≡ 1,3 mod 8");
    c.p2(ctx, "sum/128^k = ±(2c - p/(2c))", s.value(), rhs.value());
    c.p2(ctx, "(sum/128^k)^2 = sum C^2C4/256^k", (s * s).value(), sq);
    c.p2(ctx, "sum C^2C4/256^k = 4c^2-2p", sq, z(ctx, 4 * (cc as i128).pow(2) - 2 * p as i128));
    done(c)
}
