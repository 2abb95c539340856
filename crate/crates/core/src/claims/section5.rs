//! Congruences for `Σ_{k<p} C(2k,k)²C(4k,2k)/mᵏ` at fixed `m`, together with
//! the CM character sums they reduce to and the conjectured mod `p²` forms.

use crate::arith::{sign_pow, FieldElem};
use crate::charsum::{char_sum, cm_curve, power_sum, Expected};
use crate::error::{Error, Result};
use crate::quadform::solve_form;
use crate::quadform::Condition::{XOneMod3, XOneMod4};

use super::ctx::{strict, Checks, PrimeCtx};
use super::pointwise::{point, septic_label, septic_split, sym_mod, SEPTIC};
use super::{Claim, ClaimStatus, Outcome};

pub(super) fn claims() -> Vec<Claim> {
    use ClaimStatus::{Conjectural, Proved};
    vec![
        point(
            "thm-5.1-i",
            Proved,
            &[2, 3, 7],
            "§5",
            "Σ_{k<p} C(2k,k)²C(4k,2k)/648ᵏ ≡ 0 mod p² (p ≡ 3 mod 4), 4a² mod p (p = a²+4b²)",
            &["p ≡ 1 mod 4", "p ≡ 3 mod 4"],
            |ctx| {
                let split = ctx.p % 4 == 1;
                fixed_m(ctx, 648, if split { "p ≡ 1 mod 4" } else { "p ≡ 3 mod 4" }, split.then_some(4))
            },
        ),
        point(
            "thm-5.1-ii",
            Proved,
            &[2, 3, 7],
            "§5",
            "Σ_{k<p} C(2k,k)²C(4k,2k)/(−144)ᵏ ≡ 0 mod p² (p ≡ 2 mod 3), 4A² mod p (p = A²+3B²)",
            &["p ≡ 1 mod 3", "p ≡ 2 mod 3"],
            |ctx| {
                let split = ctx.p % 3 == 1;
                fixed_m(ctx, -144, if split { "p ≡ 1 mod 3" } else { "p ≡ 2 mod 3" }, split.then_some(3))
            },
        ),
        point(
            "thm-5.1-iii",
            Proved,
            &[2, 3, 7],
            "§5",
            "Σ_{k<p} C(2k,k)²C(4k,2k)/(−3969)ᵏ ≡ 0 mod p² (p ≡ 3,5,6 mod 7), 4C² mod p (p = C²+7D²)",
            SEPTIC,
            |ctx| fixed_m(ctx, -3969, septic_label(ctx.p), septic_split(ctx.p).then_some(7)),
        ),
        point(
            "thm-5.2",
            Proved,
            &[2, 3, 7],
            "§5",
            "P_[p/4](5√−7/9) ≡ (3(7+√−7)/p)(C/7)2C or 0 mod p; Σ_{k<p} C(2k,k)²C(4k,2k)/81ᵏ ≡ 4C² mod p or 0 mod p²",
            SEPTIC,
            thm_5_2,
        ),
        point(
            "eq-5.1",
            Proved,
            &[2, 3, 7],
            "§5",
            "Σ((x³−35x−98)/p) = Σ((x³+21x²+112x)/p) = −2C(C/7) (p = C²+7D²) or 0",
            SEPTIC,
            eq_5_1,
        ),
        point(
            "thm-5.3",
            Proved,
            &[2],
            "§5",
            "Σ_{k<p} C(2k,k)²C(4k,2k)/(−1024)ᵏ ≡ 4u² mod p (p = u²+5v² ≡ 1,9 mod 20)",
            &["p ≡ 1,9 mod 20"],
            |ctx| cm_theorem(ctx, "thm-5.3", -1024),
        ),
        point(
            "thm-5.4",
            Proved,
            &[2, 3],
            "§5",
            "P_[p/4](7√3/12) ≡ ((2+2√3)/p)2x or 0 mod p; Σ_{k<p} C(2k,k)²C(4k,2k)/(−12288)ᵏ ≡ 4x² mod p (p = x²+9y²) or 0 mod p²",
            &["p ≡ 1 mod 12", "p ≡ 11 mod 12"],
            |ctx| cm_theorem(ctx, "thm-5.4", -12288),
        ),
        point(
            "thm-5.5",
            Proved,
            &[2, 3, 13],
            "§5",
            "Σ_{k<p} C(2k,k)²C(4k,2k)/(−82944)ᵏ ≡ 4x² mod p (p = x²+13y²) or 0 mod p², (13/p) = 1",
            &["p ≡ 1 mod 4", "p ≡ 3 mod 4"],
            |ctx| cm_theorem(ctx, "thm-5.5", -82944),
        ),
        point(
            "thm-5.6",
            Proved,
            &[2, 3, 7, 37],
            "§5",
            "Σ_{k<p} C(2k,k)²C(4k,2k)/(−2¹⁰·21⁴)ᵏ ≡ 4x² mod p (p = x²+37y²) or 0 mod p², (37/p) = 1",
            &["p ≡ 1 mod 4", "p ≡ 3 mod 4"],
            |ctx| cm_theorem(ctx, "thm-5.6", -1024 * 194481),
        ),
        point(
            "thm-5.7",
            Proved,
            &[2, 3],
            "§5",
            "P_[p/4](2√2/3) ≡ (−1)^((p−1)/2)(√2/p)(x/3)2x or 0 mod p; Σ_{k<p} C(2k,k)²C(4k,2k)/48^(2k) ≡ 4x² mod p (p = x²+6y²) or 0 mod p²",
            &["p ≡ 1,7 mod 24", "p ≡ 17,23 mod 24"],
            |ctx| cm_theorem(ctx, "thm-5.7", 48 * 48),
        ),
        point(
            "thm-5.8",
            Proved,
            &[2, 3],
            "§5",
            "Σ_{k<p} C(2k,k)²C(4k,2k)/12^(4k) ≡ 4x² mod p (p = x²+10y²) or 0 mod p²",
            &["p ≡ 1,9,11,19 mod 40", "p ≡ 21,29,31,39 mod 40"],
            |ctx| cm_theorem(ctx, "thm-5.8", 20736),
        ),
        point(
            "thm-5.9",
            Proved,
            &[2, 3, 11],
            "§5",
            "Σ_{k<p} C(2k,k)²C(4k,2k)/1584^(2k) ≡ 4x² mod p (p = x²+22y²) or 0 mod p², p ≡ ±1 mod 8",
            &["(p/11) = 1", "(p/11) = -1"],
            |ctx| cm_theorem(ctx, "thm-5.9", 1584 * 1584),
        ),
        point(
            "thm-5.10",
            Proved,
            &[2, 3, 11],
            "§5",
            "Σ_{k<p} C(2k,k)²C(4k,2k)/396^(4k) ≡ 4x² mod p (p = x²+58y²) or 0 mod p², (29/p) = 1",
            &["p ≡ 1,3 mod 8", "p ≡ 5,7 mod 8"],
            |ctx| cm_theorem(ctx, "thm-5.10", 396i128.pow(4)),
        ),
        point(
            "thm-5.11",
            Proved,
            &[2, 3, 7],
            "§5",
            "Σ_{k<p} C(2k,k)²C(4k,2k)/28^(4k) ≡ 4x² mod p (p = x²+18y²) or 0 mod p²",
            &["p ≡ 1,19 mod 24", "p ≡ 5,23 mod 24"],
            |ctx| cm_theorem(ctx, "thm-5.11", 28i128.pow(4)),
        ),
        point(
            "thm-5.12",
            Proved,
            &[2, 3, 5],
            "§5",
            "Σ_{k<p} C(2k,k)²C(4k,2k)/(−2¹⁴·3⁴·5)ᵏ ≡ 4x² mod p (p = x²+25y²) or 0 mod p²",
            &["p = x^2+25y^2", "p ≡ 3 mod 4"],
            |ctx| cm_theorem(ctx, "thm-5.12", -16384 * 81 * 5),
        ),
        point(
            "conj-1.9",
            Conjectural,
            &[2, 3, 7],
            "§1",
            "Σ_{k<p} C(2k,k)²C(4k,2k)/81ᵏ ≡ 4C²−2p mod p² (p = C²+7D²) or 0 mod p²",
            SEPTIC,
            conj_1_9,
        ),
        point(
            "conj-rem-5.1-5",
            Conjectural,
            &[2, 5],
            "§5",
            "Σ_{k<p} C(2k,k)²C(4k,2k)/(−1024)ᵏ ≡ 4x²−2p, 2p−2x² or 0 mod p²",
            REM_5_1,
            |ctx| remark_5_1(ctx, 5, -1024),
        ),
        point(
            "conj-rem-5.1-13",
            Conjectural,
            &[2, 3, 13],
            "§5",
            "Σ_{k<p} C(2k,k)²C(4k,2k)/(−82944)ᵏ ≡ 4x²−2p, 2p−2x² or 0 mod p²",
            REM_5_1,
            |ctx| remark_5_1(ctx, 13, -82944),
        ),
        point(
            "conj-rem-5.1-37",
            Conjectural,
            &[2, 3, 7, 37],
            "§5",
            "Σ_{k<p} C(2k,k)²C(4k,2k)/(−2¹⁰·21⁴)ᵏ ≡ 4x²−2p, 2p−2x² or 0 mod p²",
            REM_5_1,
            |ctx| remark_5_1(ctx, 37, -1024 * 194481),
        ),
        point(
            "conj-rem-5.2",
            Conjectural,
            &[2, 3],
            "§5",
            "Σ_{k<p} C(2k,k)²C(4k,2k)/(−12288)ᵏ ≡ (−1)^[x/6](4x²−2p) mod p, −4(xy/3)xy mod p² or 0 mod p²",
            &["p ≡ 1 mod 12", "p ≡ 5 mod 12", "p ≡ 3 mod 4"],
            conj_rem_5_2,
        ),
        point(
            "conj-rem-5.3",
            Conjectural,
            &[2, 7],
            "§5",
            "Σ_{k<p} C(2k,k)²C(4k,2k)/28^(4k) ≡ 4x²−2p mod p (p = x²+2y²) or 0 mod p²",
            &["p ≡ 1,3 mod 8", "p ≡ 5,7 mod 8"],
            conj_rem_5_3,
        ),
        point(
            "conj-rem-5.4",
            Conjectural,
            &[2, 3, 5],
            "§5",
            "Σ_{k<p} C(2k,k)²C(4k,2k)/(−2¹⁴·3⁴·5)ᵏ ≡ 4x²−2p mod p, −4xy mod p² or 0 mod p²",
            &["p = x^2+25y^2", "p = x^2+y^2, 5 | x-y", "p ≡ 3 mod 4"],
            conj_rem_5_4,
        ),
        point(
            "conj-5.5-3",
            Conjectural,
            &[2, 3],
            "§5",
            "Σ_{k<p} C(2k,k)²C(4k,2k)/48^(2k) ≡ 4x²−2p, 2p−8x² or 0 mod p²",
            EQ_5_5,
            |ctx| eq_5_5(ctx, 3, 48 * 48),
        ),
        point(
            "conj-5.5-5",
            Conjectural,
            &[2, 3, 5],
            "§5",
            "Σ_{k<p} C(2k,k)²C(4k,2k)/12^(4k) ≡ 4x²−2p, 2p−8x² or 0 mod p²",
            EQ_5_5,
            |ctx| eq_5_5(ctx, 5, 20736),
        ),
        point(
            "conj-5.5-11",
            Conjectural,
            &[2, 3, 11],
            "§5",
            "Σ_{k<p} C(2k,k)²C(4k,2k)/1584^(2k) ≡ 4x²−2p, 2p−8x² or 0 mod p²",
            EQ_5_5,
            |ctx| eq_5_5(ctx, 11, 1584 * 1584),
        ),
        point(
            "conj-5.5-29",
            Conjectural,
            &[2, 3, 11, 29],
            "§5",
            "Σ_{k<p} C(2k,k)²C(4k,2k)/396^(4k) ≡ 4x²−2p, 2p−8x² or 0 mod p²",
            EQ_5_5,
            |ctx| eq_5_5(ctx, 29, 396i128.pow(4)),
        ),
    ]
}

const REM_5_1: &[&str] = &["(m/p) = (-1/p) = 1", "(m/p) = (-1/p) = -1", "(m/p) = -(-1/p)"];
const EQ_5_5: &[&str] = &["(2/p) = (-b/p) = 1", "(2/p) = (-b/p) = -1", "(2/p) = -(-b/p)"];

fn done(c: Checks) -> Result<Outcome> {
    Ok(Outcome::Checked(c))
}

fn fi(ctx: &PrimeCtx, v: i64) -> FieldElem {
    ctx.fe(v as i128)
}

fn z(ctx: &PrimeCtx, v: i128) -> u64 {
    ctx.zp2(v).value()
}

/// `Σ_x (x³+4x²+2(1−t)x)^((p−1)/2)`.
fn quartic_power_sum(ctx: &PrimeCtx, t: FieldElem) -> FieldElem {
    power_sum([ctx.fe(0), ctx.fe(2) * (ctx.fe(1) - t), ctx.fe(4), ctx.fe(1)])
}

/// The general reduction at `m`: `L ≡ P_[p/4](t)² ≡ (power sum)² mod p`
/// with `t = √(1−256/m)`, for both roots.
fn reduction_chain(ctx: &PrimeCtx, c: &mut Checks, m: i128, l: u64) -> Result<()> {
    let u = ctx.fe(1) - ctx.fe(256) * ctx.rat(1, m)?;
    for flip in [false, true] {
        let t = ctx.sqrt_of(u, flip)?;
        let a = ctx.pq(t)?;
        let b = quartic_power_sum(ctx, t);
        c.chain(&[("L", ctx.fe((l % ctx.p) as i128)), ("P_q(t)^2", a * a), ("(power sum)^2", b * b)]);
    }
    Ok(())
}

/// `L ≡ 4x² mod p` when `split` names the form `x² + dy²`, else `L ≡ 0 mod p²`.
fn fixed_m(ctx: &PrimeCtx, m: i128, case: &str, split: Option<u64>) -> Result<Outcome> {
    let l = ctx.sum_over_m(m)?;
    let mut c = Checks::new(case);
    match split {
        Some(d) => {
            let x = ctx.rep(d, &[])?.x as i128;
            c.p(ctx, "L = 4x^2", l, z(ctx, 4 * x * x));
        }
        None => c.p2(ctx, "L = 0", l, 0),
    }
    reduction_chain(ctx, &mut c, m, l)?;
    done(c)
}

fn thm_5_2(ctx: &PrimeCtx) -> Result<Outcome> {
    let p = ctx.p;
    let l = ctx.sum_over_m(81)?;
    let mut c = Checks::new(septic_label(p));
    let cc = if septic_split(p) { Some(ctx.rep(7, &[])?.x) } else { None };
    for flip in [false, true] {
        let r = ctx.sqrt(-7, flip)?;
        let lhs = ctx.pq(fi(ctx, 5) * r * ctx.rat(1, 9)?)?;
        let rhs = match cc {
            Some(cc) => {
                let s = strict((fi(ctx, 3) * (fi(ctx, 7) + r)).legendre())? as i64;
                fi(ctx, s * sym_mod(cc, 7)? * 2 * cc)
            }
            None => ctx.fe(0),
        };
        c.field("P_q(5√-7/9)", lhs, rhs);
    }
    match cc {
        Some(cc) => c.p(ctx, "L(81) = 4C^2", l, z(ctx, 4 * cc as i128 * cc as i128)),
        None => c.p2(ctx, "L(81) = 0", l, 0),
    }
    reduction_chain(ctx, &mut c, 81, l)?;
    done(c)
}

fn eq_5_1(ctx: &PrimeCtx) -> Result<Outcome> {
    let p = ctx.p;
    let rhs = if septic_split(p) {
        let cc = ctx.rep(7, &[])?.x;
        -2 * cc * sym_mod(cc, 7)?
    } else {
        0
    };
    let mut c = Checks::new(septic_label(p));
    c.exact("sum((x^3-35x-98)/p)", ctx.chi_sum([-98, -35, 0, 1]), rhs);
    c.exact("sum((x^3+21x^2+112x)/p)", ctx.chi_sum([0, 112, 21, 1]), rhs);
    done(c)
}

/// A CM theorem: the character sum of the table curve, `L` at `m`, the
/// general reduction, and the extra Legendre-value statements of 5.4 and 5.7.
fn cm_theorem(ctx: &PrimeCtx, id: &str, m: i128) -> Result<Outcome> {
    let p = ctx.p;
    let curve = cm_curve(id).ok_or_else(|| Error::UnknownClaim(id.to_string()))?;
    let (case, _) = match curve.expected(p, false) {
        Ok(v) => v,
        Err(Error::Inapplicable(msg)) => return Ok(Outcome::Inapplicable(msg)),
        Err(e) => return Err(e),
    };
    let l = ctx.sum_over_m(m)?;
    let mut c = Checks::new(case);
    let split_x = match curve.expected(p, false)?.1 {
        Expected::Exact(0) => None,
        _ => Some(ctx.rep(curve.form, &[])?.x),
    };
    match split_x {
        Some(x) => c.p(ctx, "L = 4x^2", l, z(ctx, 4 * x as i128 * x as i128)),
        None => c.p2(ctx, "L = 0", l, 0),
    }
    for flip in [false, true] {
        let (_, expected) = curve.expected(p, flip)?;
        let s = char_sum(&curve.resolve(p, flip)?, ctx.table());
        match expected {
            Expected::PlusMinus(u) => c.exact("|S| = 2|x|", s.abs(), u.abs()),
            Expected::Exact(u) => c.exact("S", s, u),
        }
        c.p(ctx, "L = S^2", l, z(ctx, s as i128 * s as i128));
    }
    reduction_chain(ctx, &mut c, m, l)?;
    match id {
        "thm-5.4" => {
            let x = if split_x.is_some() { Some(ctx.rep(9, &[XOneMod3])?.x) } else { None };
            for flip in [false, true] {
                let s3 = ctx.sqrt(3, flip)?;
                let lhs = ctx.pq(fi(ctx, 7) * s3 * ctx.rat(1, 12)?)?;
                let rhs = match x {
                    Some(x) => fi(ctx, strict((fi(ctx, 2) + fi(ctx, 2) * s3).legendre())? as i64 * 2 * x),
                    None => ctx.fe(0),
                };
                c.field("P_q(7√3/12)", lhs, rhs);
            }
        }
        "thm-5.7" => {
            for flip in [false, true] {
                let s2 = ctx.sqrt(2, flip)?;
                let lhs = ctx.pq(fi(ctx, 2) * s2 * ctx.rat(1, 3)?)?;
                let rhs = match split_x {
                    Some(x) => {
                        let l2 = strict(s2.legendre())? as i64;
                        fi(ctx, sign_pow(ctx.n) * l2 * sym_mod(x, 3)? * 2 * x)
                    }
                    None => ctx.fe(0),
                };
                c.field("P_q(2√2/3)", lhs, rhs);
            }
        }
        _ => {}
    }
    done(c)
}

fn conj_1_9(ctx: &PrimeCtx) -> Result<Outcome> {
    let p = ctx.p;
    let l = ctx.sum_over_m(81)?;
    let mut c = Checks::new(septic_label(p));
    if septic_split(p) {
        let cc = ctx.rep(7, &[])?.x as i128;
        c.p2(ctx, "L(81) = 4C^2-2p", l, z(ctx, 4 * cc * cc - 2 * p as i128));
    } else {
        c.p2(ctx, "L(81) = 0", l, 0);
    }
    done(c)
}

fn remark_5_1(ctx: &PrimeCtx, m: u64, f: i128) -> Result<Outcome> {
    let p = ctx.p as i128;
    let l = ctx.sum_over_m(f)?;
    let (sm, s1) = (ctx.sym(m as i128)?, ctx.sym(-1)?);
    let mut c;
    if sm == 1 && s1 == 1 {
        c = Checks::new(REM_5_1[0]);
        let x = ctx.rep(m, &[])?.x as i128;
        c.p2(ctx, "L = 4x^2-2p", l, z(ctx, 4 * x * x - 2 * p));
    } else if sm == -1 && s1 == -1 {
        c = Checks::new(REM_5_1[1]);
        let (x, _) = solve_form(2 * ctx.p, 1, m)
            .ok_or_else(|| Error::Registry(format!("no 2p = x^2+{m}y^2 for p = {p}")))?;
        c.p2(ctx, "L = 2p-2x^2", l, z(ctx, 2 * p - 2 * x as i128 * x as i128));
    } else {
        c = Checks::new(REM_5_1[2]);
        c.p2(ctx, "L = 0", l, 0);
    }
    done(c)
}

fn conj_rem_5_2(ctx: &PrimeCtx) -> Result<Outcome> {
    let p = ctx.p;
    let l = ctx.sum_over_m(-12288)?;
    let mut c;
    match p % 12 {
        1 => {
            c = Checks::new("p ≡ 1 mod 12");
            let x = ctx.rep(1, &[XOneMod4])?.x as i128;
            let v = sign_pow(x.div_euclid(6).unsigned_abs() as u64) as i128 * (4 * x * x - 2 * p as i128);
            c.p(ctx, "L = (-1)^[x/6](4x^2-2p)", l, z(ctx, v));
        }
        5 => {
            c = Checks::new("p ≡ 5 mod 12");
            let r = ctx.rep(1, &[XOneMod4])?;
            let xy = r.x * r.y;
            c.p2(ctx, "L = -4(xy/3)xy", l, z(ctx, -4 * sym_mod(xy, 3)? as i128 * xy as i128));
        }
        _ => {
            c = Checks::new("p ≡ 3 mod 4");
            c.p2(ctx, "L = 0", l, 0);
        }
    }
    done(c)
}

fn conj_rem_5_3(ctx: &PrimeCtx) -> Result<Outcome> {
    let p = ctx.p;
    let l = ctx.sum_over_m(28i128.pow(4))?;
    let mut c;
    if matches!(p % 8, 1 | 3) {
        c = Checks::new("p ≡ 1,3 mod 8");
        let x = ctx.rep(2, &[])?.x as i128;
        c.p(ctx, "L = 4x^2-2p", l, z(ctx, 4 * x * x - 2 * p as i128));
    } else {
        c = Checks::new("p ≡ 5,7 mod 8");
        c.p2(ctx, "L = 0", l, 0);
    }
    done(c)
}

fn conj_rem_5_4(ctx: &PrimeCtx) -> Result<Outcome> {
    let p = ctx.p;
    let l = ctx.sum_over_m(-16384 * 81 * 5)?;
    let mut c;
    if p % 4 == 3 {
        c = Checks::new("p ≡ 3 mod 4");
        c.p2(ctx, "L = 0", l, 0);
    } else if matches!(p % 5, 1 | 4) {
        c = Checks::new("p = x^2+25y^2");
        let x = ctx.rep(25, &[])?.x as i128;
        c.p(ctx, "L = 4x^2-2p", l, z(ctx, 4 * x * x - 2 * p as i128));
    } else {
        c = Checks::new("p = x^2+y^2, 5 | x-y");
        let r = ctx.rep(1, &[])?;
        // one of (x, y), (x, -y) has 5 | x − y
        let (x, y) = if (r.x - r.y) % 5 == 0 { (r.x, r.y) } else { (r.x, -r.y) };
        if (x - y) % 5 != 0 {
            return Err(Error::Registry(format!("no x^2+y^2 = {p} with 5 | x-y")));
        }
        c.p2(ctx, "L = -4xy", l, z(ctx, -4 * x as i128 * y as i128));
    }
    done(c)
}

fn eq_5_5(ctx: &PrimeCtx, b: u64, f: i128) -> Result<Outcome> {
    let p = ctx.p as i128;
    let l = ctx.sum_over_m(f)?;
    let (s2, sb) = (ctx.sym(2)?, ctx.sym(-(b as i128))?);
    let mut c;
    if s2 == 1 && sb == 1 {
        c = Checks::new(EQ_5_5[0]);
        let x = ctx.rep(2 * b, &[])?.x as i128;
        c.p2(ctx, "L = 4x^2-2p", l, z(ctx, 4 * x * x - 2 * p));
    } else if s2 == -1 && sb == -1 {
        c = Checks::new(EQ_5_5[1]);
        let (x, _) = solve_form(ctx.p, 2, b)
            .ok_or_else(|| Error::Registry(format!("no p = 2x^2+{b}y^2 for p = {p}")))?;
        c.p2(ctx, "L = 2p-8x^2", l, z(ctx, 2 * p - 8 * x as i128 * x as i128));
    } else {
        c = Checks::new(EQ_5_5[2]);
        c.p2(ctx, "L = 0", l, 0);
    }
    done(c)
}
