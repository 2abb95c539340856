use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use proptest::prelude::*;
use proptest::sample::select;

use supercong::arith::{hensel_sqrt_p2, legendre_symbol, pow_mod, sqrt_mod};
use supercong::charsum::{char_sum, count_points, depress, scale_check, Cubic, QrTable};
use supercong::legendre::{eval_pn, eval_pn_by_sum};
use supercong::primes::primes_in;
use supercong::quadform::{normalize, represent, Condition};
use supercong::{sqrt_in_field, FieldDesc, FieldElem, Residue, ValRing, Zmod};

fn primes(hi: u64) -> impl Strategy<Value = u64> {
    select(primes_in(3, hi))
}

fn primes_from_5(hi: u64) -> impl Strategy<Value = u64> {
    select(primes_in(5, hi))
}

fn mod_big(x: &BigInt, m: u64) -> u64 {
    let m = BigInt::from(m);
    let r = ((x % &m) + &m) % &m;
    r.to_u64().unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn euler_criterion(p in primes(5000), a in any::<i64>()) {
        let l = legendre_symbol(a as i128, p).unwrap();
        let e = pow_mod(a.rem_euclid(p as i64) as u64, (p - 1) / 2, p);
        let expect = match l { 0 => 0, 1 => 1, _ => p - 1 };
        prop_assert_eq!(e, expect);
    }

    #[test]
    fn field_sqrt_squares_back(p in primes(5000), a in 0u64..5000) {
        let a = a % p;
        let r = sqrt_in_field(a as i128, p).unwrap();
        let sq = r * r;
        prop_assert_eq!((sq.re(), sq.im()), (a, 0));
        if let Some(s) = sqrt_mod(a, p) {
            prop_assert!(s <= p - s || s == 0);
        }
    }

    #[test]
    fn hensel_lift_is_root_mod_p2(p in primes(3000), a in 1u64..1_000_000) {
        prop_assume!(a % p != 0);
        if let Some(r) = sqrt_mod(a % p, p) {
            let p2 = p * p;
            let s = hensel_sqrt_p2(a, r, p).unwrap();
            prop_assert_eq!((s as u128 * s as u128 % p2 as u128) as u64, a % p2);
            prop_assert_eq!(s % p, r);
        }
    }

    #[test]
    fn frobenius_is_conjugation(p in primes(3000), a in any::<u32>(), b in any::<u32>()) {
        let desc = FieldDesc::extension(p).unwrap();
        let z = FieldElem::from_parts(a as i128, b as i128, desc).unwrap();
        prop_assert_eq!(z.pow(p), z.conj());
    }

    #[test]
    fn valunit_matches_big_integers(p in primes(2000), xs in prop::collection::vec(-10_000i64..10_000, 1..8)) {
        let ring = ValRing::new(p).unwrap();
        let p2 = p * p;
        let mut prod = ring.one();
        let mut big_prod = BigInt::from(1);
        let mut sum = ring.from_int(0);
        let mut big_sum = BigInt::from(0);
        for &x in &xs {
            let v = ring.from_int(x as i128);
            prod = ring.mul(prod, v);
            big_prod *= x;
            sum = ring.add(sum, v);
            big_sum += x;
        }
        prop_assert_eq!(ring.reduce_p2(prod), mod_big(&big_prod, p2));
        prop_assert_eq!(ring.reduce_p2(sum), mod_big(&big_sum, p2));
    }

    #[test]
    fn legendre_parity(p in primes(2000), n in 0u64..2000, x in any::<u32>()) {
        let n = n % p;
        let x = Zmod::new(x as i128, p);
        let sign = if n % 2 == 0 { x.one() } else { -x.one() };
        prop_assert_eq!(eval_pn(n, -x).unwrap(), sign * eval_pn(n, x).unwrap());
    }

    #[test]
    fn legendre_routes_agree(p in primes(2000), n in 0u64..2000, x in any::<u32>()) {
        let n = n % p;
        let x = Zmod::new(x as i128, p * p);
        prop_assert_eq!(eval_pn(n, x).unwrap(), eval_pn_by_sum(n, x).unwrap());
    }

    #[test]
    fn char_sum_depression_invariant(p in primes_from_5(1500), c in prop::array::uniform4(any::<i32>())) {
        let c3 = c[3].rem_euclid(p as i32).max(1);
        let f = Cubic::new(p, [c[0] as i128, c[1] as i128, c[2] as i128, c3 as i128]);
        let t = QrTable::new(p).unwrap();
        let (g, _) = depress(&f).unwrap();
        prop_assert_eq!(g.coeffs()[2], 0);
        prop_assert_eq!(g.coeffs()[3], f.coeffs()[3]);
        prop_assert_eq!(char_sum(&f, &t), char_sum(&g, &t));
    }

    #[test]
    fn point_count_matches_char_sum(p in primes(1500), m in any::<i32>(), n in any::<i32>()) {
        let f = Cubic::depressed(p, m as i128, n as i128);
        let t = QrTable::new(p).unwrap();
        prop_assert_eq!(count_points(&f) as i64, p as i64 + 1 + char_sum(&f, &t));
    }

    #[test]
    fn char_sum_scaling(p in primes(1500), m in any::<i32>(), n in any::<i32>(), a in any::<i32>()) {
        let t = QrTable::new(p).unwrap();
        prop_assert!(scale_check(m as i128, n as i128, a as i128, &t));
    }

    #[test]
    fn weil_bound_on_random_cubics(p in primes(1500), m in any::<i32>(), n in any::<i32>()) {
        let f = Cubic::depressed(p, m as i128, n as i128);
        prop_assume!(f.is_nonsingular());
        let s = char_sum(&f, &QrTable::new(p).unwrap());
        prop_assert!((s * s) as u64 <= 4 * p);
    }

    #[test]
    fn normalization_keeps_value(p in primes(10_000), d in select(vec![1u64, 2, 3, 4, 7])) {
        if let Some(rep) = represent(p, d) {
            let value = rep.value();
            prop_assert_eq!(value, p);
            let conds: &[Condition] = match d {
                1 => &[Condition::XOdd, Condition::XOneMod4],
                2 | 4 => &[Condition::XOneMod4],
                3 => &[Condition::XOneMod3],
                _ => &[Condition::YEven],
            };
            for &c in conds {
                if let Ok(r) = normalize(rep.clone(), c) {
                    prop_assert_eq!(r.value(), value);
                    prop_assert_eq!(r.x.abs(), rep.x.abs());
                    prop_assert_eq!(r.y.abs(), rep.y.abs());
                }
            }
        }
    }
}

#[test]
fn genus_classes() {
    for p in primes_in(3, 10_000) {
        if p != 7 {
            assert_eq!(represent(p, 7).is_some(), [1, 2, 4].contains(&(p % 7)), "p = {p}, d = 7");
        }
        if p != 5 {
            assert_eq!(represent(p, 10).is_some(), [1, 9, 11, 19].contains(&(p % 40)), "p = {p}, d = 10");
        }
        assert_eq!(represent(p, 2).is_some(), [1, 3].contains(&(p % 8)), "p = {p}, d = 2");
    }
}

#[test]
fn half_sum_matches_full_sum_mod_p() {
    use supercong::binomials::{coefficients, Series};
    for p in primes_in(5, 400) {
        let ring = ValRing::new(p).unwrap();
        let c = coefficients(p, Series::CentralCubed, p - 1).unwrap();
        for m in [1i64, -8, 64, 256, -512, 4096] {
            let inv = supercong::arith::inv_mod(m as i128, p).unwrap();
            let mut acc = [0u64; 2];
            let mut w = 1u64;
            for (k, v) in c.iter().enumerate() {
                let term = ring.reduce_p2(*v) % p * w % p;
                if k as u64 <= (p - 1) / 2 {
                    acc[0] = (acc[0] + term) % p;
                }
                acc[1] = (acc[1] + term) % p;
                w = w * inv % p;
            }
            assert_eq!(acc[0], acc[1], "p = {p}, m = {m}");
        }
    }
}

#[test]
fn convolution_sums_match_stream_mod_p2() {
    use supercong::binomials::{coefficients, Series};
    use supercong::identities::lemma_4_1_sides;
    for p in primes_in(5, 60) {
        let ring = ValRing::new(p).unwrap();
        let quartic = coefficients(p, Series::CentralQuartic, p - 1).unwrap();
        for m in 0..p as i64 {
            let (_, right) = lemma_4_1_sides(m);
            let streamed = (0..=m as usize).fold(0u64, |acc, k| {
                let a = ring.reduce_p2(quartic[k]) as u128;
                let b = ring.reduce_p2(quartic[m as usize - k]) as u128;
                ((acc as u128 + a * b) % (p * p) as u128) as u64
            });
            assert_eq!(streamed, mod_big(&right, p * p), "p = {p}, m = {m}");
            assert!(!right.is_negative());
        }
    }
}
