use std::fmt;

use num_integer::Integer;

use super::modular::{inv_mod, mul_mod, reduce};
use crate::error::{Error, Result};

/// A rational number `num/den` in lowest terms with `den > 0`.
///
/// It is a p-integer for every prime not dividing `den`; that condition is
/// checked when the value is reduced modulo a prime power.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PRational {
    num: i128,
    den: i128,
}

impl PRational {
    pub fn new(num: i128, den: i128) -> Self {
        assert!(den != 0, "zero denominator");
        let g = num.gcd(&den).max(1);
        let s = if den < 0 { -1 } else { 1 };
        PRational { num: s * num / g, den: s * den / g }
    }

    pub fn int(n: i128) -> Self {
        PRational { num: n, den: 1 }
    }

    pub fn num(&self) -> i128 {
        self.num
    }

    pub fn den(&self) -> i128 {
        self.den
    }

    /// `num · den⁻¹ mod m`.
    pub fn residue(&self, m: u64) -> Result<u64> {
        let inv = inv_mod(self.den, m).map_err(|_| Error::NotPIntegral { num: self.num, den: self.den, p: m })?;
        Ok(mul_mod(reduce(self.num, m), inv, m))
    }

    /// True when the prime `p` divides the numerator (so `1/self` is not p-integral).
    pub fn divisible_by(&self, p: u64) -> bool {
        self.num.rem_euclid(p as i128) == 0
    }
}

impl From<i64> for PRational {
    fn from(n: i64) -> Self {
        PRational::int(n as i128)
    }
}

impl fmt::Display for PRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes() {
        let r = PRational::new(6, -4);
        assert_eq!((r.num(), r.den()), (-3, 2));
        assert_eq!(PRational::new(0, 5), PRational::int(0));
    }

    #[test]
    fn residues() {
        assert_eq!(PRational::new(-5, 3).residue(7), Ok(3));
        assert_eq!(PRational::new(1, 2).residue(25), Ok(13));
        assert!(PRational::new(1, 10).residue(25).is_err());
        assert!(PRational::int(-3969).divisible_by(7));
    }
}
