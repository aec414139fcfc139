//! Arbitrary-precision rationals, backed by `num-rational`.
//!
//! `BigRational` already maintains the canonical form we need (reduced,
//! positive denominator, zero as 0/1), so this module only adds the
//! `Coeff` impls, parsing, and seeded sampling helpers.

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use super::coeff::{Coeff, CoeffField};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(v: i64) -> Int {
    BigInt::from(v)
}

pub fn rat(num: i64, den: i64) -> Rat {
    assert!(den != 0, "zero denominator");
    BigRational::new(int(num), int(den))
}

pub fn rat_int(v: i64) -> Rat {
    BigRational::from_integer(int(v))
}

/// Parse `"3"`, `"-7/2"` style literals.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().ok()?;
            Some(BigRational::from_integer(n))
        }
    }
}

/// Nonzero rational with numerator in `[-999, 999]` and denominator in `[1, 9]`.
pub fn random_rat<R: Rng>(rng: &mut R) -> Rat {
    let num = loop {
        let v = rng.gen_range(-999i64..=999);
        if v != 0 {
            break v;
        }
    };
    let den = rng.gen_range(1i64..=9);
    rat(num, den)
}

/// Formats without the `BigRational` debug noise: `-3/2`, `5`.
pub fn rat_str(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// True when the rational is an integer.
pub fn rat_is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// Reduce a rational modulo `p`; `None` if the denominator vanishes mod `p`.
pub fn rat_mod_p(r: &Rat, p: u64) -> Option<u64> {
    let pi = BigInt::from(p);
    let den = r.denom() % &pi;
    if den.is_zero() {
        return None;
    }
    let num = ((r.numer() % &pi) + &pi) % &pi;
    let den = ((den + &pi) % &pi).to_u64_digits().1;
    let den = if den.is_empty() { 0 } else { den[0] };
    let num = {
        let d = num.to_u64_digits().1;
        if d.is_empty() {
            0
        } else {
            d[0]
        }
    };
    let inv = super::fp::inv_mod(den, p)?;
    Some(super::fp::mul_mod(num, inv, p))
}

/// Signed remainder of an integer mod `p`, mapped into `[0, p)`.
pub fn int_mod_p(v: &Int, p: u64) -> u64 {
    let pi = BigInt::from(p);
    let m = ((v % &pi) + &pi) % &pi;
    let (sign, digits) = m.to_u64_digits();
    debug_assert!(sign != Sign::Minus);
    if digits.is_empty() {
        0
    } else {
        digits[0]
    }
}

impl Coeff for Rat {
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, other: &Self) -> Option<Self> {
        if Zero::is_zero(other) {
            None
        } else {
            Some(self / other)
        }
    }
    fn is_invertible(&self) -> bool {
        !Zero::is_zero(self)
    }
    fn from_i64_like(&self, v: i64) -> Self {
        rat_int(v)
    }
}

impl CoeffField for Rat {
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Least common multiple of denominators, used to clear a row to integers.
pub fn denom_lcm(values: &[Rat]) -> Int {
    let mut acc = BigInt::one();
    for v in values {
        let d = v.denom();
        let g = num_integer::Integer::gcd(&acc, d);
        acc = acc / g * d;
    }
    acc.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rat("-7/2").unwrap(), rat(-7, 2));
        assert_eq!(parse_rat("5").unwrap(), rat_int(5));
        assert_eq!(parse_rat("4/6").unwrap(), rat(2, 3));
        assert!(parse_rat("1/0").is_none());
        assert_eq!(rat_str(&rat(-6, 4)), "-3/2");
    }

    #[test]
    fn mod_p_reduction() {
        assert_eq!(rat_mod_p(&rat(1, 2), 7), Some(4)); // 2*4 = 8 = 1 mod 7
        assert_eq!(rat_mod_p(&rat(1, 7), 7), None);
        assert_eq!(rat_mod_p(&rat(-3, 1), 7), Some(4));
    }

    #[test]
    fn denominator_lcm() {
        let vals = vec![rat(1, 2), rat(5, 6), rat(-1, 4)];
        assert_eq!(denom_lcm(&vals), int(12));
    }
}
