//! Prime fields F_p for word-sized p, plus the modular utilities used by
//! the multi-modular determinant and rank engines.

use rand::Rng;
use serde::Serialize;

use super::coeff::{Coeff, CoeffField};

pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

pub fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + (p - b)
    }
}

pub fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse mod p via extended Euclid; `None` for zero.
pub fn inv_mod(a: u64, p: u64) -> Option<u64> {
    if a % p == 0 {
        return None;
    }
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1, "modulus not prime or input not coprime");
    let t = ((t0 % p as i128) + p as i128) % p as i128;
    Some(t as u64)
}

/// Deterministic Miller-Rabin, valid for all u64 inputs.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// The first `count` primes at or below `start`, descending.
pub fn primes_below(start: u64, count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut n = start | 1;
    while out.len() < count {
        if is_prime_u64(n) {
            out.push(n);
        }
        n -= 2;
    }
    out
}

/// Default prime pool for modular runs: just below 2^62.
pub fn modular_primes(count: usize) -> Vec<u64> {
    primes_below((1u64 << 62) - 1, count)
}

/// Square root mod an odd prime (Tonelli-Shanks). `None` if not a residue.
pub fn sqrt_mod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return Some(0);
    }
    if p == 2 {
        return Some(a);
    }
    if pow_mod(a, (p - 1) / 2, p) != 1 {
        return None;
    }
    if p % 4 == 3 {
        return Some(pow_mod(a, (p + 1) / 4, p));
    }
    // Tonelli-Shanks for p = 1 mod 4.
    let mut q = p - 1;
    let mut s = 0u32;
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let mut z = 2;
    while pow_mod(z, (p - 1) / 2, p) != p - 1 {
        z += 1;
    }
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, (q + 1) / 2, p);
    while t != 1 {
        let mut i = 0u32;
        let mut tt = t;
        while tt != 1 {
            tt = mul_mod(tt, tt, p);
            i += 1;
        }
        let b = pow_mod(c, 1u64 << (m - i - 1), p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    Some(r)
}

/// An element of F_p. The modulus rides along with the value; mixing moduli
/// is a programming error and panics.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct FpElem {
    pub value: u64,
    pub modulus: u64,
}

impl FpElem {
    pub fn new(value: i64, p: u64) -> Self {
        debug_assert!(is_prime_u64(p), "modulus must be prime");
        let v = value.rem_euclid(p as i64) as u64;
        FpElem { value: v, modulus: p }
    }

    pub fn from_u64(value: u64, p: u64) -> Self {
        FpElem { value: value % p, modulus: p }
    }

    fn check(&self, other: &Self) -> u64 {
        assert_eq!(self.modulus, other.modulus, "mixed prime fields");
        self.modulus
    }

    pub fn pow(&self, e: u64) -> Self {
        FpElem { value: pow_mod(self.value, e, self.modulus), modulus: self.modulus }
    }
}

impl std::fmt::Debug for FpElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

impl std::fmt::Display for FpElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Coeff for FpElem {
    fn zero_like(&self) -> Self {
        FpElem { value: 0, modulus: self.modulus }
    }
    fn one_like(&self) -> Self {
        FpElem { value: 1 % self.modulus, modulus: self.modulus }
    }
    fn is_zero(&self) -> bool {
        self.value == 0
    }
    fn add(&self, other: &Self) -> Self {
        let p = self.check(other);
        FpElem { value: add_mod(self.value, other.value, p), modulus: p }
    }
    fn sub(&self, other: &Self) -> Self {
        let p = self.check(other);
        FpElem { value: sub_mod(self.value, other.value, p), modulus: p }
    }
    fn mul(&self, other: &Self) -> Self {
        let p = self.check(other);
        FpElem { value: mul_mod(self.value, other.value, p), modulus: p }
    }
    fn neg(&self) -> Self {
        let p = self.modulus;
        FpElem { value: if self.value == 0 { 0 } else { p - self.value }, modulus: p }
    }
    fn exact_div(&self, other: &Self) -> Option<Self> {
        self.div(other)
    }
    fn is_invertible(&self) -> bool {
        self.value != 0
    }
    fn from_i64_like(&self, v: i64) -> Self {
        FpElem::new(v, self.modulus)
    }
    fn characteristic(&self) -> u64 {
        self.modulus
    }
}

impl CoeffField for FpElem {
    fn inv(&self) -> Option<Self> {
        inv_mod(self.value, self.modulus).map(|v| FpElem { value: v, modulus: self.modulus })
    }
}

/// Uniform element of F_p.
pub fn random_fp<R: Rng>(rng: &mut R, p: u64) -> FpElem {
    FpElem::from_u64(rng.gen_range(0..p), p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64((1u64 << 61) - 1));
        assert!(!is_prime_u64(1u64 << 61));
        assert!(!is_prime_u64(3215031751)); // strong pseudoprime to bases 2,3,5,7
        let ps = modular_primes(4);
        assert_eq!(ps.len(), 4);
        for p in &ps {
            assert!(*p > (1u64 << 61) && is_prime_u64(*p));
        }
    }

    #[test]
    fn field_ops() {
        let p = 11;
        let a = FpElem::new(7, p);
        let b = FpElem::new(-3, p);
        assert_eq!(b.value, 8);
        assert_eq!(a.add(&b).value, 4);
        assert_eq!(a.mul(&b).value, 1);
        assert_eq!(a.inv().unwrap().value, 8);
        assert_eq!(a.pow(10).value, 1);
    }

    #[test]
    fn modular_sqrt() {
        for p in [3u64, 5, 7, 11, 13, 17, 10007] {
            for x in 0..20.min(p) {
                let sq = mul_mod(x, x, p);
                let r = sqrt_mod(sq, p).expect("square must have a root");
                assert_eq!(mul_mod(r, r, p), sq);
            }
        }
        assert!(sqrt_mod(5, 3).is_none() || pow_mod(5 % 3, 1, 3) == 0);
        assert_eq!(sqrt_mod(2, 5), None); // 2 is not a QR mod 5
    }
}
