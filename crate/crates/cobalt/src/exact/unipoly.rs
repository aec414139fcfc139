//! Dense univariate polynomials over an exact coefficient ring.
//!
//! Coefficients are stored in ascending degree order; the vector is empty
//! for the zero polynomial and its last entry is nonzero otherwise.

use super::coeff::{Coeff, CoeffField};
use super::ExactError;

#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly<C: Coeff> {
    coeffs: Vec<C>,
}

impl<C: Coeff> UniPoly<C> {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn from_coeffs(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn constant(c: C) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn monomial(c: C, deg: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![c.zero_like(); deg + 1];
        coeffs[deg] = c;
        UniPoly { coeffs }
    }

    /// The variable itself, built from a coefficient witness.
    pub fn var(like: &C) -> Self {
        Self::from_coeffs(vec![like.zero_like(), like.one_like()])
    }

    pub fn one(like: &C) -> Self {
        Self::constant(like.one_like())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Degree with deg(0) = 0, for size formulas that treat 0 as constant.
    pub fn degree_or0(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Option<&C> {
        self.coeffs.get(i)
    }

    /// Coefficient of degree `i`, materializing zero from a witness.
    pub fn coeff_or(&self, i: usize, like: &C) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(|| like.zero_like())
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let c = match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            };
            out.push(c);
        }
        Self::from_coeffs(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        UniPoly { coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::from_coeffs(out)
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn eval(&self, x: &C) -> C {
        let mut acc = x.zero_like();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.mul(&c.from_i64_like(i as i64)))
            .collect();
        Self::from_coeffs(out)
    }

    /// Substitute `lambda * T` for `T`.
    pub fn compose_scale(&self, lambda: &C) -> Self {
        let mut pow = lambda.one_like();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c.mul(&pow));
            pow = pow.mul(lambda);
        }
        Self::from_coeffs(out)
    }

    /// `x^k * p(1/x)` — the degree-`k` reversal. Requires `k >= deg p`.
    pub fn reverse_into_degree(&self, k: usize) -> Self {
        assert!(self.degree().map_or(true, |d| d <= k));
        match self.coeffs.first() {
            None => Self::zero(),
            Some(w) => {
                let mut out = vec![w.zero_like(); k + 1];
                for (i, c) in self.coeffs.iter().enumerate() {
                    out[k - i] = c.clone();
                }
                Self::from_coeffs(out)
            }
        }
    }

    pub fn pow(&self, e: u32, like: &C) -> Self {
        let mut acc = Self::one(like);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> UniPoly<D> {
        UniPoly::from_coeffs(self.coeffs.iter().map(f).collect())
    }
}

impl<F: CoeffField> UniPoly<F> {
    /// Quotient and remainder; the divisor must be nonzero.
    pub fn divrem(&self, div: &Self) -> Result<(Self, Self), ExactError> {
        let dlead = div.leading().ok_or(ExactError::DivisionByZeroPoly)?;
        let dinv = dlead.inv().expect("field leading coefficient");
        let ddeg = div.degree().unwrap();
        let mut rem = self.clone();
        let mut quot_coeffs = vec![dlead.zero_like(); self.coeffs.len().saturating_sub(ddeg)];
        while let Some(rdeg) = rem.degree() {
            if rdeg < ddeg {
                break;
            }
            let factor = rem.leading().unwrap().mul(&dinv);
            let shift = rdeg - ddeg;
            quot_coeffs[shift] = factor.clone();
            let sub = div.mul(&Self::monomial(factor, shift));
            rem = rem.sub(&sub);
            debug_assert!(rem.degree().map_or(true, |d| d < rdeg));
        }
        Ok((Self::from_coeffs(quot_coeffs), rem))
    }

    pub fn divides(&self, other: &Self) -> bool {
        match other.divrem(self) {
            Ok((_, r)) => r.is_zero(),
            Err(_) => false,
        }
    }

    /// Scale so the leading coefficient is one.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => self.scale(&l.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Normalize like a series denominator: constant term one when possible,
    /// monic otherwise.
    pub fn unit_normal(&self) -> Self {
        match self.coeffs.first() {
            Some(c0) if !c0.is_zero() => self.scale(&c0.inv().unwrap()),
            _ => self.monic(),
        }
    }

    /// Monic greatest common divisor. Errors when both inputs are zero.
    pub fn gcd(&self, other: &Self) -> Result<Self, ExactError> {
        if self.is_zero() && other.is_zero() {
            return Err(ExactError::GcdUndefined);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    pub fn lcm(&self, other: &Self) -> Result<Self, ExactError> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        let g = self.gcd(other)?;
        let (q, r) = self.divrem(&g)?;
        debug_assert!(r.is_zero());
        Ok(q.mul(other).monic())
    }

    /// Extended gcd: returns (g, s, t) monic with s*a + t*b = g.
    pub fn extended_gcd(&self, other: &Self) -> Result<(Self, Self, Self), ExactError> {
        if self.is_zero() && other.is_zero() {
            return Err(ExactError::GcdUndefined);
        }
        let one = self
            .leading()
            .or(other.leading())
            .map(|c| Self::one(c))
            .unwrap();
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (one.clone(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), one);
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1)?;
            (r0, r1) = (r1, r);
            (s0, s1) = (s1.clone(), s0.sub(&q.mul(&s1)));
            (t0, t1) = (t1.clone(), t0.sub(&q.mul(&t1)));
        }
        let lead = r0.leading().unwrap().clone();
        let li = lead.inv().unwrap();
        Ok((r0.scale(&li), s0.scale(&li), t0.scale(&li)))
    }

    /// Inverse of `self` modulo `modulus` (coprime inputs).
    pub fn inv_mod(&self, modulus: &Self) -> Result<Self, ExactError> {
        let (g, s, _) = self.extended_gcd(modulus)?;
        if g.degree() != Some(0) {
            return Err(ExactError::NotCoprime);
        }
        let (_, r) = s.divrem(modulus)?;
        Ok(r)
    }

    /// In characteristic p, write `self = h(T^p)` and return `h` with
    /// coefficients replaced by their p-th roots. Over F_p the root is the
    /// coefficient itself. `None` if `self` is not of that shape.
    fn pth_root(&self, p: u64) -> Option<Self> {
        let pu = p as usize;
        let mut out = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if i % pu == 0 {
                out.push(c.clone());
            } else if !c.is_zero() {
                return None;
            }
        }
        Some(Self::from_coeffs(out))
    }

    /// Squarefree part plus separability diagnostics.
    ///
    /// Returns `(radical, is_separable, inseparable_detected)` where the
    /// radical carries each irreducible factor once, normalized with
    /// constant term one when possible. `is_separable` is true iff the input
    /// has no repeated roots. `inseparable_detected` flags an irreducible
    /// factor with zero derivative; over F_p and over the rationals this
    /// cannot happen, and the flag records the gcd-chain evidence.
    pub fn squarefree_part(&self) -> Result<(Self, bool, bool), ExactError> {
        if self.is_zero() {
            return Err(ExactError::ZeroInput);
        }
        if self.is_constant() {
            let w = &self.coeffs[0];
            return Ok((Self::one(w), true, false));
        }
        let p = self.coeffs[0].characteristic();
        let deriv = self.derivative();
        let is_separable = if deriv.is_zero() {
            false
        } else {
            self.gcd(&deriv)?.degree() == Some(0)
        };
        let mut radical = Self::one(&self.coeffs[0]);
        let mut work = self.monic();
        let mut inseparable = false;
        loop {
            if work.is_constant() {
                break;
            }
            let d = work.derivative();
            if d.is_zero() {
                // Zero derivative: either a p-th power (take the root and
                // continue) or an inseparable factor.
                if p == 0 {
                    return Err(ExactError::ZeroInput);
                }
                match work.pth_root(p) {
                    Some(h) if h.pow(p as u32, &self.coeffs[0]) == work => {
                        work = h.monic();
                        continue;
                    }
                    _ => {
                        inseparable = true;
                        radical = radical.mul(&work);
                        break;
                    }
                }
            }
            let g = work.gcd(&d)?;
            let (sep, r) = work.divrem(&g)?;
            debug_assert!(r.is_zero());
            // `sep` holds each factor of multiplicity prime to p once; avoid
            // duplicating factors already collected.
            let dup = radical.gcd(&sep)?;
            let (fresh, r2) = sep.divrem(&dup)?;
            debug_assert!(r2.is_zero());
            radical = radical.mul(&fresh);
            work = g;
        }
        Ok((radical.unit_normal(), is_separable, inseparable))
    }
}

impl<C: Coeff> std::fmt::Debug for UniPoly<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.display("T"))
    }
}

impl<C: Coeff> UniPoly<C> {
    /// Render with the given variable name, highest degree first.
    pub fn display(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts: Vec<String> = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = format!("{c}");
            let (sign, mag) = match cs.strip_prefix('-') {
                Some(rest) => ("-", rest.to_string()),
                None => ("+", cs),
            };
            let body = match i {
                0 => mag,
                _ => {
                    let v = if i == 1 { var.to_string() } else { format!("{var}^{i}") };
                    if mag == "1" {
                        v
                    } else {
                        format!("{mag}*{v}")
                    }
                }
            };
            if parts.is_empty() {
                parts.push(if sign == "-" { format!("-{body}") } else { body });
            } else {
                parts.push(format!(" {} {}", if sign == "-" { "-" } else { "+" }, body));
            }
        }
        parts.concat()
    }
}

#[cfg(test)]
mod tests {
    use super::super::rat::{rat_int, Rat};
    use super::*;
    use crate::exact::fp::FpElem;

    fn qp(coeffs: &[i64]) -> UniPoly<Rat> {
        UniPoly::from_coeffs(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    fn fp(coeffs: &[i64], p: u64) -> UniPoly<FpElem> {
        UniPoly::from_coeffs(coeffs.iter().map(|&c| FpElem::new(c, p)).collect())
    }

    #[test]
    fn gcd_common_root() {
        // (T^2 - 1, T - 1) -> T - 1
        let g = qp(&[-1, 0, 1]).gcd(&qp(&[-1, 1])).unwrap();
        assert_eq!(g, qp(&[-1, 1]));
    }

    #[test]
    fn gcd_coprime() {
        // (1 - 3T + 2T^2, T^3 + 1) -> 1
        let g = qp(&[1, -3, 2]).gcd(&qp(&[1, 0, 0, 1])).unwrap();
        assert_eq!(g.degree(), Some(0));
        assert_eq!(g, qp(&[1]));
    }

    #[test]
    fn gcd_with_zero_is_monic() {
        let f = qp(&[2, 0, 4]);
        let g = f.gcd(&UniPoly::zero()).unwrap();
        assert_eq!(g, qp(&[1, 0, 2])); // monic(f)
        assert!(matches!(
            UniPoly::<Rat>::zero().gcd(&UniPoly::zero()),
            Err(ExactError::GcdUndefined)
        ));
    }

    #[test]
    fn gcd_divides_both_and_product_identity() {
        let f = qp(&[2, 3, 1]); // (T+1)(T+2)
        let g = qp(&[-1, 0, 1]); // (T-1)(T+1)
        let d = f.gcd(&g).unwrap();
        assert!(d.divides(&f) && d.divides(&g));
        let l = f.lcm(&g).unwrap();
        // f*g = gcd*lcm up to the leading unit
        assert_eq!(f.mul(&g).monic(), d.mul(&l).monic());
    }

    #[test]
    fn squarefree_double_root() {
        // (1 - T)^2 -> (1 - T, not separable, no inseparable factor)
        let (sf, sep, insep) = qp(&[1, -2, 1]).squarefree_part().unwrap();
        assert_eq!(sf, qp(&[1, -1]));
        assert!(!sep && !insep);
    }

    #[test]
    fn squarefree_char5_fibonacci_denominator() {
        // 1 - T - T^2 = -(1 + 2T)^2 over F_5
        let q = fp(&[1, -1, -1], 5);
        let (sf, sep, insep) = q.squarefree_part().unwrap();
        assert!(!sep && !insep);
        assert_eq!(sf, fp(&[1, 2], 5));
    }

    #[test]
    fn squarefree_separable() {
        let q = qp(&[1, -3, 2]);
        let (sf, sep, insep) = q.squarefree_part().unwrap();
        assert_eq!(sf, q);
        assert!(sep && !insep);
    }

    #[test]
    fn squarefree_pth_power_is_not_inseparable() {
        // T^5 over F_5: radical T, no inseparable factor.
        let q = fp(&[0, 0, 0, 0, 0, 1], 5);
        let (sf, sep, insep) = q.squarefree_part().unwrap();
        assert_eq!(sf, fp(&[0, 1], 5));
        assert!(!sep && !insep);
    }

    #[test]
    fn extended_gcd_bezout() {
        let a = qp(&[1, -3, 2]);
        let b = qp(&[1, 0, 0, 1]);
        let (g, s, t) = a.extended_gcd(&b).unwrap();
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
        assert_eq!(g, qp(&[1]));
    }

    #[test]
    fn reversal_gives_handle_shape() {
        // x^4 * Q(1/x) for Q = 1 - 3T + 2T^2
        let q = qp(&[1, -3, 2]);
        let u = q.reverse_into_degree(4);
        assert_eq!(u, qp(&[0, 0, 2, -3, 1]));
    }

    #[test]
    fn display_descending() {
        assert_eq!(qp(&[1, -3, 2]).display("T"), "2*T^2 - 3*T + 1");
        assert_eq!(qp(&[0, 1]).display("x"), "x");
        assert_eq!(UniPoly::<Rat>::zero().display("T"), "0");
    }
}
