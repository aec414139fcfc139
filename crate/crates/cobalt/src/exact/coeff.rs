//! Coefficient-ring traits shared by polynomials and matrices.
//!
//! Elements act as their own ring handles: `zero_like`/`one_like` derive
//! neutral elements from a witness, which lets `FpElem` carry its modulus
//! without a separate context object.

use std::fmt::{Debug, Display};

/// A commutative ring element with exact arithmetic.
pub trait Coeff: Clone + PartialEq + Debug + Display {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Exact division. `None` when `other` is zero or does not divide `self`.
    fn exact_div(&self, other: &Self) -> Option<Self>;
    /// True for units of the ring.
    fn is_invertible(&self) -> bool;
    /// Small integer embedding, mostly for test fixtures and scalar factors.
    fn from_i64_like(&self, v: i64) -> Self;
    /// Ring characteristic; 0 outside prime fields.
    fn characteristic(&self) -> u64 {
        0
    }
}

/// A field element: every nonzero element is invertible.
pub trait CoeffField: Coeff {
    fn inv(&self) -> Option<Self>;
    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.mul(&i))
    }
}
