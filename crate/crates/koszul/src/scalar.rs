//! Coefficient scalars for the homological linear algebra.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

/// Field-like scalar used for chains, boundary matrices and resolutions.
///
/// `BigRational` is the exact instantiation (alias [`crate::Coeff`]); `f32`
/// and `f64` also satisfy the bound for evaluation purposes.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    fn from_int(value: i64) -> Self;

    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero scalar");
        Self::one() / self.clone()
    }
}

impl Scalar for BigRational {
    fn from_int(value: i64) -> Self {
        BigRational::from_integer(value.into())
    }
}

impl Scalar for f64 {
    fn from_int(value: i64) -> Self {
        value as f64
    }
}

impl Scalar for f32 {
    fn from_int(value: i64) -> Self {
        value as f32
    }
}
