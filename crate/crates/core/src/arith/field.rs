use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// An exact field the dense linear algebra can run over.
///
/// The by-reference methods exist so generic kernels avoid cloning both
/// operands of every product.
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Display
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;

    /// Multiplicative inverse, `None` on zero.
    fn try_inv(&self) -> Option<Self>;

    fn from_i64(n: i64) -> Self;
    fn from_rational(q: &BigRational) -> Self;

    fn div_ref(&self, rhs: &Self) -> Option<Self> {
        rhs.try_inv().map(|inv| self.mul_ref(&inv))
    }
}

impl Field for BigRational {
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_rational(q: &BigRational) -> Self {
        q.clone()
    }

    fn div_ref(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            None
        } else {
            Some(self / rhs)
        }
    }
}

/// Shorthand for `n/d` as an exact rational.
pub fn ratio(n: i64, d: i64) -> BigRational {
    assert!(d != 0, "zero denominator");
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
