//! Coefficient rings for chain complexes.
//!
//! Homology is computed over the integers. Reductions are generic so the same
//! code runs on machine integers (checked, failing with [`Error::Overflow`])
//! and on arbitrary-precision integers.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, Signed, ToPrimitive};

use crate::error::{Error, Result};

/// A Euclidean domain of integers with checked arithmetic.
pub trait Coefficient:
    Clone
    + Debug
    + Display
    + Eq
    + Ord
    + Integer
    + Signed
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + ToPrimitive
    + From<i32>
    + Send
    + Sync
    + 'static
{
    /// `self - a * b`, or an overflow error.
    fn sub_mul(&self, a: &Self, b: &Self) -> Result<Self> {
        let prod = a.checked_mul(b).ok_or(Error::Overflow)?;
        self.checked_sub(&prod).ok_or(Error::Overflow)
    }

    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
}

impl<T> Coefficient for T where
    T: Clone
        + Debug
        + Display
        + Eq
        + Ord
        + Integer
        + Signed
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + ToPrimitive
        + From<i32>
        + Send
        + Sync
        + 'static
{
}

/// Machine-word coefficients; overflow is detected, not wrapped.
pub type Word = i64;

/// Arbitrary-precision coefficients.
pub type Big = BigInt;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_overflow_is_reported() {
        let x: Word = i64::MAX;
        assert!(matches!(x.sub_mul(&-1, &1), Err(Error::Overflow)));
        assert_eq!(5i64.sub_mul(&2, &3).unwrap(), -1);
    }

    #[test]
    fn big_never_overflows() {
        let x = Big::from(i64::MAX);
        let y = x.sub_mul(&Big::from(-1), &Big::from(i64::MAX)).unwrap();
        assert_eq!(y, Big::from(i64::MAX) * 2);
        assert!(Big::from(-1).is_unit());
    }
}
