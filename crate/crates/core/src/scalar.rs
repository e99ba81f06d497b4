//! Exact integer scalars.
//!
//! Every computation in this crate is exact. The engines are generic over
//! [`ExactInt`] so that a fixed-width fast path (`i64`, `i128`) can be used
//! for small symmetric groups while [`num_bigint::BigInt`] covers the full
//! supported range. Fixed-width types report overflow as an error instead of
//! wrapping.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, Signed, ToPrimitive};

use crate::error::{Error, Result};

/// A signed integer type with checked arithmetic.
pub trait ExactInt:
    Integer
    + Signed
    + Clone
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + FromPrimitive
    + ToPrimitive
    + FromStr
    + Display
    + Debug
    + Hash
    + Send
    + Sync
    + 'static
{
    /// Short name used in diagnostics.
    const NAME: &'static str;

    fn to_bigint(&self) -> BigInt;

    fn from_bigint(value: &BigInt) -> Option<Self>;
}

impl ExactInt for i64 {
    const NAME: &'static str = "i64";

    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }

    fn from_bigint(value: &BigInt) -> Option<Self> {
        value.to_i64()
    }
}

impl ExactInt for i128 {
    const NAME: &'static str = "i128";

    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }

    fn from_bigint(value: &BigInt) -> Option<Self> {
        value.to_i128()
    }
}

impl ExactInt for BigInt {
    const NAME: &'static str = "BigInt";

    fn to_bigint(&self) -> BigInt {
        self.clone()
    }

    fn from_bigint(value: &BigInt) -> Option<Self> {
        Some(value.clone())
    }
}

pub(crate) fn overflow<T: ExactInt>() -> Error {
    Error::Overflow(T::NAME)
}

pub(crate) fn from_u64<T: ExactInt>(v: u64) -> Result<T> {
    T::from_u64(v).ok_or_else(overflow::<T>)
}

pub(crate) fn add<T: ExactInt>(a: &T, b: &T) -> Result<T> {
    a.checked_add(b).ok_or_else(overflow::<T>)
}

pub(crate) fn sub<T: ExactInt>(a: &T, b: &T) -> Result<T> {
    a.checked_sub(b).ok_or_else(overflow::<T>)
}

pub(crate) fn mul<T: ExactInt>(a: &T, b: &T) -> Result<T> {
    a.checked_mul(b).ok_or_else(overflow::<T>)
}

/// `m!` in the scalar type.
pub fn factorial<T: ExactInt>(m: usize) -> Result<T> {
    let mut acc = T::one();
    for k in 2..=m {
        acc = mul(&acc, &from_u64::<T>(k as u64)?)?;
    }
    Ok(acc)
}

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial<T: ExactInt>(n: usize, k: usize) -> Result<T> {
    if k > n {
        return Ok(T::zero());
    }
    let k = k.min(n - k);
    let mut acc = T::one();
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step
        acc = mul(&acc, &from_u64::<T>((n - i) as u64)?)?;
        acc = acc.div_floor(&from_u64::<T>((i + 1) as u64)?);
    }
    Ok(acc)
}

/// Divides `num` by `den`, failing if the quotient is not an integer.
pub(crate) fn exact_div<T: ExactInt>(num: &T, den: &T, what: &str) -> Result<T> {
    let (q, r) = num.div_rem(den);
    if !r.is_zero() {
        return Err(Error::Inconsistent(format!(
            "{what}: {num} is not divisible by {den}"
        )));
    }
    Ok(q)
}
