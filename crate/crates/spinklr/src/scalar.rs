//! Scalar traits shared by every module.
//!
//! All arithmetic in this crate is exact, so the coefficient type must be a
//! field with exact division. [`Field`] is the minimal interface used by the
//! linear algebra routines (it is also satisfied by rational functions), and
//! [`Scalar`] adds what the polynomial layer needs from a base field.

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, One, Signed, Zero};

/// A commutative field with exact, total operations (division by zero aside).
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
}

impl<F> Field for F where
    F: Clone
        + PartialEq
        + Debug
        + Zero
        + One
        + Add<Output = F>
        + Sub<Output = F>
        + Mul<Output = F>
        + Div<Output = F>
        + Neg<Output = F>
        + Send
        + Sync
{
}

/// Marker for fields whose arithmetic is exact. Canonical forms rely on exact
/// zero tests, so floating point types do not implement it.
pub trait Exact {}

impl Exact for Ratio<BigInt> {}
impl Exact for Ratio<i64> {}
impl Exact for Ratio<i128> {}

/// Base coefficient field for Laurent polynomials and polynomial modules.
pub trait Scalar:
    Field + Exact + Num + Signed + FromPrimitive + Display + FromStr + 'static
{
    /// Embeds a machine integer.
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("integer fits the scalar type")
    }

    /// `(-1)^k` as a scalar.
    fn sign(k: i64) -> Self {
        if k.rem_euclid(2) == 0 {
            Self::one()
        } else {
            -Self::one()
        }
    }
}

impl<T> Scalar for T where
    T: Field + Exact + Num + Signed + FromPrimitive + Display + FromStr + 'static
{
}

/// `(-1)^k` as an integer.
pub fn sign_i64(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}
