//! Scalar abstraction for the exact-arithmetic kernel.
//!
//! Everything downstream (polynomials, characteristic polynomials, Bareiss
//! elimination) is generic over an exact signed integer scalar. The crate
//! root pins [`crate::Coeff`] = `BigInt` as the default instantiation;
//! fixed-width types (`i64`, `i128`) work too and are useful in tests where
//! coefficient growth is provably bounded.

use std::fmt;
use std::ops::{AddAssign, MulAssign, SubAssign};

/// An exact signed integer scalar: ring operations are exact, division is
/// truncating (used only where exactness is guaranteed by the algorithm).
pub trait ExactScalar:
    num_traits::Signed
    + num_traits::NumAssign
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
    + From<i64>
    + Clone
    + Eq
    + Ord
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
{
}

impl<T> ExactScalar for T where
    T: num_traits::Signed
        + num_traits::NumAssign
        + for<'a> AddAssign<&'a T>
        + for<'a> SubAssign<&'a T>
        + for<'a> MulAssign<&'a T>
        + From<i64>
        + Clone
        + Eq
        + Ord
        + fmt::Debug
        + fmt::Display
        + Send
        + Sync
        + 'static
{
}
