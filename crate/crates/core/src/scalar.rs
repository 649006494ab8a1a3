//! Integer scalar abstraction.
//!
//! Every algorithm in this crate is written against [`Scalar`], so the same
//! code runs on machine integers (fast census work on small coordinates) and
//! on [`num_bigint::BigInt`] (unbounded inputs). Rationals are always
//! [`num_rational::Ratio`] over the same scalar.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// An exact signed integer type usable as a lattice coordinate.
pub trait Scalar:
    Integer + Signed + Clone + Debug + Display + Hash + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
}

impl<T> Scalar for T where
    T: Integer + Signed + Clone + Debug + Display + Hash + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
}

/// Exact rational over a scalar.
pub type Rat<T> = Ratio<T>;

/// Greatest common divisor of a sequence, always nonnegative. Zero for an
/// empty or all-zero sequence.
pub fn gcd_all<'a, T: Scalar>(values: impl IntoIterator<Item = &'a T>) -> T {
    values.into_iter().fold(T::zero(), |acc, v| acc.gcd(v))
}

/// Extended Euclid: returns `(g, s, t)` with `s*a + t*b = g >= 0`.
pub fn ext_gcd<T: Scalar>(a: &T, b: &T) -> (T, T, T) {
    let e = a.extended_gcd(b);
    if e.gcd.is_negative() {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

pub(crate) fn int<T: Scalar>(v: i64) -> T {
    T::from_i64(v).expect("scalar type cannot represent value")
}
