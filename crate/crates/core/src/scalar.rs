//! Coefficient rings.
//!
//! Everything in this crate is written over an exact integral domain. The
//! integer types (`i64`, `i128`, [`BigInt`]) implement [`Coefficient`]; the
//! fraction-free linear algebra additionally runs over polynomial entries, so
//! it is written against the weaker [`IntegralDomain`] trait.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// A commutative ring without zero divisors in which exact quotients can be
/// computed.
pub trait IntegralDomain: Clone + PartialEq + Debug + Send + Sync {
    fn zero_element() -> Self;
    fn one_element() -> Self;
    fn is_zero_element(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    /// Returns `self / divisor` when the quotient exists in the ring.
    fn div_exact(&self, divisor: &Self) -> Option<Self>;
}

/// An integer type usable as a polynomial coefficient.
pub trait Coefficient:
    IntegralDomain + Integer + Signed + FromPrimitive + ToPrimitive + Display + FromStr + Eq + Ord + Hash + 'static
{
    fn from_int(value: i64) -> Self {
        <Self as FromPrimitive>::from_i64(value).expect("coefficient type cannot hold an i64")
    }
}

macro_rules! integer_domain {
    ($($ty:ty),*) => {$(
        impl IntegralDomain for $ty {
            fn zero_element() -> Self {
                num_traits::Zero::zero()
            }
            fn one_element() -> Self {
                num_traits::One::one()
            }
            fn is_zero_element(&self) -> bool {
                num_traits::Zero::is_zero(self)
            }
            fn add_ref(&self, other: &Self) -> Self {
                self.clone() + other.clone()
            }
            fn sub_ref(&self, other: &Self) -> Self {
                self.clone() - other.clone()
            }
            fn mul_ref(&self, other: &Self) -> Self {
                self.clone() * other.clone()
            }
            fn div_exact(&self, divisor: &Self) -> Option<Self> {
                if num_traits::Zero::is_zero(divisor) {
                    return None;
                }
                let (q, r) = self.div_rem(divisor);
                num_traits::Zero::is_zero(&r).then_some(q)
            }
        }

        impl Coefficient for $ty {}
    )*};
}

integer_domain!(i64, i128, BigInt);
