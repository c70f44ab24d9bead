//! Coefficient types.
//!
//! Everything in this crate is generic over an exact scalar. Floating point
//! types are not admitted: exact division by linear forms and zero tests on
//! cancelled sums need exact arithmetic.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};

/// An exact, totally ordered commutative ring of coefficients.
///
/// Implemented for `i64`, `Ratio<i64>` and `BigRational`. Integer scalars
/// work wherever no genuine fractions arise (restriction values, Billey
/// sums); division steps report `NotDivisible` if a quotient would leave the
/// ring.
pub trait Scalar:
    Clone + Debug + Display + Eq + Ord + Hash + Num + Signed + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("scalar type cannot represent a small integer")
    }

    /// Exact quotient `self / rhs`, if it exists in the ring.
    fn checked_exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        let q = self.clone() / rhs.clone();
        if q.clone() * rhs.clone() == *self {
            Some(q)
        } else {
            None
        }
    }

    fn is_integral(&self) -> bool {
        (self.clone() % Self::one()).is_zero()
    }

    /// The value as an `i64`, if it is an integer in range.
    fn to_int(&self) -> Option<i64> {
        if self.is_integral() {
            self.to_i64()
        } else {
            None
        }
    }
}

impl<T> Scalar for T where
    T: Clone + Debug + Display + Eq + Ord + Hash + Num + Signed + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
}
