//! Coefficient scalar abstraction.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_traits::{FromPrimitive, Signed};

/// An exact field scalar usable for series coefficients and polyhedral
/// linear programming.
///
/// The `Ord + Eq + Hash` bounds deliberately rule out floating point:
/// vertex membership and feasibility decisions must be bit-exact. The usual
/// instantiation is [`num_rational::BigRational`] (see the crate-root `Rat`
/// alias); fixed-width rationals such as `Ratio<i64>` also satisfy the bounds
/// but overflow on adversarial pivot sequences, so they are only appropriate
/// for cross-checks on small inputs.
pub trait Scalar:
    Clone + Eq + Ord + Hash + Debug + Display + Signed + FromPrimitive
{
}

impl<T> Scalar for T where
    T: Clone + Eq + Ord + Hash + Debug + Display + Signed + FromPrimitive
{
}

/// Convert a small natural number into a scalar.
pub fn from_nat<Q: Scalar>(n: u128) -> Q {
    Q::from_u128(n).expect("natural number does not fit in scalar")
}

/// Convert a signed integer into a scalar.
pub fn from_int<Q: Scalar>(n: i64) -> Q {
    Q::from_i64(n).expect("integer does not fit in scalar")
}

/// Build the exact ratio `p/q` in the scalar. Panics if `q == 0`.
pub fn ratio<Q: Scalar>(p: i64, q: u64) -> Q {
    assert!(q != 0, "zero denominator");
    from_int::<Q>(p) / from_nat::<Q>(q as u128)
}
