//! Scalar abstraction for exact arithmetic.
//!
//! Every quantity in this workspace — distances, function values, scores,
//! matrix entries — is an exact rational. The [`Scalar`] trait pins down just
//! enough structure (ring operations, total order, absolute value,
//! construction from machine integers, integer flooring) for the geometric
//! modules to stay agnostic about the concrete representation.
//!
//! Three implementations are provided: `Ratio<i64>` and `Ratio<i128>` for
//! small fast experiments, and arbitrary-precision `Ratio<BigInt>`, which is
//! the crate-root default [`crate::Rat`] and the type every shipped tool
//! runs on. There is deliberately no floating-point implementation: the
//! triangle-inequality, idempotence, and score checks in this crate are exact
//! equalities and would be meaningless under rounding.

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{Num, Signed, ToPrimitive};
use std::fmt::{Debug, Display};
use std::str::FromStr;

/// An exactly-represented rational scalar.
///
/// `Num + Signed + Ord` supply the arithmetic, comparisons, and absolute
/// value; `Display`/`FromStr` supply the canonical `"p/q"` text form used by
/// every file format in the workspace (serialization round-trips bit-exactly
/// because rationals are stored reduced).
pub trait Scalar: Num + Signed + Ord + Clone + Debug + Display + FromStr {
    /// The rational `num / den`.
    ///
    /// # Panics
    ///
    /// Panics if `den == 0`.
    fn from_int_ratio(num: i64, den: i64) -> Self;

    /// Largest integer `k` with `k <= self`, as a machine integer.
    ///
    /// # Panics
    ///
    /// Panics if the floor does not fit in an `i64`. Grid indices in this
    /// workspace are tiny, so this is an internal-consistency failure, not an
    /// expected runtime condition.
    fn floor_int(&self) -> i64;

    /// The integer `n` as a scalar.
    fn from_int(n: i64) -> Self {
        Self::from_int_ratio(n, 1)
    }

    /// Smallest integer `k` with `k >= self`.
    fn ceil_int(&self) -> i64 {
        -(-self.clone()).floor_int()
    }
}

macro_rules! impl_scalar_for_machine_ratio {
    ($int:ty) => {
        impl Scalar for Ratio<$int> {
            fn from_int_ratio(num: i64, den: i64) -> Self {
                Ratio::new(num as $int, den as $int)
            }

            fn floor_int(&self) -> i64 {
                let f = self.floor();
                i64::try_from(f.to_integer()).expect("floor exceeds i64 range")
            }
        }
    };
}

impl_scalar_for_machine_ratio!(i64);
impl_scalar_for_machine_ratio!(i128);

impl Scalar for Ratio<BigInt> {
    fn from_int_ratio(num: i64, den: i64) -> Self {
        Ratio::new(BigInt::from(num), BigInt::from(den))
    }

    fn floor_int(&self) -> i64 {
        self.floor()
            .to_integer()
            .to_i64()
            .expect("floor exceeds i64 range")
    }
}
