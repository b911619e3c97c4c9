//! Scalar types used for model counting.
//!
//! Counting is generic over any [`num_traits::Num`] type so callers can
//! trade exactness for speed: [`BigUint`](num_bigint::BigUint) never
//! overflows, `u64`/`u128` are exact up to their width, `f64` is approximate
//! beyond 2^53.

use std::fmt::Debug;

/// A number type that model counts can be accumulated in.
pub trait Count: num_traits::Num + Clone + Debug {
    /// `2^exp` in this type.
    fn pow2(exp: usize) -> Self {
        let two = Self::one() + Self::one();
        num_traits::pow(two, exp)
    }
}

impl<T: num_traits::Num + Clone + Debug> Count for T {}
