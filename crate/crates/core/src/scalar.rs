//! Scalar traits the generic polynomial and series code is written against.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Num, Signed, Zero};

/// Coefficient ring for [`crate::qpoly::Polynomial`].
pub trait Coefficient: Num + Clone + Debug {}

impl<T: Num + Clone + Debug> Coefficient for T {}

/// An exact field element that can report whether it is a nonpositive
/// integer. Terminating hypergeometric series need this to find their last
/// term, so floating-point types deliberately do not implement it.
pub trait ExactField: Coefficient + Signed + PartialOrd {
    /// `Some(m)` when the value equals `-m` for a nonnegative integer `m`.
    fn as_nonpositive_integer(&self) -> Option<u64>;

    fn from_i64(value: i64) -> Self;
}

impl<T> ExactField for Ratio<T>
where
    T: Integer + Clone + Debug + Signed + TryInto<u64> + From<i64>,
{
    fn as_nonpositive_integer(&self) -> Option<u64> {
        if !self.is_integer() || self.is_positive() {
            return None;
        }
        let m = -self.to_integer();
        m.try_into().ok()
    }

    fn from_i64(value: i64) -> Self {
        Ratio::from_integer(T::from(value))
    }
}

/// Exact binomial coefficient `C(x, k)` extended to negative `x` through the
/// falling factorial `x (x-1) ... (x-k+1) / k!`. Zero for `k < 0`.
pub fn binomial_general(x: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc *= x - i;
        acc /= i + 1;
    }
    acc
}

/// `C(x, k)` with the counting convention: zero whenever `k < 0`, `x < 0` or
/// `x < k`.
pub fn binomial(x: i64, k: i64) -> BigInt {
    if k < 0 || x < 0 || x < k {
        return BigInt::zero();
    }
    let k = k.min(x - k);
    binomial_general(x, k)
}
