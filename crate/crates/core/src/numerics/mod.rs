//! Exact scalar and polynomial arithmetic.

mod polynomial;
pub mod rational;

pub use polynomial::Polynomial;

use num_traits::{FromPrimitive, Num};
use std::fmt::Debug;
use std::ops::Neg;

/// Coefficient field for every expansion.
///
/// Any signed numeric type with exact small-integer conversion qualifies.
/// The exact [`Rational`](crate::Rational) alias is the intended instance;
/// `f64` also satisfies the bound and is handy for quick numeric checks.
pub trait Scalar: Clone + Debug + PartialEq + Num + Neg<Output = Self> + FromPrimitive {
    /// Embeds a non-negative count.
    fn from_count(n: usize) -> Self {
        Self::from_usize(n).expect("count is representable in the scalar type")
    }
}

impl<T> Scalar for T where T: Clone + Debug + PartialEq + Num + Neg<Output = T> + FromPrimitive {}

/// `alpha * (alpha - 1) * ... * (alpha - k + 1)`; the empty product for `k = 0`.
pub fn falling_factorial<T: Scalar>(alpha: &T, k: usize) -> T {
    (0..k).fold(T::one(), |acc, j| acc * (alpha.clone() - T::from_count(j)))
}

pub fn factorial<T: Scalar>(n: usize) -> T {
    (2..=n).fold(T::one(), |acc, j| acc * T::from_count(j))
}

/// `[0!, 1!, ..., n!]`.
pub(crate) fn factorial_table<T: Scalar>(n: usize) -> Vec<T> {
    let mut table = Vec::with_capacity(n + 1);
    table.push(T::one());
    for j in 1..=n {
        let next = table[j - 1].clone() * T::from_count(j);
        table.push(next);
    }
    table
}
