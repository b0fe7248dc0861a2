use crate::numerics::{falling_factorial, Scalar};
use crate::{Error, Result};

/// Supplies `d_k = f^(k)(1)`, which fixes the outer function `f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DerivativeSequence<T> {
    /// `f(w) = w^alpha`: `d_k` is the falling factorial of `alpha`.
    PowerAlpha(T),
    /// `f(w) = e^(w - 1)`: every derivative is 1.
    ExpShifted,
    /// Caller-supplied `d_1, d_2, ...` (`values[0]` is `d_1`) with `d_0 = at_one`.
    Explicit { at_one: T, values: Vec<T> },
}

impl<T: Scalar> DerivativeSequence<T> {
    /// Explicit sequence with `f(1) = 1`.
    pub fn explicit(values: Vec<T>) -> Self {
        DerivativeSequence::Explicit {
            at_one: T::one(),
            values,
        }
    }

    /// Explicit sequence with a caller-chosen `f(1)`.
    pub fn explicit_with_base(at_one: T, values: Vec<T>) -> Self {
        DerivativeSequence::Explicit { at_one, values }
    }

    /// `d_0 = f(1)`.
    pub fn at_one(&self) -> T {
        match self {
            DerivativeSequence::PowerAlpha(_) | DerivativeSequence::ExpShifted => T::one(),
            DerivativeSequence::Explicit { at_one, .. } => at_one.clone(),
        }
    }

    pub fn get(&self, k: usize) -> Result<T> {
        match self {
            DerivativeSequence::PowerAlpha(alpha) => Ok(falling_factorial(alpha, k)),
            DerivativeSequence::ExpShifted => Ok(T::one()),
            DerivativeSequence::Explicit { at_one, values } => match k {
                0 => Ok(at_one.clone()),
                _ => values.get(k - 1).cloned().ok_or(Error::MissingDerivative {
                    k,
                    available: values.len(),
                }),
            },
        }
    }

    /// `[d_0, ..., d_max_k]`; power sequences use the falling-factorial
    /// recurrence so each entry costs one multiplication.
    pub fn table(&self, max_k: usize) -> Result<Vec<T>> {
        match self {
            DerivativeSequence::PowerAlpha(alpha) => {
                let mut table = Vec::with_capacity(max_k + 1);
                table.push(T::one());
                for k in 0..max_k {
                    let next = table[k].clone() * (alpha.clone() - T::from_count(k));
                    table.push(next);
                }
                Ok(table)
            }
            _ => (0..=max_k).map(|k| self.get(k)).collect(),
        }
    }
}
