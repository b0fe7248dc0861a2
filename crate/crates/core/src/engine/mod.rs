//! Expansion of `f(1 + [c1*x + c2*x^2 + ...])` into a truncated power series.
//!
//! Only the isotropic case is handled: the outer function enters solely
//! through its derivatives `d_k = f^(k)(1)`, which depend on the total
//! number of differentiations and not on which perturbation term they act
//! on.

mod closed_form;
mod derivatives;
mod expand;
mod oracle;
mod perturbation;

pub use closed_form::{two_component_even, two_component_odd};
pub use derivatives::DerivativeSequence;
pub use expand::{expand, monomial_coefficient};
pub use oracle::oracle_expand;
pub use perturbation::Perturbation;

use crate::numerics::{Polynomial, Scalar};

/// Coefficients `a_0..a_N` of a truncated series; `a_n` multiplies `x^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesExpansion<T> {
    coefficients: Vec<Polynomial<T>>,
}

impl<T: Scalar> SeriesExpansion<T> {
    /// Panics on an empty coefficient list; a series always carries `a_0`.
    pub fn new(coefficients: Vec<Polynomial<T>>) -> Self {
        assert!(!coefficients.is_empty(), "a series expansion needs a_0");
        SeriesExpansion { coefficients }
    }

    pub fn order(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// `a_n`; panics past the order.
    pub fn coefficient(&self, n: usize) -> &Polynomial<T> {
        &self.coefficients[n]
    }

    pub fn coefficients(&self) -> &[Polynomial<T>] {
        &self.coefficients
    }

    pub fn into_coefficients(self) -> Vec<Polynomial<T>> {
        self.coefficients
    }

    /// The same series cut at order `order` (no-op if already shorter).
    pub fn truncated(&self, order: usize) -> Self {
        let keep = (order + 1).min(self.coefficients.len());
        SeriesExpansion {
            coefficients: self.coefficients[..keep].to_vec(),
        }
    }
}
