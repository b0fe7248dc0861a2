//! Exact power-series expansion of functions of the form
//! `f(1 + [c1*x + c2*x^2 + ...])`.
//!
//! The order-`n` coefficient is a sum over the integer partitions of `n`
//! whose parts lie in the support of the perturbation. Each partition
//! contributes `d_K * prod(c_q^m_q) / prod(m_q!)`, where `d_K` is the
//! `K`-th derivative of the outer function at 1 and `K` is the number of
//! parts. A direct truncated-composition expansion is kept alongside as an
//! independent check.
//!
//! All of the math is generic over a [`Scalar`] field. The aliases below fix
//! the scalar to an arbitrary-precision exact rational, which is what the
//! command-line front end and the built-in applications use.

pub mod cli;
pub mod engine;
mod error;
pub mod numerics;
pub mod partitions;
pub mod special;

pub use engine::{
    expand, monomial_coefficient, oracle_expand, two_component_even, two_component_odd,
    DerivativeSequence, Perturbation, SeriesExpansion,
};
pub use error::{Error, Result};
pub use numerics::{factorial, falling_factorial, Polynomial, Scalar};
pub use partitions::{
    count_partitions, count_restricted, enumerate_partitions, enumerate_restricted, Partition,
};

/// Arbitrary-precision exact fraction, always stored reduced.
pub type Rational = num_rational::BigRational;
/// Polynomial in the auxiliary symbol `u` with exact rational coefficients.
pub type Poly = Polynomial<Rational>;
/// Derivative sequence over exact rationals.
pub type Derivatives = DerivativeSequence<Rational>;
/// Perturbation with exact rational polynomial coefficients.
pub type RationalPerturbation = Perturbation<Rational>;
/// Truncated expansion with exact rational polynomial coefficients.
pub type Expansion = SeriesExpansion<Rational>;
