//! Classical series obtained as configurations of [`expand`].
//!
//! | function            | outer `f(w)`  | perturbation                    |
//! |---------------------|---------------|---------------------------------|
//! | [`legendre`]        | `w^(-1/2)`    | `-2u x + x^2`                   |
//! | [`hermite`]         | `e^(w-1)`     | `u x - x^2/2`                   |
//! | [`bernoulli`]       | `w^(-1)`      | `x/2! + x^2/3! + ...`           |
//! | [`sec_series`]      | `w^(-1)`      | `-x^2/2! + x^4/4! - ...`        |
//! | [`lorentz_gamma`]   | `w^(-1/2)`    | `-x^2`                          |
//!
//! Hermite polynomials here are the probabilists' family generated by
//! `e^(t u - t^2/2)`, with `He_2 = u^2 - 1`; they are not the physicists'
//! `H_n` from `e^(2 t u - t^2)`. Bernoulli numbers follow `x/(e^x - 1)`,
//! so `B_1 = -1/2`.

use crate::engine::{expand, DerivativeSequence, Perturbation, SeriesExpansion};
use crate::numerics::{factorial, Polynomial, Scalar};
use num_traits::Zero;

fn frac<T: Scalar>(numer: i64, denom: usize) -> T {
    T::from_i64(numer).expect("small integer is representable") / T::from_count(denom)
}

/// Power and exponential families never run out of derivatives, and every
/// caller truncates its perturbation to the requested order.
fn expand_total<T: Scalar>(
    derivatives: DerivativeSequence<T>,
    perturbation: Perturbation<T>,
    order: usize,
) -> SeriesExpansion<T> {
    expand(&derivatives, &perturbation.truncated(order), order)
        .expect("closed-family expansion cannot fail")
}

fn two_term<T: Scalar>(c1: Polynomial<T>, c2: Polynomial<T>) -> Perturbation<T> {
    Perturbation::from_terms([(1, c1), (2, c2)]).expect("degrees 1 and 2 are distinct")
}

fn legendre_generating<T: Scalar>(sign: i64, order: usize) -> SeriesExpansion<T> {
    expand_total(
        DerivativeSequence::PowerAlpha(frac(-1, 2)),
        two_term(
            Polynomial::monomial(frac(2 * sign, 1), 1),
            Polynomial::constant(T::one()),
        ),
        order,
    )
}

/// Legendre polynomial `P_n(u)`, read off `(1 - 2u x + x^2)^(-1/2)`.
pub fn legendre<T: Scalar>(n: usize) -> Polynomial<T> {
    legendre_generating::<T>(-1, n)
        .into_coefficients()
        .pop()
        .unwrap()
}

/// Probabilists' Hermite polynomial `He_n(u) = n! a_n` from `e^(t u - t^2/2)`.
pub fn hermite<T: Scalar>(n: usize) -> Polynomial<T> {
    let series = expand_total(
        DerivativeSequence::ExpShifted,
        two_term(Polynomial::u(), Polynomial::constant(frac(-1, 2))),
        n,
    );
    series.coefficient(n).scale(&factorial(n))
}

/// Bernoulli number `B_n = n! a_n` where `x/(e^x - 1) = 1/(1 + x/2! + x^2/3! + ...)`.
pub fn bernoulli<T: Scalar>(n: usize) -> T {
    let terms = (1..=n).map(|i| (i, Polynomial::constant(T::one() / factorial::<T>(i + 1))));
    let perturbation = Perturbation::from_terms(terms).expect("degrees are distinct");
    let series = expand_total(DerivativeSequence::PowerAlpha(-T::one()), perturbation, n);
    let a_n = series
        .coefficient(n)
        .as_constant()
        .expect("numeric perturbation gives constant coefficients");
    a_n * factorial(n)
}

/// Maclaurin coefficients of `sec(x) = 1/(1 - x^2/2! + x^4/4! - ...)` up to `x^order`.
pub fn sec_series<T: Scalar>(order: usize) -> SeriesExpansion<T> {
    let terms = (1..=order / 2).map(|k| {
        let sign = if k % 2 == 0 { T::one() } else { -T::one() };
        (2 * k, Polynomial::constant(sign / factorial::<T>(2 * k)))
    });
    let perturbation = Perturbation::from_terms(terms).expect("degrees are distinct");
    expand_total(
        DerivativeSequence::PowerAlpha(-T::one()),
        perturbation,
        order,
    )
}

/// Angular factors of the potential of charges `+Q` and `-Q` at `z = ±Δ`.
///
/// Entry `n - 1` is the coefficient of `(Δ/r)^n` in units of `Q/r`:
/// the generating-function coefficient for `c1 = -2u` minus the one for
/// `c1 = +2u`. Even orders cancel exactly and odd orders give `2 P_n(u)`;
/// the first entry `2u` is the dipole term.
pub fn multipole_potential<T: Scalar>(order: usize) -> Vec<Polynomial<T>> {
    let toward = legendre_generating::<T>(-1, order);
    let away = legendre_generating::<T>(1, order);
    (1..=order)
        .map(|n| toward.coefficient(n) - away.coefficient(n))
        .collect()
}

/// `(1 - β^2)^(-1/2)` as a series in `β` up to `β^order`.
pub fn lorentz_gamma<T: Scalar>(order: usize) -> SeriesExpansion<T> {
    let perturbation =
        Perturbation::from_terms([(2, Polynomial::constant(-T::one()))]).expect("single term");
    expand_total(
        DerivativeSequence::PowerAlpha(frac(-1, 2)),
        perturbation,
        order,
    )
}

/// True when every odd-order entry of `series` is zero.
pub fn odd_terms_vanish<T: Scalar>(series: &SeriesExpansion<T>) -> bool {
    series
        .coefficients()
        .iter()
        .skip(1)
        .step_by(2)
        .all(Zero::is_zero)
}
