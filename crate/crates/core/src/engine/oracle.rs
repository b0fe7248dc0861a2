use super::{DerivativeSequence, Perturbation, SeriesExpansion};
use crate::numerics::{Polynomial, Scalar};
use crate::Result;
use num_traits::Zero;

/// Truncated product of two series with polynomial coefficients.
fn mul_truncated<T: Scalar>(
    a: &[Polynomial<T>],
    b: &[Polynomial<T>],
    order: usize,
) -> Vec<Polynomial<T>> {
    let mut out = vec![Polynomial::zero(); order + 1];
    for (i, ai) in a.iter().enumerate().take(order + 1) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(order + 1 - i) {
            out[i + j] = &out[i + j] + &(ai * bj);
        }
    }
    out
}

/// Direct composition: `sum_k d_k / k! * u(x)^k` with every power of
/// `u(x) = sum c_i x^i` truncated at `x^order`.
///
/// Shares no code with [`expand`](super::expand) beyond the polynomial
/// arithmetic, so the two serve as checks on each other.
pub fn oracle_expand<T: Scalar>(
    derivatives: &DerivativeSequence<T>,
    perturbation: &Perturbation<T>,
    order: usize,
) -> Result<SeriesExpansion<T>> {
    perturbation.check_order(order)?;
    let mut inner = vec![Polynomial::zero(); order + 1];
    for (degree, c) in perturbation.terms() {
        inner[degree] = c.clone();
    }

    let mut result = vec![Polynomial::zero(); order + 1];
    result[0] = Polynomial::constant(derivatives.get(0)?);
    let mut power = vec![Polynomial::zero(); order + 1];
    power[0] = Polynomial::constant(T::one());
    let mut k_factorial = T::one();
    for k in 1..=order {
        power = mul_truncated(&power, &inner, order);
        if power.iter().all(Zero::is_zero) {
            break;
        }
        k_factorial = k_factorial * T::from_count(k);
        let weight = derivatives.get(k)? / k_factorial.clone();
        for (slot, term) in result.iter_mut().zip(&power) {
            *slot = &*slot + &term.scale(&weight);
        }
    }
    Ok(SeriesExpansion::new(result))
}
