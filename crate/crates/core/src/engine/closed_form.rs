//! Closed forms for two-component perturbations `c1*x + c2*x^2`.
//!
//! Each order has only `floor(n/2) + 1` contributing partitions (all 1's
//! and 2's), so the coefficients collapse to a single sum over the number
//! of 1's.

use super::DerivativeSequence;
use crate::numerics::{factorial_table, Polynomial, Scalar};
use crate::{Error, Result};
use num_traits::Zero;

/// `A_2n = sum_{i=0..n} d_{n+i} c2^(n-i) c1^(2i) / ((n-i)! (2i)!)`.
pub fn two_component_even<T: Scalar>(
    n: usize,
    derivatives: &DerivativeSequence<T>,
    c1: &Polynomial<T>,
    c2: &Polynomial<T>,
) -> Result<Polynomial<T>> {
    if n == 0 {
        return Err(Error::ZeroClosedFormIndex);
    }
    let d = derivatives.table(2 * n)?;
    let fact = factorial_table::<T>(2 * n);
    let mut total = Polynomial::zero();
    for i in 0..=n {
        let weight = d[n + i].clone() / (fact[n - i].clone() * fact[2 * i].clone());
        let term = c2.pow((n - i) as u32) * c1.pow(2 * i as u32);
        total = total + term.scale(&weight);
    }
    Ok(total)
}

/// `A_(2n-1) = sum_{i=1..n} d_{n+i-1} c2^(n-i) c1^(2i-1) / ((n-i)! (2i-1)!)`.
pub fn two_component_odd<T: Scalar>(
    n: usize,
    derivatives: &DerivativeSequence<T>,
    c1: &Polynomial<T>,
    c2: &Polynomial<T>,
) -> Result<Polynomial<T>> {
    if n == 0 {
        return Err(Error::ZeroClosedFormIndex);
    }
    let d = derivatives.table(2 * n - 1)?;
    let fact = factorial_table::<T>(2 * n - 1);
    let mut total = Polynomial::zero();
    for i in 1..=n {
        let weight = d[n + i - 1].clone() / (fact[n - i].clone() * fact[2 * i - 1].clone());
        let term = c2.pow((n - i) as u32) * c1.pow(2 * i as u32 - 1);
        total = total + term.scale(&weight);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rational::ratio;
    use crate::{Poly, Rational};

    fn q(n: i64, d: i64) -> Rational {
        ratio(n, d).unwrap()
    }

    #[test]
    fn first_order_is_d1_c1() {
        let alpha = q(-1, 2);
        let c1 = Poly::monomial(q(-2, 1), 1);
        let c2 = Poly::constant(q(1, 1));
        let a1 =
            two_component_odd(1, &DerivativeSequence::PowerAlpha(alpha.clone()), &c1, &c2).unwrap();
        assert_eq!(a1, c1.scale(&alpha));
    }

    #[test]
    fn legendre_p2_from_even_form() {
        let c1 = Poly::monomial(q(-2, 1), 1);
        let c2 = Poly::constant(q(1, 1));
        let a2 =
            two_component_even(1, &DerivativeSequence::PowerAlpha(q(-1, 2)), &c1, &c2).unwrap();
        assert_eq!(a2, Poly::new(vec![q(-1, 2), q(0, 1), q(3, 2)]));
    }

    #[test]
    fn zero_index_is_rejected() {
        let one = Poly::constant(q(1, 1));
        let d = DerivativeSequence::ExpShifted;
        assert_eq!(
            two_component_even(0, &d, &one, &one),
            Err(Error::ZeroClosedFormIndex)
        );
        assert_eq!(
            two_component_odd(0, &d, &one, &one),
            Err(Error::ZeroClosedFormIndex)
        );
    }
}
