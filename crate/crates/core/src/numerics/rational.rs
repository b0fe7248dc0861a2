//! Checked helpers for the exact rational scalar.
//!
//! Plain arithmetic goes through the operator impls on
//! [`Rational`](crate::Rational); these wrap the operations that can fail.

use crate::{Error, Rational, Result};
use num_bigint::BigInt;
use num_traits::{Pow, Zero};

pub fn checked_div(a: &Rational, b: &Rational) -> Result<Rational> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(a / b)
}

/// `a^exp` for any integer exponent; negative exponents invert.
pub fn checked_pow(a: &Rational, exp: i32) -> Result<Rational> {
    if exp < 0 && a.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Pow::pow(a, exp))
}

/// Builds `numer/denom` in reduced form.
pub fn ratio(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Rational> {
    let denom = denom.into();
    if denom.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(numer.into(), denom))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        ratio(n, d).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(q(1, 2) + q(1, 3), q(5, 6));
        assert_eq!(q(-1, 2) * q(-3, 2), q(3, 4));
        let half = q(2, 4);
        assert_eq!(*half.numer(), BigInt::from(1));
        assert_eq!(*half.denom(), BigInt::from(2));
        assert_eq!(half.to_string(), "1/2");
        assert_eq!(q(6, -2).to_string(), "-3");
        assert_eq!(q(-1, 2).to_string(), "-1/2");
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(checked_div(&q(1, 2), &q(0, 1)), Err(Error::DivisionByZero));
        assert_eq!(checked_pow(&q(0, 1), -1), Err(Error::DivisionByZero));
        assert_eq!(ratio(1, 0), Err(Error::DivisionByZero));
    }

    #[test]
    fn integer_powers() {
        assert_eq!(checked_pow(&q(-2, 3), 3).unwrap(), q(-8, 27));
        assert_eq!(checked_pow(&q(-2, 3), -2).unwrap(), q(9, 4));
        assert_eq!(checked_pow(&q(0, 1), 0).unwrap(), q(1, 1));
    }

    fn small() -> impl Strategy<Value = Rational> {
        (-20i64..=20, 1i64..=12).prop_map(|(n, d)| q(n, d))
    }

    proptest! {
        #[test]
        fn field_axioms(a in small(), b in small(), c in small()) {
            prop_assert_eq!((a.clone() + &b) + &c, a.clone() + (b.clone() + &c));
            prop_assert_eq!(a.clone() * (b.clone() + &c), a.clone() * &b + a.clone() * &c);
            if !a.is_zero() {
                prop_assert_eq!(checked_div(&a, &a).unwrap(), q(1, 1));
            }
        }

        #[test]
        fn always_reduced(a in small(), b in small()) {
            let r = a * b;
            prop_assert!(r.denom() > &BigInt::from(0));
            prop_assert_eq!(num_integer::Integer::gcd(r.numer(), r.denom()), BigInt::from(1));
        }
    }
}
