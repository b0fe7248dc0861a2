use super::Scalar;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, Mul, Neg, Sub};

/// Dense univariate polynomial in the auxiliary symbol `u`.
///
/// `coeffs[k]` is the coefficient of `u^k`. The highest stored coefficient
/// is always nonzero, so the zero polynomial has no coefficients and
/// structural equality is value equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c * u^degree`.
    pub fn monomial(c: T, degree: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); degree + 1];
        coeffs[degree] = c;
        Polynomial { coeffs }
    }

    /// The symbol `u` itself.
    pub fn u() -> Self {
        Self::monomial(T::one(), 1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `u^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&T> {
        self.coeffs.last()
    }

    /// Degree-0 value, if this is a constant.
    pub fn as_constant(&self) -> Option<T> {
        match self.coeffs.len() {
            0 => Some(T::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Horner evaluation at `u = at`.
    pub fn eval(&self, at: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * at.clone() + c.clone())
    }
}

impl<T: Scalar> Zero for Polynomial<T> {
    fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Scalar> One for Polynomial<T> {
    fn one() -> Self {
        Polynomial {
            coeffs: vec![T::one()],
        }
    }
}

impl<T: Scalar> From<T> for Polynomial<T> {
    fn from(c: T) -> Self {
        Self::constant(c)
    }
}

impl<T: Scalar> Add<&Polynomial<T>> for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn add(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a = a.clone() + b.clone();
        }
        Polynomial::new(coeffs)
    }
}

impl<T: Scalar> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn neg(self) -> Polynomial<T> {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<T: Scalar> Sub<&Polynomial<T>> for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn sub(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        self + &(-rhs)
    }
}

impl<T: Scalar> Mul<&Polynomial<T>> for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn mul(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(coeffs)
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $method:ident),*) => {$(
        impl<T: Scalar> $tr<Polynomial<T>> for Polynomial<T> {
            type Output = Polynomial<T>;
            fn $method(self, rhs: Polynomial<T>) -> Polynomial<T> {
                (&self).$method(&rhs)
            }
        }
        impl<T: Scalar> $tr<&Polynomial<T>> for Polynomial<T> {
            type Output = Polynomial<T>;
            fn $method(self, rhs: &Polynomial<T>) -> Polynomial<T> {
                (&self).$method(rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl<T: Scalar> Neg for Polynomial<T> {
    type Output = Polynomial<T>;

    fn neg(self) -> Polynomial<T> {
        -&self
    }
}

impl<T: Scalar> Sum for Polynomial<T> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, p| acc + p)
    }
}

impl<T: Scalar> Product for Polynomial<T> {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, p| acc * p)
    }
}

/// Highest degree first, e.g. `5/2*u^3 - 3/2*u`; unit coefficients and
/// `^1` are omitted, and the zero polynomial prints as `0`.
impl<T: Scalar + Signed + fmt::Display> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            match (first, negative) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let magnitude = c.abs();
            match (k, magnitude.is_one()) {
                (0, _) => write!(f, "{magnitude}")?,
                (_, true) => {}
                (_, false) => write!(f, "{magnitude}*")?,
            }
            match k {
                0 => {}
                1 => f.write_str("u")?,
                _ => write!(f, "u^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rational::ratio;
    use crate::{Poly, Rational};
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        ratio(n, d).unwrap()
    }

    fn poly(coeffs: &[(i64, i64)]) -> Poly {
        Poly::new(coeffs.iter().map(|&(n, d)| q(n, d)).collect())
    }

    #[test]
    fn canonical_form_trims_trailing_zeros() {
        let p = poly(&[(1, 1), (0, 1), (0, 1)]);
        assert_eq!(p.coeffs().len(), 1);
        assert_eq!(Poly::new(vec![q(0, 1)]), Poly::zero());
        assert_eq!(Poly::zero().degree(), None);
    }

    #[test]
    fn examples() {
        let minus_two_u = Poly::monomial(q(-2, 1), 1);
        assert_eq!(minus_two_u.pow(2), Poly::monomial(q(4, 1), 2));
        let p = poly(&[(3, 1), (1, 2)]);
        assert_eq!(&p * &Poly::zero(), Poly::zero());
        let u_plus = poly(&[(1, 1), (1, 1)]);
        let u_minus = poly(&[(-1, 1), (1, 1)]);
        assert_eq!(u_plus * u_minus, poly(&[(-1, 1), (0, 1), (1, 1)]));
    }

    #[test]
    fn text_form() {
        assert_eq!(
            poly(&[(0, 1), (-3, 2), (0, 1), (5, 2)]).to_string(),
            "5/2*u^3 - 3/2*u"
        );
        assert_eq!(
            poly(&[(-1, 2), (0, 1), (3, 2)]).to_string(),
            "3/2*u^2 - 1/2"
        );
        assert_eq!(poly(&[(-1, 1), (0, 1), (1, 1)]).to_string(), "u^2 - 1");
        assert_eq!(poly(&[(0, 1), (-2, 1)]).to_string(), "-2*u");
        assert_eq!(poly(&[(0, 1), (-1, 1)]).to_string(), "-u");
        assert_eq!(poly(&[(-7, 3)]).to_string(), "-7/3");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(Poly::u().to_string(), "u");
    }

    #[test]
    fn eval_and_pow_zero() {
        let p = poly(&[(-1, 2), (0, 1), (3, 2)]);
        assert_eq!(p.eval(&q(1, 1)), q(1, 1));
        assert_eq!(p.pow(0), Poly::one());
        assert_eq!(Poly::zero().pow(0), Poly::one());
    }

    fn small_poly() -> impl Strategy<Value = Poly> {
        prop::collection::vec((-3i64..=3, 1i64..=3), 0..=7)
            .prop_map(|cs| Poly::new(cs.into_iter().map(|(n, d)| q(n, d)).collect()))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!((&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!((&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &a * &b + &a * &c);
            prop_assert_eq!(&a - &a, Poly::zero());
        }

        #[test]
        fn canonical_after_ops(a in small_poly(), b in small_poly()) {
            for p in [&a + &b, &a - &b, &a * &b] {
                prop_assert!(p.leading_coeff().is_none_or(|c| !c.is_zero()));
            }
        }

        #[test]
        fn eval_is_a_ring_homomorphism(a in small_poly(), b in small_poly(), n in -4i64..=4, d in 1i64..=3) {
            let at = q(n, d);
            prop_assert_eq!((&a * &b).eval(&at), a.eval(&at) * b.eval(&at));
            prop_assert_eq!((&a + &b).eval(&at), a.eval(&at) + b.eval(&at));
        }
    }
}
