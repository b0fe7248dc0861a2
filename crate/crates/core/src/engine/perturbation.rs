use crate::numerics::{Polynomial, Scalar};
use crate::{Error, Result};
use num_traits::Zero;
use std::collections::BTreeMap;

/// The inner series `c1*x + c2*x^2 + ...`, keyed by degree.
///
/// Zero coefficients are never stored, so the key set is the support.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Perturbation<T> {
    terms: BTreeMap<usize, Polynomial<T>>,
}

impl<T: Scalar> Perturbation<T> {
    pub fn new() -> Self {
        Perturbation {
            terms: BTreeMap::new(),
        }
    }

    /// Builds from `(degree, coefficient)` pairs. Degrees must be unique
    /// and at least 1.
    pub fn from_terms<I, C>(terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, C)>,
        C: Into<Polynomial<T>>,
    {
        let mut seen = BTreeMap::new();
        for (degree, c) in terms {
            if degree == 0 {
                return Err(Error::ZeroDegree);
            }
            if seen.insert(degree, c.into()).is_some() {
                return Err(Error::DuplicateDegree(degree));
            }
        }
        seen.retain(|_, c| !c.is_zero());
        Ok(Perturbation { terms: seen })
    }

    /// Like [`from_terms`](Self::from_terms), additionally rejecting any
    /// degree above `order`.
    pub fn for_order<I, C>(terms: I, order: usize) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, C)>,
        C: Into<Polynomial<T>>,
    {
        let p = Self::from_terms(terms)?;
        p.check_order(order)?;
        Ok(p)
    }

    pub fn with_term(mut self, degree: usize, c: impl Into<Polynomial<T>>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        if self.terms.contains_key(&degree) {
            return Err(Error::DuplicateDegree(degree));
        }
        let c = c.into();
        if !c.is_zero() {
            self.terms.insert(degree, c);
        }
        Ok(self)
    }

    /// Degrees with a nonzero coefficient, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.terms.keys().copied().collect()
    }

    pub fn coefficient(&self, degree: usize) -> Option<&Polynomial<T>> {
        self.terms.get(&degree)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &Polynomial<T>)> {
        self.terms.iter().map(|(&d, c)| (d, c))
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().next_back().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Drops every term of degree above `order`.
    pub fn truncated(&self, order: usize) -> Self {
        Perturbation {
            terms: self
                .terms
                .range(..=order)
                .map(|(&d, c)| (d, c.clone()))
                .collect(),
        }
    }

    pub(crate) fn check_order(&self, order: usize) -> Result<()> {
        match self.max_degree() {
            Some(degree) if degree > order => Err(Error::DegreeExceedsOrder { degree, order }),
            _ => Ok(()),
        }
    }
}
