use super::{DerivativeSequence, Perturbation, SeriesExpansion};
use crate::numerics::{factorial, factorial_table, Polynomial, Scalar};
use crate::partitions::{enumerate_restricted, Partition};
use crate::{Error, Result};
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// `(part, multiplicity)` runs of a non-increasing part list.
fn runs(parts: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    parts.chunk_by(|a, b| a == b).map(|run| (run[0], run.len()))
}

/// Contribution of one partition to its order's coefficient:
/// `d_K * prod(c_q^m_q) / prod(m_q!)` with `K` the number of parts.
pub fn monomial_coefficient<T: Scalar>(
    partition: &Partition,
    derivatives: &DerivativeSequence<T>,
    perturbation: &Perturbation<T>,
) -> Result<Polynomial<T>> {
    let mut product = Polynomial::one();
    let mut weight = T::one();
    for (part, m) in runs(partition.parts()) {
        let c = perturbation
            .coefficient(part)
            .ok_or(Error::PartOutsideSupport(part))?;
        product = product * c.pow(m as u32);
        weight = weight / factorial::<T>(m);
    }
    weight = weight * derivatives.get(partition.len())?;
    Ok(product.scale(&weight))
}

/// Coefficients `a_0..a_order` of `f(1 + perturbation)`.
///
/// `a_n` sums [`monomial_coefficient`] over the partitions of `n` drawn
/// from the perturbation's support. Derivatives, factorials, and powers of
/// each `c_q` are tabulated once up front.
pub fn expand<T: Scalar>(
    derivatives: &DerivativeSequence<T>,
    perturbation: &Perturbation<T>,
    order: usize,
) -> Result<SeriesExpansion<T>> {
    perturbation.check_order(order)?;
    let support = perturbation.support();
    let max_parts = support.first().map_or(0, |&smallest| order / smallest);
    let d = derivatives.table(max_parts)?;
    let fact = factorial_table::<T>(max_parts);

    let powers: BTreeMap<usize, Vec<Polynomial<T>>> = perturbation
        .terms()
        .map(|(degree, c)| {
            let mut table = vec![Polynomial::one()];
            for m in 1..=order / degree {
                let next = &table[m - 1] * c;
                table.push(next);
            }
            (degree, table)
        })
        .collect();

    let mut coefficients = Vec::with_capacity(order + 1);
    coefficients.push(Polynomial::constant(d[0].clone()));
    for n in 1..=order {
        let mut a_n = Polynomial::zero();
        for partition in enumerate_restricted(n, &support) {
            let mut product = Polynomial::one();
            let mut weight = d[partition.len()].clone();
            for (part, m) in runs(partition.parts()) {
                product = product * &powers[&part][m];
                weight = weight / fact[m].clone();
            }
            a_n = a_n + product.scale(&weight);
        }
        coefficients.push(a_n);
    }
    Ok(SeriesExpansion::new(coefficients))
}
