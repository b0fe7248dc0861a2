//! Integer partitions in decreasing dictionary order.
//!
//! A partition `[p1, p2, ...]` of `n` indexes the monomial
//! `Δ_p1 Δ_p2 ...` contributing to the order-`n` coefficient. Enumerations
//! list the largest partition first: the first part decides rank and ties
//! fall through to later parts, so `[3,3]` precedes `[3,2,1]`.

use crate::{Error, Result};
use std::collections::BTreeMap;
use std::fmt;

/// Multiset of positive integers, stored as a non-increasing sequence.
///
/// The derived `Ord` is lexicographic on that sequence, which is exactly
/// dictionary order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Accepts parts in any order; rejects zero parts.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// The partition of zero.
    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts, counted with multiplicity.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `part -> multiplicity`.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut counts = BTreeMap::new();
        for &p in &self.parts {
            *counts.entry(p).or_insert(0) += 1;
        }
        counts
    }

    /// Rebuilds a partition from its multiplicity view.
    pub fn from_multiplicities(counts: &BTreeMap<usize, usize>) -> Result<Self> {
        let parts = counts
            .iter()
            .flat_map(|(&part, &m)| std::iter::repeat_n(part, m))
            .collect();
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

/// All partitions of `n`, largest first.
///
/// Counts down from `[n]`: each step splits the lowest reducible entry
/// (the rightmost part greater than 1) by decrementing it and packing the
/// freed units, together with the trailing 1's, greedily into parts no
/// larger than the decremented value.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    if n == 0 {
        return vec![Partition::empty()];
    }
    let mut out = Vec::new();
    let mut current = vec![n];
    loop {
        out.push(Partition {
            parts: current.clone(),
        });
        let Some(i) = current.iter().rposition(|&p| p > 1) else {
            break;
        };
        let ones = current.len() - i - 1;
        let cap = current[i] - 1;
        current.truncate(i);
        current.push(cap);
        let mut rest = ones + 1;
        while rest > 0 {
            let take = rest.min(cap);
            current.push(take);
            rest -= take;
        }
    }
    out
}

/// Partitions of `n` whose parts all lie in `allowed`, largest first.
///
/// Descends through the allowed parts directly, so sparse supports never
/// visit partitions they would discard. Zero entries in `allowed` are
/// ignored.
pub fn enumerate_restricted(n: usize, allowed: &[usize]) -> Vec<Partition> {
    let mut parts: Vec<usize> = allowed.iter().copied().filter(|&p| p > 0).collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    parts.dedup();
    let mut out = Vec::new();
    let mut current = Vec::new();
    descend(n, &parts, &mut current, &mut out);
    out
}

fn descend(rest: usize, parts: &[usize], current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for (i, &p) in parts.iter().enumerate() {
        if p > rest {
            continue;
        }
        current.push(p);
        descend(rest - p, &parts[i..], current, out);
        current.pop();
    }
}

/// Number of partitions of `n`, by the standard coin-change recurrence.
pub fn count_partitions(n: usize) -> u128 {
    let all: Vec<usize> = (1..=n).collect();
    count_restricted(n, &all)
}

pub fn count_restricted(n: usize, allowed: &[usize]) -> u128 {
    let mut parts: Vec<usize> = allowed.iter().copied().filter(|&p| p > 0).collect();
    parts.sort_unstable();
    parts.dedup();
    let mut ways = vec![0u128; n + 1];
    ways[0] = 1;
    for p in parts {
        for total in p..=n {
            ways[total] += ways[total - p];
        }
    }
    ways[n]
}
