use proptest::prelude::*;
use std::collections::BTreeSet;
use translation_series::{
    count_partitions, count_restricted, enumerate_partitions, enumerate_restricted, Partition,
};

/// Recursive combination oracle: `{n} = [n] ⊕ [{n-k}, {k}]` over all
/// splits, with every combination sorted and duplicates merged.
fn combine_oracle(n: usize) -> BTreeSet<Vec<usize>> {
    let mut memo: Vec<BTreeSet<Vec<usize>>> = vec![BTreeSet::from([vec![]])];
    for m in 1..=n {
        let mut set = BTreeSet::from([vec![m]]);
        for k in 1..m {
            for a in &memo[m - k] {
                for b in &memo[k] {
                    let mut joined: Vec<usize> = a.iter().chain(b).copied().collect();
                    joined.sort_unstable_by(|x, y| y.cmp(x));
                    set.insert(joined);
                }
            }
        }
        memo.push(set);
    }
    memo.pop().unwrap()
}

/// Brute force: sort each of the 2^(n-1) compositions of `n`.
fn composition_oracle(n: usize) -> BTreeSet<Vec<usize>> {
    if n == 0 {
        return BTreeSet::from([vec![]]);
    }
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << (n - 1)) {
        let mut parts = Vec::new();
        let mut run = 1;
        for bit in 0..n - 1 {
            if mask >> bit & 1 == 1 {
                parts.push(run);
                run = 1;
            } else {
                run += 1;
            }
        }
        parts.push(run);
        parts.sort_unstable_by(|x, y| y.cmp(x));
        out.insert(parts);
    }
    out
}

fn listing(ps: &[Partition]) -> Vec<Vec<usize>> {
    ps.iter().map(|p| p.parts().to_vec()).collect()
}

#[test]
fn six_in_dictionary_order() {
    let expected: Vec<Vec<usize>> = vec![
        vec![6],
        vec![5, 1],
        vec![4, 2],
        vec![4, 1, 1],
        vec![3, 3],
        vec![3, 2, 1],
        vec![3, 1, 1, 1],
        vec![2, 2, 2],
        vec![2, 2, 1, 1],
        vec![2, 1, 1, 1, 1],
        vec![1, 1, 1, 1, 1, 1],
    ];
    assert_eq!(listing(&enumerate_partitions(6)), expected);
}

#[test]
fn eight_has_twenty_two_in_dictionary_order() {
    let got = listing(&enumerate_partitions(8));
    assert_eq!(got.len(), 22);
    assert_eq!(got[0], vec![8]);
    assert_eq!(got[12], vec![3, 3, 2]);
    assert_eq!(got[13], vec![3, 3, 1, 1]);
    assert_eq!(got[21], vec![1; 8]);
}

#[test]
fn complete_and_unique_against_both_oracles() {
    for n in 0..=12 {
        let got = listing(&enumerate_partitions(n));
        let set: BTreeSet<_> = got.iter().cloned().collect();
        assert_eq!(set.len(), got.len(), "duplicates at n={n}");
        assert_eq!(set, combine_oracle(n), "n={n}");
        assert_eq!(set, composition_oracle(n), "n={n}");
    }
}

#[test]
fn strictly_decreasing_order() {
    for n in 1..=14 {
        let got = enumerate_partitions(n);
        assert!(got.windows(2).all(|w| w[0] > w[1]), "n={n}");
        assert!(got.iter().all(|p| p.total() == n));
        assert!(got
            .iter()
            .all(|p| p.parts().windows(2).all(|w| w[0] >= w[1])));
    }
}

#[test]
fn classical_counts() {
    let expected = [1u128, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77];
    for (n, &count) in expected.iter().enumerate() {
        assert_eq!(count_partitions(n), count);
        assert_eq!(enumerate_partitions(n).len() as u128, count);
    }
}

#[test]
fn two_part_counts_grow_linearly() {
    for n in 0..=12 {
        assert_eq!(count_restricted(n, &[1, 2]), (n / 2 + 1) as u128);
        assert_eq!(enumerate_restricted(n, &[1, 2]).len(), n / 2 + 1);
    }
}

#[test]
fn sparse_support_stays_cheap() {
    let evens: Vec<usize> = (1..=20).map(|k| 2 * k).collect();
    let got = enumerate_restricted(40, &evens);
    assert_eq!(got.len() as u128, count_partitions(20));
    assert!(got.iter().all(|p| p.parts().iter().all(|x| x % 2 == 0)));
}

proptest! {
    #[test]
    fn restriction_matches_filter(n in 0usize..=12, allowed in prop::collection::btree_set(1usize..=12, 1..5)) {
        let allowed: Vec<usize> = allowed.into_iter().collect();
        let filtered: Vec<Partition> = enumerate_partitions(n)
            .into_iter()
            .filter(|p| p.parts().iter().all(|x| allowed.contains(x)))
            .collect();
        let direct = enumerate_restricted(n, &allowed);
        prop_assert_eq!(direct.len() as u128, count_restricted(n, &allowed));
        prop_assert_eq!(direct, filtered);
    }

    #[test]
    fn multiplicity_view_round_trips(n in 1usize..=10, pick in 0usize..1000) {
        let all = enumerate_partitions(n);
        let p = &all[pick % all.len()];
        let m = p.multiplicities();
        prop_assert_eq!(m.iter().map(|(part, k)| part * k).sum::<usize>(), n);
        prop_assert_eq!(&Partition::from_multiplicities(&m).unwrap(), p);
    }
}
