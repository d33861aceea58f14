//! Brute-force counts by listing every set partition.
//!
//! Shares no code with the recurrence in [`engine`](crate::engine): set
//! partitions are produced as restricted growth strings and a partition is
//! kept when every block is a stable set.

use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::engine::{ColorCountVector, EngineError};
use crate::graph::{bit, Graph};

/// Largest order accepted by the enumeration.
pub const ORACLE_LIMIT: usize = 11;

/// Restricted growth strings of length `n`: `a[0] = 0` and
/// `a[i] <= 1 + max(a[..i])`. Each one is a set partition, `a[i]` being the
/// block of element `i`.
#[derive(Debug, Clone)]
pub struct RestrictedGrowth {
    word: Vec<usize>,
    // prefix_max[i] = max(word[..=i])
    prefix_max: Vec<usize>,
    fresh: bool,
}

impl RestrictedGrowth {
    pub fn new(n: usize) -> Self {
        RestrictedGrowth {
            word: alloc::vec![0; n],
            prefix_max: alloc::vec![0; n],
            fresh: true,
        }
    }

    /// Advances to the next string; `None` once exhausted.
    pub fn next_word(&mut self) -> Option<&[usize]> {
        let n = self.word.len();
        if self.fresh {
            self.fresh = false;
            return if n == 0 { None } else { Some(&self.word) };
        }
        let i = (1..n).rev().find(|&i| self.word[i] <= self.prefix_max[i - 1])?;
        self.word[i] += 1;
        self.prefix_max[i] = self.prefix_max[i - 1].max(self.word[i]);
        for j in i + 1..n {
            self.word[j] = 0;
            self.prefix_max[j] = self.prefix_max[i];
        }
        Some(&self.word)
    }
}

/// Calls `f` with the block masks of every partition of `V(g)` into stable
/// sets.
fn for_each_stable_partition(g: &Graph, mut f: impl FnMut(&[u64])) {
    let n = g.order();
    let mut strings = RestrictedGrowth::new(n);
    let mut blocks = alloc::vec![0u64; n];
    while let Some(word) = strings.next_word() {
        let used = word.iter().max().map_or(0, |m| m + 1);
        blocks[..used].iter_mut().for_each(|b| *b = 0);
        for (v, &b) in word.iter().enumerate() {
            blocks[b] |= bit(v);
        }
        if blocks[..used].iter().all(|&b| g.is_independent(b)) {
            f(&blocks[..used]);
        }
    }
}

fn admit(g: &Graph) -> Result<(), EngineError> {
    match g.order() {
        0 => Err(EngineError::EmptyGraph),
        n if n > ORACLE_LIMIT => Err(EngineError::OrderAboveEnumerationBound {
            order: n,
            limit: ORACLE_LIMIT,
        }),
        _ => Ok(()),
    }
}

/// `S(G, k)` for `k = 1..n` by exhaustive enumeration.
pub fn oracle_s_vector(g: &Graph) -> Result<ColorCountVector, EngineError> {
    admit(g)?;
    let mut tally = alloc::vec![0u64; g.order()];
    for_each_stable_partition(g, |blocks| tally[blocks.len() - 1] += 1);
    Ok(ColorCountVector::from_counts(
        tally.into_iter().map(BigUint::from).collect(),
    ))
}

/// `S_{W,i}(G, k)`: partitions of `V(G)` into `k` stable sets of which exactly
/// `i` meet `W`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RefinedCounts {
    w: u64,
    // table[k][i], k = 0..=n, i = 0..=|W|
    table: Vec<Vec<BigUint>>,
}

impl RefinedCounts {
    pub fn subset(&self) -> u64 {
        self.w
    }

    pub fn order(&self) -> usize {
        self.table.len() - 1
    }

    /// `S_{W,i}(G, k)`; zero outside the table.
    pub fn get(&self, k: usize, i: usize) -> BigUint {
        self.table
            .get(k)
            .and_then(|row| row.get(i))
            .cloned()
            .unwrap_or_default()
    }

    /// `sum_i S_{W,i}(G, k) = S(G, k)`.
    pub fn row_total(&self, k: usize) -> BigUint {
        self.table.get(k).map(|row| row.iter().sum()).unwrap_or_default()
    }

    /// Nonzero entries as `(k, i, count)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &BigUint)> + '_ {
        self.table.iter().enumerate().flat_map(|(k, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, c)| **c != BigUint::default())
                .map(move |(i, c)| (k, i, c))
        })
    }
}

/// Tally of `S_{W,i}(G, k)`. An empty graph (order 0) has the single empty
/// partition with `k = i = 0`.
pub fn refined_counts(g: &Graph, w: u64) -> Result<RefinedCounts, EngineError> {
    let n = g.order();
    if n > ORACLE_LIMIT {
        return Err(EngineError::OrderAboveEnumerationBound {
            order: n,
            limit: ORACLE_LIMIT,
        });
    }
    let w = w & g.vertex_mask();
    let width = w.count_ones() as usize;
    let mut tally = alloc::vec![alloc::vec![0u64; width + 1]; n + 1];
    if n == 0 {
        tally[0][0] = 1;
    }
    for_each_stable_partition(g, |blocks| {
        let meeting = blocks.iter().filter(|&&b| b & w != 0).count();
        tally[blocks.len()][meeting] += 1;
    });
    Ok(RefinedCounts {
        w,
        table: tally
            .into_iter()
            .map(|row| row.into_iter().map(BigUint::from).collect())
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::bell;

    fn small(v: &ColorCountVector) -> Vec<u64> {
        v.counts().iter().map(|c| u64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn growth_strings_count_bell_numbers() {
        for n in 0..=8 {
            let mut it = RestrictedGrowth::new(n);
            let mut count = 0u64;
            while it.next_word().is_some() {
                count += 1;
            }
            let expected = if n == 0 { 0 } else { u64::try_from(bell(n)).unwrap() };
            assert_eq!(count, expected, "n = {n}");
        }
    }

    #[test]
    fn growth_string_order() {
        let mut it = RestrictedGrowth::new(3);
        let mut words = Vec::new();
        while let Some(w) = it.next_word() {
            words.push(w.to_vec());
        }
        assert_eq!(
            words,
            [[0, 0, 0], [0, 0, 1], [0, 1, 0], [0, 1, 1], [0, 1, 2]].map(|w| w.to_vec())
        );
    }

    #[test]
    fn small_graphs() {
        assert_eq!(small(&oracle_s_vector(&Graph::path(3)).unwrap()), [0, 1, 1]);
        assert_eq!(small(&oracle_s_vector(&Graph::cycle(4)).unwrap()), [0, 1, 2, 1]);
        assert_eq!(oracle_s_vector(&Graph::cycle(4).complement()).unwrap().total(), 7u32.into());
        assert_eq!(
            small(&oracle_s_vector(&Graph::path(5).complement()).unwrap()),
            [0, 0, 3, 4, 1]
        );
        assert_eq!(oracle_s_vector(&Graph::empty(0)), Err(EngineError::EmptyGraph));
        assert!(matches!(
            oracle_s_vector(&Graph::empty(12)),
            Err(EngineError::OrderAboveEnumerationBound { order: 12, limit: 11 })
        ));
    }

    #[test]
    fn refined_trivial_cases() {
        let p3 = Graph::path(3);
        let r = refined_counts(&p3, 0).unwrap();
        let s = oracle_s_vector(&p3).unwrap();
        for k in 1..=3 {
            assert_eq!(r.get(k, 0), s.get(k));
        }
        let k2 = Graph::complete(2);
        let r = refined_counts(&k2, k2.vertex_mask()).unwrap();
        let entries: Vec<_> = r.entries().map(|(k, i, c)| (k, i, c.clone())).collect();
        assert_eq!(entries, [(2, 2, BigUint::from(1u32))]);
    }

    #[test]
    fn refined_rows_sum_to_counts() {
        let g = Graph::cycle(5).add_isolated(1).unwrap();
        let s = oracle_s_vector(&g).unwrap();
        for w in [0b1, 0b101, 0b111111, 0b100110] {
            let r = refined_counts(&g, w).unwrap();
            for k in 0..=g.order() {
                assert_eq!(r.row_total(k), s.get(k));
                for i in (k.min(w.count_ones() as usize) + 1)..=6 {
                    assert_eq!(r.get(k, i), BigUint::default());
                }
            }
        }
    }
}
