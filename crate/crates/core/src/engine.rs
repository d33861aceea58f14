//! Counts of non-equivalent colorings by number of colors.
//!
//! `S(G, k)` is the number of partitions of `V(G)` into exactly `k` stable
//! sets. The engine uses the addition/contraction recurrence
//!
//! ```text
//! S(G, k) = S(G + uv, k) + S(G|uv, k)      for every non-edge uv
//! ```
//!
//! down to complete graphs, where `S(K_n, k) = [k = n]`. Each step either adds
//! an edge or drops a vertex, so the recursion depth is bounded by the order
//! plus the number of missing edges. Results are memoized on
//! [`GraphKey`](crate::canon::GraphKey).

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::Zero;
use thiserror::Error;

use crate::canon::GraphKey;
use crate::graph::Graph;
use crate::rational::ExactRational;

/// Default cap on the order accepted by [`Engine::s_vector`].
pub const DEFAULT_ENGINE_LIMIT: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("the graph has no vertices")]
    EmptyGraph,
    #[error("order {order} exceeds the engine limit of {limit}")]
    OrderAboveLimit { order: usize, limit: usize },
    #[error("order {order} exceeds the enumeration bound of {limit}")]
    OrderAboveEnumerationBound { order: usize, limit: usize },
}

/// `(S(G,1), ..., S(G,n))`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ColorCountVector {
    counts: Vec<BigUint>,
}

impl ColorCountVector {
    pub fn from_counts(counts: Vec<BigUint>) -> Self {
        ColorCountVector { counts }
    }

    pub fn order(&self) -> usize {
        self.counts.len()
    }

    /// Entry `k - 1` is `S(G, k)`.
    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    /// `S(G, k)`; zero for `k = 0` and `k > n`.
    pub fn get(&self, k: usize) -> BigUint {
        if k == 0 {
            BigUint::zero()
        } else {
            self.counts.get(k - 1).cloned().unwrap_or_default()
        }
    }

    /// `B(G) = sum_k S(G, k)`.
    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    /// `T(G) = sum_k k S(G, k)`.
    pub fn weighted_total(&self) -> BigUint {
        self.counts.iter().enumerate().map(|(i, s)| s * (i + 1)).sum()
    }

    /// `A(G) = T(G) / B(G)`.
    pub fn average(&self) -> ExactRational {
        ExactRational::ratio(&self.weighted_total(), &self.total())
    }

    /// Smallest `k` with `S(G, k) > 0`.
    pub fn chromatic_number(&self) -> usize {
        self.counts.iter().position(|s| !s.is_zero()).map_or(0, |i| i + 1)
    }
}

impl fmt::Debug for ColorCountVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `(s1, s2, ..., sn)`.
impl fmt::Display for ColorCountVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, s) in self.counts.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str(")")
    }
}

/// Memoizing deletion-contraction evaluator.
///
/// The cache only holds exact, immutable results, so an engine can be reused
/// across calls and graphs. For parallel work give each worker its own
/// engine.
#[derive(Debug, Clone)]
pub struct Engine {
    limit: usize,
    memo: Option<BTreeMap<GraphKey, Vec<BigUint>>>,
}

impl Default for Engine {
    fn default() -> Self {
        Self::new()
    }
}

impl Engine {
    pub fn new() -> Self {
        Self::with_limit(DEFAULT_ENGINE_LIMIT)
    }

    pub fn with_limit(limit: usize) -> Self {
        Engine {
            limit,
            memo: Some(BTreeMap::new()),
        }
    }

    /// An engine that recomputes everything; used to show the cache is
    /// invisible in results.
    pub fn without_memo() -> Self {
        Engine {
            limit: DEFAULT_ENGINE_LIMIT,
            memo: None,
        }
    }

    pub fn limit(&self) -> usize {
        self.limit
    }

    pub fn cache_len(&self) -> usize {
        self.memo.as_ref().map_or(0, BTreeMap::len)
    }

    pub fn clear_cache(&mut self) {
        if let Some(m) = self.memo.as_mut() {
            m.clear();
        }
    }

    fn admit(&self, g: &Graph) -> Result<(), EngineError> {
        match g.order() {
            0 => Err(EngineError::EmptyGraph),
            n if n > self.limit => Err(EngineError::OrderAboveLimit {
                order: n,
                limit: self.limit,
            }),
            _ => Ok(()),
        }
    }

    pub fn s_vector(&mut self, g: &Graph) -> Result<ColorCountVector, EngineError> {
        self.admit(g)?;
        Ok(ColorCountVector::from_counts(self.count(g)))
    }

    /// `(B(G), T(G))`.
    pub fn bt_of(&mut self, g: &Graph) -> Result<(BigUint, BigUint), EngineError> {
        let s = self.s_vector(g)?;
        Ok((s.total(), s.weighted_total()))
    }

    pub fn average_colors(&mut self, g: &Graph) -> Result<ExactRational, EngineError> {
        Ok(self.s_vector(g)?.average())
    }

    /// `chi(G)`: 1 without edges, 2 when bipartite, otherwise the first
    /// nonzero entry of the S-vector.
    pub fn chromatic_number(&mut self, g: &Graph) -> Result<usize, EngineError> {
        self.admit(g)?;
        if g.size() == 0 {
            Ok(1)
        } else if g.is_bipartite() {
            Ok(2)
        } else {
            Ok(self.s_vector(g)?.chromatic_number())
        }
    }

    fn count(&mut self, g: &Graph) -> Vec<BigUint> {
        let n = g.order();
        if g.is_complete() {
            let mut v = alloc::vec![BigUint::zero(); n];
            v[n - 1] = BigUint::from(1u32);
            return v;
        }
        let key = self.memo.as_ref().map(|_| GraphKey::of(g));
        if let (Some(memo), Some(key)) = (self.memo.as_ref(), key.as_ref()) {
            if let Some(hit) = memo.get(key) {
                return hit.clone();
            }
        }
        let (u, v) = pivot(g);
        let mut result = self.count(&g.add_edge(u, v).expect("pivot is a non-edge"));
        let merged = self.count(&g.contract(u, v).expect("pivot vertices are distinct"));
        for (r, m) in result.iter_mut().zip(merged) {
            *r += m;
        }
        if let (Some(memo), Some(key)) = (self.memo.as_mut(), key) {
            memo.insert(key, result.clone());
        }
        result
    }
}

/// Non-adjacent pair with the most common neighbors; ties go to the
/// lexicographically smallest pair.
pub fn pivot(g: &Graph) -> (usize, usize) {
    let mut best: Option<((usize, usize), u32)> = None;
    for (u, v) in g.non_edges() {
        let common = (g.neighbors(u) & g.neighbors(v)).count_ones();
        if best.is_none_or(|(_, c)| common > c) {
            best = Some(((u, v), common));
        }
    }
    best.expect("graph is not complete").0
}
