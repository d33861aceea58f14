//! Simple undirected graphs on at most 64 vertices, stored as one adjacency
//! bitmask per vertex.
//!
//! Every operation returns a new value; a `Graph` is never mutated in place
//! once handed out. Relabeling conventions are fixed so that recurrences that
//! rewrite graphs produce the same sequence of graphs on every run:
//!
//! * paths are labeled `0 - 1 - ... - (n-1)`,
//! * `Q_n` is the path plus the edge `{0, 2}`,
//! * `contract(u, v)` keeps the merged vertex at `min(u, v)` and shifts every
//!   label above `max(u, v)` down by one,
//! * `disjoint_union(g, h)` and `join(g, h)` put the vertices of `h` after
//!   those of `g`.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use thiserror::Error;

/// Largest order representable with one `u64` row per vertex.
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("order {0} exceeds the maximum of {MAX_ORDER}")]
    OrderTooLarge(usize),
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("edge {{{0},{1}}} is not present")]
    EdgeAbsent(usize, usize),
    #[error("edge {{{0},{1}}} is already present")]
    EdgePresent(usize, usize),
    #[error("vertices must be distinct (got {0} twice)")]
    SameVertex(usize),
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),
    #[error("bad parameters for {family}: {reason}")]
    BadParameter {
        family: &'static str,
        reason: &'static str,
    },
    #[error("cannot parse edge list: {0}")]
    Parse(String),
    #[error("canonical labeling supports order at most {limit}, got {order}")]
    CanonicalLimit { order: usize, limit: usize },
}

/// A vertex-labeled simple undirected graph of order at most [`MAX_ORDER`].
///
/// Bit `j` of `adj[i]` is set iff `{i, j}` is an edge. Rows are symmetric,
/// have a clear diagonal and no bits at positions `>= n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the lowest `n` bits set.
#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the positions of the set bits of `mask`, lowest first.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

impl Graph {
    /// Edgeless graph `E_n`.
    ///
    /// Panics if `n > MAX_ORDER`; use [`Graph::try_empty`] for a fallible
    /// variant.
    pub fn empty(n: usize) -> Self {
        Self::try_empty(n).expect("order within MAX_ORDER")
    }

    pub fn try_empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(n));
        }
        Ok(Graph {
            n,
            adj: alloc::vec![0; n],
        })
    }

    /// Builds a graph from an edge list. Duplicate edges are ignored.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::try_empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::SameVertex(u));
            }
            g.set(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, validating every invariant.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self, GraphError> {
        let n = rows.len();
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(n));
        }
        for (i, &row) in rows.iter().enumerate() {
            if row & !low_mask(n) != 0 || row & bit(i) != 0 {
                return Err(GraphError::Parse("adjacency row out of range or self-loop".to_string()));
            }
            for j in bits(row) {
                if rows[j] & bit(i) == 0 {
                    return Err(GraphError::Parse("adjacency is not symmetric".to_string()));
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for i in 0..n {
            g.adj[i] = low_mask(n) & !bit(i);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Self::empty(n);
        for i in 1..n {
            g.set(i - 1, i);
        }
        g
    }

    /// Cycle `C_n`, `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut g = Self::path(n);
        g.set(0, n - 1);
        g
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Self::empty(a + b);
        for i in 0..a {
            for j in a..a + b {
                g.set(i, j);
            }
        }
        g
    }

    /// Star `K_{1,r}` with center 0. `star(0)` is `K_1`.
    pub fn star(r: usize) -> Self {
        Self::complete_bipartite(1, r)
    }

    /// `Q_n`: the path `P_n` plus the edge `{0, 2}`, `n >= 3`.
    pub fn q(n: usize) -> Self {
        assert!(n >= 3, "Q_n needs at least 3 vertices");
        let mut g = Self::path(n);
        g.set(0, 2);
        g
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    /// Neighborhood of `v` as a bitmask.
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    /// Mask of all vertices.
    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.n)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.adj[u] >> u >> 1).map(move |d| (u, u + 1 + d)))
    }

    /// Unordered non-adjacent pairs `(u, v)` with `u < v`.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            let missing = !self.adj[u] & self.vertex_mask() & !low_mask(u + 1);
            bits(missing).map(move |v| (u, v))
        })
    }

    pub fn is_complete(&self) -> bool {
        self.size() == self.n * self.n.saturating_sub(1) / 2
    }

    /// True iff no two vertices of `mask` are adjacent.
    pub fn is_independent(&self, mask: u64) -> bool {
        bits(mask).all(|v| self.adj[v] & mask == 0)
    }

    /// True iff every two vertices of `mask` are adjacent.
    pub fn is_clique(&self, mask: u64) -> bool {
        bits(mask).all(|v| (mask & !bit(v) & !self.adj[v]) == 0)
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.n,
            })
        }
    }

    fn set(&mut self, u: usize, v: usize) {
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
    }

    fn clear(&mut self, u: usize, v: usize) {
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SameVertex(u));
        }
        Ok(())
    }

    /// `G - uv`.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        self.check_pair(u, v)?;
        if !self.has_edge(u, v) {
            return Err(GraphError::EdgeAbsent(u, v));
        }
        let mut g = self.clone();
        g.clear(u, v);
        Ok(g)
    }

    /// `G + uv`.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        self.check_pair(u, v)?;
        if self.has_edge(u, v) {
            return Err(GraphError::EdgePresent(u, v));
        }
        let mut g = self.clone();
        g.set(u, v);
        Ok(g)
    }

    /// `G|uv`: identifies `u` and `v`, dropping the edge `uv` if present.
    ///
    /// The merged vertex keeps label `min(u, v)`; labels above `max(u, v)`
    /// shift down by one.
    pub fn contract(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        self.check_pair(u, v)?;
        let (keep, gone) = if u < v { (u, v) } else { (v, u) };
        let merged = (self.adj[keep] | self.adj[gone]) & !bit(keep) & !bit(gone);
        let mut rows = Vec::with_capacity(self.n - 1);
        for i in 0..self.n {
            if i == gone {
                continue;
            }
            let mut row = if i == keep { merged } else { self.adj[i] };
            if i != keep && row & bit(gone) != 0 {
                row = (row & !bit(gone)) | bit(keep);
            }
            rows.push(squeeze(row, gone));
        }
        Ok(Graph {
            n: self.n - 1,
            adj: rows,
        })
    }

    /// `G - v`: removes `v` and its incident edges; higher labels shift down.
    pub fn remove_vertex(&self, v: usize) -> Result<Self, GraphError> {
        self.check_vertex(v)?;
        let adj = (0..self.n)
            .filter(|&i| i != v)
            .map(|i| squeeze(self.adj[i] & !bit(v), v))
            .collect();
        Ok(Graph { n: self.n - 1, adj })
    }

    /// Subgraph induced by the vertices of `mask`, relabeled in increasing
    /// order.
    pub fn induced(&self, mask: u64) -> Self {
        let keep: Vec<usize> = bits(mask & self.vertex_mask()).collect();
        let mut g = Self::empty(keep.len());
        for (a, &u) in keep.iter().enumerate() {
            for (b, &v) in keep.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    g.set(a, b);
                }
            }
        }
        g
    }

    pub fn disjoint_union(&self, other: &Graph) -> Result<Self, GraphError> {
        let n = self.n + other.n;
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(n));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|r| r << self.n));
        Ok(Graph { n, adj })
    }

    /// `G + H`: disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Result<Self, GraphError> {
        let mut g = self.disjoint_union(other)?;
        let left = low_mask(self.n);
        let right = g.vertex_mask() & !left;
        for i in 0..g.n {
            g.adj[i] |= if i < self.n { right } else { left };
        }
        Ok(g)
    }

    pub fn complement(&self) -> Self {
        let all = self.vertex_mask();
        let adj = (0..self.n).map(|i| !self.adj[i] & all & !bit(i)).collect();
        Graph { n: self.n, adj }
    }

    /// `G ∪ pK_1`.
    pub fn add_isolated(&self, p: usize) -> Result<Self, GraphError> {
        if self.n + p > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(self.n + p));
        }
        self.disjoint_union(&Graph::empty(p))
    }

    /// True iff `N(v)` induces a clique. Isolated and degree-one vertices are
    /// simplicial.
    pub fn is_simplicial(&self, v: usize) -> bool {
        assert!(v < self.n, "vertex {v} out of range");
        self.is_clique(self.adj[v])
    }

    /// Perfect elimination ordering by maximum cardinality search, verified.
    ///
    /// Returns `None` iff the graph is not chordal. In the returned order each
    /// vertex is simplicial in the subgraph induced by itself and the
    /// vertices after it.
    pub fn perfect_elimination_order(&self) -> Option<Vec<usize>> {
        let n = self.n;
        let mut weight = alloc::vec![0usize; n];
        let mut numbered = 0u64;
        let mut visit = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| numbered & bit(v) == 0)
                .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
                .expect("an unnumbered vertex remains");
            numbered |= bit(v);
            visit.push(v);
            for u in bits(self.adj[v] & !numbered) {
                weight[u] += 1;
            }
        }
        visit.reverse();
        let mut later = self.vertex_mask();
        for &v in &visit {
            later &= !bit(v);
            if !self.is_clique(self.adj[v] & later) {
                return None;
            }
        }
        Some(visit)
    }

    pub fn is_chordal(&self) -> bool {
        self.perfect_elimination_order().is_some()
    }

    /// Two-coloring by breadth-first search.
    pub fn is_bipartite(&self) -> bool {
        let mut side = [0u64; 2];
        let mut seen = 0u64;
        for start in 0..self.n {
            if seen & bit(start) != 0 {
                continue;
            }
            let mut frontier = bit(start);
            let mut parity = 0;
            seen |= frontier;
            while frontier != 0 {
                side[parity] |= frontier;
                let mut next = 0u64;
                for v in bits(frontier) {
                    next |= self.adj[v];
                }
                if next & side[parity] != 0 {
                    return false;
                }
                next &= !seen;
                seen |= next;
                frontier = next;
                parity ^= 1;
            }
        }
        true
    }

    /// Vertex mask of the connected component containing `v`.
    pub fn component(&self, v: usize) -> u64 {
        assert!(v < self.n, "vertex {v} out of range");
        let mut seen = bit(v);
        let mut frontier = seen;
        while frontier != 0 {
            let next = bits(frontier).fold(0, |m, u| m | self.adj[u]) & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// True for order 0 and for graphs with a single component.
    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component(0) == self.vertex_mask()
    }

    /// Trees are connected with `n - 1` edges.
    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.size() + 1 == self.n && self.is_connected()
    }

    /// Number of colors used by first-fit coloring in label order; an upper
    /// bound on the chromatic number.
    pub fn greedy_colors(&self) -> usize {
        let mut classes: Vec<u64> = Vec::new();
        for v in 0..self.n {
            match classes.iter_mut().find(|c| **c & self.adj[v] == 0) {
                Some(c) => *c |= bit(v),
                None => classes.push(bit(v)),
            }
        }
        classes.len()
    }

    /// Parses the edge-list literal `"n; u-v,u-v,..."`. The part after `;`
    /// may be empty.
    pub fn parse_edge_list(text: &str) -> Result<Self, GraphError> {
        let (order, rest) = text
            .split_once(';')
            .ok_or_else(|| GraphError::Parse("missing `;` after the order".to_string()))?;
        let n: usize = order
            .trim()
            .parse()
            .map_err(|_| GraphError::Parse(alloc::format!("bad order `{}`", order.trim())))?;
        let mut edges = Vec::new();
        for item in rest.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (a, b) = item
                .split_once('-')
                .ok_or_else(|| GraphError::Parse(alloc::format!("bad edge `{item}`")))?;
            let parse = |s: &str| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| GraphError::Parse(alloc::format!("bad vertex in `{item}`")))
            };
            edges.push((parse(a)?, parse(b)?));
        }
        Self::from_edges(n, &edges)
    }
}

/// Removes bit position `gone` from `row`, shifting higher bits down.
fn squeeze(row: u64, gone: usize) -> u64 {
    let low = row & low_mask(gone);
    let high = if gone + 1 >= 64 { 0 } else { row >> (gone + 1) };
    low | (high << gone)
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({self})")
    }
}

/// Formats as the edge-list literal accepted by [`Graph::parse_edge_list`].
impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            let sep = if i == 0 { " " } else { "," };
            write!(f, "{sep}{u}-{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Graph {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse_edge_list(s)
    }
}

/// The named graph families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Complete,
    Empty,
    Path,
    Cycle,
    CompleteBipartite,
    Star,
    Q,
    PathComplement,
    CycleComplement,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::Complete,
        Family::Empty,
        Family::Path,
        Family::Cycle,
        Family::CompleteBipartite,
        Family::Star,
        Family::Q,
        Family::PathComplement,
        Family::CycleComplement,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Complete => "complete",
            Family::Empty => "empty",
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::CompleteBipartite => "complete-bipartite",
            Family::Star => "star",
            Family::Q => "q",
            Family::PathComplement => "path-complement",
            Family::CycleComplement => "cycle-complement",
        }
    }

    fn arity(self) -> usize {
        match self {
            Family::CompleteBipartite => 2,
            _ => 1,
        }
    }
}

impl FromStr for Family {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.trim().to_ascii_lowercase();
        Family::ALL
            .into_iter()
            .find(|f| f.name() == lower)
            .or(match lower.as_str() {
                "k" | "clique" => Some(Family::Complete),
                "e" | "edgeless" => Some(Family::Empty),
                "p" => Some(Family::Path),
                "c" => Some(Family::Cycle),
                "kab" | "bipartite" => Some(Family::CompleteBipartite),
                _ => None,
            })
            .ok_or_else(|| GraphError::UnknownFamily(s.to_string()))
    }
}

/// Builds a member of a named family.
///
/// Parameters must be positive; cycles need `n >= 3`, `Q_n` needs `n >= 3`,
/// complete bipartite graphs take two parameters.
pub fn make_family(family: Family, params: &[usize]) -> Result<Graph, GraphError> {
    let name = family.name();
    if params.len() != family.arity() {
        return Err(GraphError::BadParameter {
            family: name,
            reason: "wrong number of parameters",
        });
    }
    if params.contains(&0) {
        return Err(GraphError::BadParameter {
            family: name,
            reason: "parameters must be positive",
        });
    }
    let total: usize = match family {
        Family::Star => params[0] + 1,
        _ => params.iter().sum(),
    };
    if total > MAX_ORDER {
        return Err(GraphError::OrderTooLarge(total));
    }
    let n = params[0];
    let at_least_3 = |g: fn(usize) -> Graph| {
        if n < 3 {
            Err(GraphError::BadParameter {
                family: name,
                reason: "order must be at least 3",
            })
        } else {
            Ok(g(n))
        }
    };
    match family {
        Family::Complete => Ok(Graph::complete(n)),
        Family::Empty => Ok(Graph::empty(n)),
        Family::Path => Ok(Graph::path(n)),
        Family::Cycle => at_least_3(Graph::cycle),
        Family::CompleteBipartite => Ok(Graph::complete_bipartite(params[0], params[1])),
        Family::Star => Ok(Graph::star(n)),
        Family::Q => at_least_3(Graph::q),
        Family::PathComplement => Ok(Graph::path(n).complement()),
        Family::CycleComplement => at_least_3(|n| Graph::cycle(n).complement()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn g(s: &str) -> Graph {
        s.parse().unwrap()
    }

    #[test]
    fn families_have_documented_labeling() {
        assert_eq!(make_family(Family::Path, &[3]).unwrap(), g("3; 0-1,1-2"));
        assert_eq!(make_family(Family::Complete, &[1]).unwrap(), Graph::empty(1));
        let q3 = make_family(Family::Q, &[3]).unwrap();
        assert_eq!(q3, Graph::cycle(3));
        assert_eq!(Graph::q(5), g("5; 0-1,1-2,2-3,3-4,0-2"));
        assert_eq!(Graph::star(3), g("4; 0-1,0-2,0-3"));
        assert_eq!(Graph::complete_bipartite(2, 3).size(), 6);
    }

    #[test]
    fn family_errors() {
        assert!(matches!(
            make_family(Family::Cycle, &[2]),
            Err(GraphError::BadParameter { .. })
        ));
        assert!(matches!(make_family(Family::Path, &[0]), Err(GraphError::BadParameter { .. })));
        assert!(matches!(
            make_family(Family::CompleteBipartite, &[2]),
            Err(GraphError::BadParameter { .. })
        ));
        assert!(matches!("dodecahedron".parse::<Family>(), Err(GraphError::UnknownFamily(_))));
        assert!(matches!(make_family(Family::Empty, &[65]), Err(GraphError::OrderTooLarge(65))));
        assert_eq!("path-complement".parse::<Family>().unwrap(), Family::PathComplement);
    }

    #[test]
    fn edge_rewrites() {
        let k3 = Graph::complete(3);
        assert_eq!(k3.delete_edge(0, 1).unwrap(), g("3; 1-2,0-2"));
        assert_eq!(Graph::path(3).delete_edge(0, 1).unwrap(), g("3; 1-2"));
        assert_eq!(Graph::complete(2).delete_edge(0, 1).unwrap(), Graph::empty(2));
        assert_eq!(Graph::empty(2).add_edge(0, 1).unwrap(), Graph::complete(2));
        assert_eq!(Graph::path(3).add_edge(0, 2).unwrap(), Graph::complete(3));
        assert_eq!(Graph::path(4).add_edge(0, 2).unwrap(), Graph::q(4));

        assert_eq!(Graph::path(3).delete_edge(0, 2), Err(GraphError::EdgeAbsent(0, 2)));
        assert_eq!(Graph::path(3).add_edge(0, 1), Err(GraphError::EdgePresent(0, 1)));
        assert_eq!(Graph::path(3).add_edge(1, 1), Err(GraphError::SameVertex(1)));
        assert!(matches!(
            Graph::path(3).add_edge(1, 7),
            Err(GraphError::VertexOutOfRange { vertex: 7, order: 3 })
        ));
    }

    #[test]
    fn contraction() {
        assert_eq!(Graph::path(3).contract(0, 2).unwrap(), Graph::complete(2));
        assert_eq!(Graph::complete(3).contract(0, 1).unwrap(), Graph::complete(2));
        // ends of P_4 merge into a triangle: 0~1, 0~2 (was 3~2), 1~2
        assert_eq!(Graph::path(4).contract(0, 3).unwrap(), Graph::complete(3));
        assert_eq!(Graph::path(4).contract(3, 0).unwrap(), Graph::complete(3));
        // labels above the removed vertex shift down
        let c = g("5; 0-1,3-4").contract(1, 2).unwrap();
        assert_eq!(c, g("4; 0-1,2-3"));
        assert_eq!(Graph::path(3).contract(1, 1), Err(GraphError::SameVertex(1)));
    }

    #[test]
    fn vertex_and_composition_ops() {
        assert_eq!(Graph::path(4).remove_vertex(1).unwrap(), g("3; 1-2"));
        let p3 = Graph::complete(1).join(&Graph::empty(2)).unwrap();
        assert_eq!(p3, g("3; 0-1,0-2"));
        let u = Graph::complete(3).add_isolated(2).unwrap();
        assert_eq!(u.order(), 5);
        assert_eq!(u.size(), 3);
        assert_eq!(Graph::path(5).complement(), g("5; 0-2,0-3,0-4,1-3,1-4,2-4"));
        assert!(Graph::path(2).remove_vertex(2).is_err());
        assert!(Graph::empty(40).add_isolated(30).is_err());
        assert_eq!(Graph::cycle(5).induced(0b10110), g("3; 0-1"));
    }

    #[test]
    fn connectivity() {
        assert!(Graph::path(5).is_connected());
        assert!(!Graph::path(3).add_isolated(1).unwrap().is_connected());
        assert!(Graph::empty(0).is_connected());
        assert_eq!(g("5; 0-1,3-4").component(4), 0b11000);
        assert!(Graph::star(4).is_tree());
        assert!(Graph::empty(1).is_tree());
        assert!(!Graph::cycle(4).is_tree());
        assert!(!g("4; 0-1,1-2,2-0").is_tree());
    }

    #[test]
    fn simplicial_and_chordal() {
        assert!(Graph::path(4).is_simplicial(0));
        assert!(!Graph::path(3).is_simplicial(1));
        assert!((0..5).all(|v| Graph::complete(5).is_simplicial(v)));
        assert!(Graph::empty(2).is_simplicial(0));

        assert!(Graph::path(6).perfect_elimination_order().is_some());
        assert!(Graph::star(5).is_chordal());
        assert!(Graph::cycle(4).perfect_elimination_order().is_none());
        assert!(Graph::complete_bipartite(2, 3).perfect_elimination_order().is_none());
        assert!(Graph::q(6).is_chordal());
        assert!(!Graph::cycle(5).is_chordal());
    }

    #[test]
    fn degrees_and_bipartiteness() {
        assert_eq!(Graph::cycle(5).max_degree(), 2);
        assert_eq!(Graph::complete_bipartite(2, 3).max_degree(), 3);
        assert!(!Graph::cycle(5).is_bipartite());
        assert!(Graph::complete_bipartite(2, 3).is_bipartite());
        assert_eq!(Graph::complete(4).greedy_colors(), 4);
        assert_eq!(Graph::empty(0).max_degree(), 0);
    }

    #[test]
    fn edge_list_literal() {
        let p = g("4; 0-1, 1-2 ,2-3");
        assert_eq!(p, Graph::path(4));
        assert_eq!(p.to_string(), "4; 0-1,1-2,2-3");
        assert_eq!(g("3;"), Graph::empty(3));
        assert!("3 0-1".parse::<Graph>().is_err());
        assert!("3; 0-3".parse::<Graph>().is_err());
        assert!("3; 0+1".parse::<Graph>().is_err());
        assert_eq!(Graph::from_rows(vec![0b10, 0b01]).unwrap(), Graph::complete(2));
        assert!(Graph::from_rows(vec![0b10, 0b00]).is_err());
    }

    #[test]
    fn edge_iterators() {
        let c4 = Graph::cycle(4);
        assert_eq!(c4.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
        assert_eq!(c4.non_edges().collect::<Vec<_>>(), vec![(0, 2), (1, 3)]);
        assert!(Graph::complete(4).is_complete());
        assert!(Graph::empty(1).is_complete());
        assert!(Graph::empty(0).is_complete());
    }
}
