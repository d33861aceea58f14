//! Canonical labeling for small graphs.
//!
//! Individualization-refinement: the vertex partition is refined by neighbor
//! counts until equitable, then the first non-singleton cell is split by
//! individualizing each of its vertices in turn. Every leaf gives a relabeled
//! adjacency matrix; the lexicographically largest one is canonical. Two
//! vertices of a cell with the same neighborhood outside each other are
//! swapped by an automorphism that fixes the current partition, so only one
//! of them is branched on.

use alloc::vec::Vec;
use core::fmt;

use crate::graph::{bit, bits, Graph, GraphError};

/// Largest order accepted by [`canonical_key`].
pub const CANON_LIMIT: usize = 12;

/// Isomorphism-invariant byte string: the order, then the upper triangle of
/// the canonical adjacency matrix in column order (`x01, x02, x12, x03, ...`)
/// packed most-significant bit first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0[0] as usize
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey({self})")
    }
}

/// Lowercase hex of the key bytes.
impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        Ok(())
    }
}

type Cells = Vec<Vec<usize>>;

fn refine(g: &Graph, mut cells: Cells) -> Cells {
    loop {
        let masks: Vec<u64> = cells.iter().map(|c| c.iter().fold(0, |m, &v| m | bit(v))).collect();
        let before = cells.len();
        let mut next: Cells = Vec::with_capacity(before);
        for cell in cells {
            if cell.len() == 1 {
                next.push(cell);
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .into_iter()
                .map(|v| {
                    let sig = masks.iter().map(|m| (g.neighbors(v) & m).count_ones()).collect();
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        if next.len() == before {
            return next;
        }
        cells = next;
    }
}

/// Adjacency rows of `g` relabeled so that `order[i]` becomes vertex `i`.
fn relabeled_rows(g: &Graph, order: &[usize]) -> Vec<u64> {
    let mut position = [0usize; 64];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    order
        .iter()
        .map(|&v| bits(g.neighbors(v)).fold(0u64, |row, u| row | bit(position[u])))
        .collect()
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<u64>, Vec<usize>)>,
}

impl Search<'_> {
    fn descend(&mut self, cells: Cells) {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let order: Vec<usize> = cells.into_iter().map(|c| c[0]).collect();
            let form = relabeled_rows(self.g, &order);
            if self.best.as_ref().is_none_or(|(b, _)| form > *b) {
                self.best = Some((form, order));
            }
            return;
        };
        let cell = &cells[target];
        let mut tried: Vec<usize> = Vec::new();
        for &v in cell {
            let twin = tried.iter().any(|&u| {
                self.g.neighbors(u) & !bit(v) == self.g.neighbors(v) & !bit(u)
            });
            if twin {
                continue;
            }
            tried.push(v);
            let mut next: Cells = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..target]);
            next.push(alloc::vec![v]);
            next.push(cell.iter().copied().filter(|&u| u != v).collect());
            next.extend_from_slice(&cells[target + 1..]);
            self.descend(refine(self.g, next));
        }
    }
}

/// Canonical vertex order: `order[i]` is the original vertex placed at `i`.
pub fn canonical_order(g: &Graph) -> Result<Vec<usize>, GraphError> {
    if g.order() > CANON_LIMIT {
        return Err(GraphError::CanonicalLimit {
            order: g.order(),
            limit: CANON_LIMIT,
        });
    }
    if g.order() == 0 {
        return Ok(Vec::new());
    }
    let mut search = Search { g, best: None };
    search.descend(refine(g, alloc::vec![(0..g.order()).collect()]));
    Ok(search.best.expect("at least one leaf").1)
}

/// The canonical relabeling of `g`; isomorphic inputs give equal outputs.
pub fn canonical_form(g: &Graph) -> Result<Graph, GraphError> {
    let order = canonical_order(g)?;
    Graph::from_rows(relabeled_rows(g, &order))
}

pub fn canonical_key(g: &Graph) -> Result<CanonicalKey, GraphError> {
    let order = canonical_order(g)?;
    Ok(encode_key(&relabeled_rows(g, &order)))
}

fn encode_key(rows: &[u64]) -> CanonicalKey {
    let n = rows.len();
    let mut bytes = alloc::vec![n as u8];
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for row in &rows[..j] {
            acc = (acc << 1) | u8::from(row & bit(j) != 0);
            filled += 1;
            if filled == 8 {
                bytes.push(acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push(acc << (8 - filled));
    }
    CanonicalKey(bytes)
}

/// Memo and report key: canonical up to [`CANON_LIMIT`], the labeled
/// adjacency above it.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum GraphKey {
    Canonical(CanonicalKey),
    Labeled(Graph),
}

impl GraphKey {
    pub fn of(g: &Graph) -> Self {
        match canonical_key(g) {
            Ok(k) => GraphKey::Canonical(k),
            Err(_) => GraphKey::Labeled(g.clone()),
        }
    }
}

/// Canonical keys print as hex; labeled keys as `L` followed by the hex of
/// the adjacency rows.
impl fmt::Display for GraphKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphKey::Canonical(k) => write!(f, "{k}"),
            GraphKey::Labeled(g) => {
                write!(f, "L{:02x}", g.order())?;
                for row in g.rows() {
                    write!(f, "{row:016x}")?;
                }
                Ok(())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn key(s: &str) -> CanonicalKey {
        canonical_key(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn relabeled_paths_share_a_key() {
        assert_eq!(key("3; 0-1,1-2"), key("3; 1-0,0-2"));
        assert_ne!(key("3; 0-1,1-2"), key("3; 0-1"));
        assert_ne!(canonical_key(&Graph::cycle(4)), canonical_key(&Graph::star(3)));
    }

    #[test]
    fn key_layout() {
        // K_3: order byte then three set bits padded
        assert_eq!(canonical_key(&Graph::complete(3)).unwrap().as_bytes(), &[3, 0b1110_0000]);
        assert_eq!(canonical_key(&Graph::empty(3)).unwrap().as_bytes(), &[3, 0]);
        assert_eq!(canonical_key(&Graph::empty(1)).unwrap().as_bytes(), &[1]);
        assert_eq!(canonical_key(&Graph::empty(0)).unwrap().as_bytes(), &[0]);
        assert_eq!(canonical_key(&Graph::complete(2)).unwrap().to_string(), "0280");
    }

    #[test]
    fn limit_is_enforced() {
        assert!(canonical_key(&Graph::empty(12)).is_ok());
        assert!(matches!(
            canonical_key(&Graph::empty(13)),
            Err(GraphError::CanonicalLimit { order: 13, limit: 12 })
        ));
        assert!(matches!(GraphKey::of(&Graph::empty(13)), GraphKey::Labeled(_)));
    }

    #[test]
    fn form_is_isomorphic_relabeling() {
        let g: Graph = "6; 0-1,1-2,2-0,3-4".parse().unwrap();
        let c = canonical_form(&g).unwrap();
        assert_eq!(c.size(), g.size());
        assert_eq!(canonical_form(&c).unwrap(), c);
        assert_eq!(canonical_key(&c).unwrap(), canonical_key(&g).unwrap());
    }

    #[test]
    fn symmetric_graphs_terminate() {
        let petersen: Graph = "10; 0-1,1-2,2-3,3-4,4-0,0-5,1-6,2-7,3-8,4-9,5-7,7-9,9-6,6-8,8-5"
            .parse()
            .unwrap();
        assert!(canonical_key(&petersen).is_ok());
        assert!(canonical_key(&Graph::cycle(12)).is_ok());
        assert!(canonical_key(&Graph::complete_bipartite(6, 6)).is_ok());
    }
}
