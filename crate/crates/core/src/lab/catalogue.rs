//! One representative per isomorphism class of graphs of a given order.
//!
//! Small orders come from every labeled edge set, deduplicated by canonical
//! key. From order [`EXTENSION_FROM`] on, each representative of the order
//! below is extended by a vertex with every possible neighborhood. The
//! exhaustive generator still runs up to [`EXHAUSTIVE_LIMIT`] so the two
//! can be compared.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::LabError;
use crate::canon::{canonical_form, canonical_key, CanonicalKey};
use crate::graph::{bit, Graph};

/// Largest order enumerated from all labeled edge sets.
pub const EXHAUSTIVE_LIMIT: usize = 7;
/// First order built by extension in [`graph_catalogue`].
pub const EXTENSION_FROM: usize = 6;
/// Largest order the internal catalogue produces.
pub const CATALOGUE_LIMIT: usize = 8;

fn insert(classes: &mut BTreeMap<CanonicalKey, ()>, g: &Graph) {
    classes.insert(canonical_key(g).expect("catalogue orders are canonicalizable"), ());
}

fn materialize(classes: BTreeMap<CanonicalKey, ()>, n: usize) -> Vec<Graph> {
    // Keys are sorted; rebuild each canonical form from its key bytes.
    classes.into_keys().map(|k| decode_key(&k, n)).collect()
}

fn decode_key(key: &CanonicalKey, n: usize) -> Graph {
    let bytes = &key.as_bytes()[1..];
    let mut edges = Vec::new();
    let mut index = 0;
    for j in 1..n {
        for i in 0..j {
            if bytes[index / 8] & (0x80 >> (index % 8)) != 0 {
                edges.push((i, j));
            }
            index += 1;
        }
    }
    Graph::from_edges(n, &edges).expect("key describes a valid graph")
}

/// All graphs of order `n <= EXHAUSTIVE_LIMIT` from the `2^C(n,2)` labeled
/// edge sets, in canonical form and sorted by canonical key.
pub fn exhaustive_catalogue(n: usize) -> Result<Vec<Graph>, LabError> {
    if n > EXHAUSTIVE_LIMIT {
        return Err(LabError::CatalogueLimit {
            order: n,
            limit: EXHAUSTIVE_LIMIT,
        });
    }
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut classes = BTreeMap::new();
    let mut rows = alloc::vec![0u64; n];
    for mask in 0u64..(1u64 << pairs.len()) {
        rows.iter_mut().for_each(|r| *r = 0);
        for (e, &(i, j)) in pairs.iter().enumerate() {
            if mask & bit(e) != 0 {
                rows[i] |= bit(j);
                rows[j] |= bit(i);
            }
        }
        insert(&mut classes, &Graph::from_rows(rows.clone()).expect("symmetric rows"));
    }
    Ok(materialize(classes, n))
}

/// Graphs of order `m + 1` obtained by adding one vertex, with every
/// possible neighborhood, to each graph of order `m` in `smaller`. Complete
/// when `smaller` holds every class of order `m`.
pub fn extend_catalogue(smaller: &[Graph]) -> Vec<Graph> {
    let Some(m) = smaller.first().map(Graph::order) else {
        return Vec::new();
    };
    let mut classes = BTreeMap::new();
    for g in smaller {
        let base = g.add_isolated(1).expect("order fits");
        let mut rows = base.rows().to_vec();
        for neighborhood in 0u64..(1u64 << m) {
            rows[m] = neighborhood;
            for (v, row) in rows.iter_mut().enumerate().take(m) {
                *row = (base.rows()[v] & !bit(m)) | if neighborhood & bit(v) != 0 { bit(m) } else { 0 };
            }
            insert(&mut classes, &Graph::from_rows(rows.clone()).expect("symmetric rows"));
        }
    }
    materialize(classes, m + 1)
}

/// One representative per isomorphism class of order `n <= CATALOGUE_LIMIT`,
/// in canonical form, sorted by canonical key.
pub fn graph_catalogue(n: usize) -> Result<Vec<Graph>, LabError> {
    Ok(levels(n)?.pop().unwrap_or_else(|| alloc::vec![Graph::empty(0)]))
}

/// Catalogues for every order `1..=max_n`, concatenated in order.
pub fn catalogue_up_to(max_n: usize) -> Result<Vec<Graph>, LabError> {
    Ok(levels(max_n)?.into_iter().flatten().collect())
}

/// Catalogues of orders `1..=max_n`.
fn levels(max_n: usize) -> Result<Vec<Vec<Graph>>, LabError> {
    if max_n > CATALOGUE_LIMIT {
        return Err(LabError::CatalogueLimit {
            order: max_n,
            limit: CATALOGUE_LIMIT,
        });
    }
    let mut out: Vec<Vec<Graph>> = Vec::new();
    for n in 1..=max_n {
        let level = match out.last() {
            Some(below) if n >= EXTENSION_FROM => extend_catalogue(below),
            _ => exhaustive_catalogue(n)?,
        };
        out.push(level);
    }
    Ok(out)
}

/// Canonical representatives of the distinct classes among `graphs`, sorted
/// by key; used to compare catalogues coming from different sources.
pub fn dedup_classes(graphs: &[Graph]) -> Result<Vec<Graph>, LabError> {
    let mut classes = BTreeMap::new();
    for g in graphs {
        let key = canonical_key(g).map_err(|_| LabError::CatalogueLimit {
            order: g.order(),
            limit: crate::canon::CANON_LIMIT,
        })?;
        classes.entry(key).or_insert_with(|| canonical_form(g).expect("order checked"));
    }
    Ok(classes.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| exhaustive_catalogue(n).unwrap().len()).collect();
        assert_eq!(counts, [1, 2, 4, 11, 34, 156]);
        assert_eq!(exhaustive_catalogue(0).unwrap().len(), 1);
        assert!(graph_catalogue(9).is_err());
    }

    #[test]
    fn extension_agrees_with_exhaustive() {
        for n in 1..=5 {
            let smaller = exhaustive_catalogue(n).unwrap();
            assert_eq!(extend_catalogue(&smaller), exhaustive_catalogue(n + 1).unwrap());
        }
    }

    #[test]
    fn representatives_are_canonical_and_sorted() {
        let cat = exhaustive_catalogue(4).unwrap();
        for g in &cat {
            assert_eq!(&canonical_form(g).unwrap(), g);
        }
        let keys: Vec<_> = cat.iter().map(|g| canonical_key(g).unwrap()).collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(dedup_classes(&[Graph::path(3), "3; 0-2,1-2".parse().unwrap()]).unwrap().len(), 1);
    }
}
