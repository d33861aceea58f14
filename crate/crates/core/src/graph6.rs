//! The graph6 text format for orders up to 62.
//!
//! A record is one byte `63 + n` followed by the upper triangle
//! `x(0,1), x(0,2), x(1,2), x(0,3), ...` packed six bits per byte, most
//! significant bit first, zero padded, each group offset by 63.

use alloc::string::String;
use alloc::vec::Vec;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

/// Largest order with a one-byte order field.
pub const GRAPH6_LIMIT: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 record")]
    Empty,
    #[error("graph6 orders above {GRAPH6_LIMIT} are not supported")]
    OrderTooLarge,
    #[error("byte {byte:#04x} at position {position} is outside 63..=126")]
    BadByte { position: usize, byte: u8 },
    #[error("expected {expected} bytes for order {order}, found {found}")]
    Length { order: usize, expected: usize, found: usize },
    #[error("padding bits are not zero")]
    Padding,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn payload_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Parses one record; surrounding whitespace is ignored.
pub fn decode(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.trim().as_bytes();
    let (&first, payload) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    for (position, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::BadByte { position, byte });
        }
    }
    let n = (first - 63) as usize;
    if n > GRAPH6_LIMIT {
        return Err(Graph6Error::OrderTooLarge);
    }
    let expected = payload_len(n);
    if payload.len() != expected {
        return Err(Graph6Error::Length {
            order: n,
            expected,
            found: payload.len(),
        });
    }
    let bit_at = |index: usize| (payload[index / 6] - 63) & (0x20 >> (index % 6)) != 0;
    let mut edges = Vec::new();
    let mut index = 0;
    for j in 1..n {
        for i in 0..j {
            if bit_at(index) {
                edges.push((i, j));
            }
            index += 1;
        }
    }
    if (index..expected * 6).any(bit_at) {
        return Err(Graph6Error::Padding);
    }
    Ok(Graph::from_edges(n, &edges)?)
}

pub fn encode(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n > GRAPH6_LIMIT {
        return Err(Graph6Error::OrderTooLarge);
    }
    let mut groups = alloc::vec![0u8; payload_len(n)];
    let mut index = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                groups[index / 6] |= 0x20 >> (index % 6);
            }
            index += 1;
        }
    }
    let mut out = String::with_capacity(groups.len() + 1);
    out.push((63 + n as u8) as char);
    out.extend(groups.into_iter().map(|b| (b + 63) as char));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_records() {
        assert_eq!(decode("Bw").unwrap(), Graph::complete(3));
        assert_eq!(decode("A_").unwrap(), Graph::complete(2));
        assert_eq!(decode("Bg").unwrap(), Graph::path(3));
        assert_eq!(decode("?").unwrap(), Graph::empty(0));
        assert_eq!(decode("@").unwrap(), Graph::empty(1));
        assert_eq!(encode(&Graph::complete(3)).unwrap(), "Bw");
        assert_eq!(encode(&Graph::path(5).complement()).unwrap(), "DUw");
    }

    #[test]
    fn malformed_records() {
        assert_eq!(decode(""), Err(Graph6Error::Empty));
        assert!(matches!(decode("Bw?"), Err(Graph6Error::Length { .. })));
        assert!(matches!(decode("C!w"), Err(Graph6Error::BadByte { position: 1, .. })));
        assert_eq!(decode("A`"), Err(Graph6Error::Padding));
        assert_eq!(encode(&Graph::empty(63)), Err(Graph6Error::OrderTooLarge));
    }

    #[test]
    fn round_trip() {
        for g in [Graph::cycle(7), Graph::complete_bipartite(3, 4), Graph::complete(62), Graph::q(9)] {
            let text = encode(&g).unwrap();
            assert_eq!(decode(&text).unwrap(), g);
            assert_eq!(encode(&decode(&text).unwrap()).unwrap(), text);
        }
    }
}
