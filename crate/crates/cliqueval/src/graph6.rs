//! graph6 encoding and decoding for graphs on at most 62 vertices.
//!
//! The format stores `n` as one printable byte (`n + 63`) followed by the
//! upper triangle of the adjacency matrix in column order, packed
//! big-endian into 6-bit groups that are each offset by 63.

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    EmptyInput,
    #[error("graphs on more than 62 vertices are not supported (got {n})")]
    UnsupportedOrder { n: usize },
    #[error("multi-byte order headers are not supported")]
    UnsupportedHeader,
    #[error("byte {byte:#04x} at position {pos} is outside the graph6 alphabet")]
    InvalidByte { byte: u8, pos: usize },
    #[error("expected {expected} bytes for this order, found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("padding bits after the adjacency data are not zero")]
    NonzeroPadding,
}

/// Number of upper-triangle bit positions for an `n`-vertex graph.
fn triangle_bits(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Pairs `(u, v)` with `u < v` in graph6 column order: `v` ascending,
/// then `u` ascending within each column.
fn column_order(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(|v| (0..v).map(move |u| (u, v)))
}

pub fn encode(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.vertex_count();
    if n > 62 {
        return Err(Graph6Error::UnsupportedOrder { n });
    }
    let mut out = vec![n as u8 + 63];
    let mut group = 0u8;
    let mut used = 0;
    for (u, v) in column_order(n) {
        group = (group << 1) | u8::from(g.has_edge(u, v));
        used += 1;
        if used == 6 {
            out.push(group + 63);
            group = 0;
            used = 0;
        }
    }
    if used > 0 {
        out.push((group << (6 - used)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

pub fn decode(s: &str) -> Result<Graph, Graph6Error> {
    let bytes = s.trim_end_matches(['\n', '\r']).as_bytes();
    let first = *bytes.first().ok_or(Graph6Error::EmptyInput)?;
    if first == 126 {
        return Err(Graph6Error::UnsupportedHeader);
    }
    if !(63..=125).contains(&first) {
        return Err(Graph6Error::InvalidByte {
            byte: first,
            pos: 0,
        });
    }
    let n = (first - 63) as usize;
    let expected = 1 + triangle_bits(n).div_ceil(6);
    if bytes.len() != expected {
        return Err(Graph6Error::WrongLength {
            expected,
            found: bytes.len(),
        });
    }

    let mut bits = Vec::with_capacity(triangle_bits(n).next_multiple_of(6));
    for (pos, &b) in bytes.iter().enumerate().skip(1) {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::InvalidByte { byte: b, pos });
        }
        let group = b - 63;
        for shift in (0..6).rev() {
            bits.push((group >> shift) & 1 == 1);
        }
    }
    if bits[triangle_bits(n)..].iter().any(|&b| b) {
        return Err(Graph6Error::NonzeroPadding);
    }

    let mut g = Graph::empty(n);
    for ((u, v), bit) in column_order(n).zip(&bits) {
        if *bit {
            g.add_edge(u, v);
        }
    }
    Ok(g)
}
