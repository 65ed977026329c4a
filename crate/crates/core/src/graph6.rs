//! graph6 codec, short form only (order <= 62).
//!
//! One byte `63 + n` for the order, then the upper triangle of the adjacency
//! matrix in column-major order (`x(0,1), x(0,2), x(1,2), x(0,3), ...`),
//! packed six bits per byte into the printable range `63..=126`, padded with
//! zero bits.

use thiserror::Error;

use crate::graph::{Edge, Graph};

pub const MAX_GRAPH6_ORDER: usize = 62;

const HEADER: &str = ">>graph6<<";

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 input")]
    Empty,
    #[error("byte {offset}: order {order} exceeds the short-form limit of 62")]
    UnsupportedOrder { offset: usize, order: usize },
    #[error("byte {offset}: invalid graph6 byte 0x{byte:02x}")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("byte {offset}: truncated payload, expected {expected} payload bytes, found {found}")]
    Truncated {
        offset: usize,
        expected: usize,
        found: usize,
    },
    #[error("byte {offset}: trailing data after a complete graph6 value")]
    TrailingData { offset: usize },
    #[error("byte {offset}: nonzero padding bits")]
    NonzeroPadding { offset: usize },
}

/// Decodes one graph6 value. A leading `>>graph6<<` header and trailing
/// whitespace are tolerated; anything else must be exactly one encoded graph.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let trimmed = text.trim_end_matches(['\n', '\r', ' ', '\t']);
    let (body, base_offset) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (rest, HEADER.len()),
        None => (trimmed, 0),
    };
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let at = |i: usize| base_offset + i;

    let first = bytes[0];
    if first == 126 {
        // Long-form marker; orders beyond 62 are out of scope.
        return Err(Graph6Error::UnsupportedOrder {
            offset: at(0),
            order: 63,
        });
    }
    if !(63..=125).contains(&first) {
        return Err(Graph6Error::InvalidByte {
            offset: at(0),
            byte: first,
        });
    }
    let n = (first - 63) as usize;

    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = bit_count.div_ceil(6);
    let payload = &bytes[1..];
    if payload.len() < expected {
        return Err(Graph6Error::Truncated {
            offset: at(bytes.len()),
            expected,
            found: payload.len(),
        });
    }
    if payload.len() > expected {
        return Err(Graph6Error::TrailingData {
            offset: at(1 + expected),
        });
    }

    let mut bits = Vec::with_capacity(expected * 6);
    for (i, &b) in payload.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::InvalidByte {
                offset: at(1 + i),
                byte: b,
            });
        }
        let val = b - 63;
        for k in (0..6).rev() {
            bits.push((val >> k) & 1 == 1);
        }
    }
    if bits[bit_count..].iter().any(|&b| b) {
        return Err(Graph6Error::NonzeroPadding {
            offset: at(expected),
        });
    }

    let mut edges = Vec::new();
    let mut idx = 0;
    for v in 1..n {
        for u in 0..v {
            if bits[idx] {
                edges.push(Edge::new(u, v));
            }
            idx += 1;
        }
    }
    edges.sort_unstable();
    Ok(Graph::from_sorted_edges(n, edges))
}

/// Encodes a graph in short-form graph6 (no header). Orders above 62 are
/// rejected.
pub fn write_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n > MAX_GRAPH6_ORDER {
        return Err(Graph6Error::UnsupportedOrder { offset: 0, order: n });
    }
    let mut out = vec![63 + n as u8];
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}
