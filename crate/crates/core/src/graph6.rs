//! graph6 encoding and decoding.
//!
//! The format packs the upper-triangle adjacency bits x(i,j), taken
//! column by column (j = 1..n-1, i = 0..j-1), big-endian into 6-bit
//! groups, each emitted as `group + 63`. For n <= 62 the first byte is
//! `n + 63`. One graph per line. An optional `>>graph6<<` header is
//! tolerated on input and never emitted.

use crate::graph::{Graph, MAXN};
use thiserror::Error;

const HEADER: &str = ">>graph6<<";
const OFFSET: u8 = 63;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 line")]
    Empty,
    #[error("order byte {byte:#x} at position 0 out of range")]
    BadOrderByte { byte: u8 },
    #[error("order {n} not supported (this build handles 1..={MAXN})")]
    UnsupportedOrder { n: usize },
    #[error("payload length {got} does not match order {n} (expected {expected} bytes)")]
    BadLength { n: usize, expected: usize, got: usize },
    #[error("byte {byte:#x} at position {pos} out of graph6 range 63..=126")]
    BadByte { pos: usize, byte: u8 },
    #[error("nonzero padding bits in final group")]
    NonzeroPadding,
}

fn payload_len(n: usize) -> usize {
    (n * (n - 1) / 2).div_ceil(6)
}

/// Encode a graph as a graph6 line (no trailing newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(1 + payload_len(n));
    out.push(n as u8 + OFFSET);
    let mut group = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            group <<= 1;
            if g.has_edge(i, j) {
                group |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(group + OFFSET);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decode one graph6 line. Leading/trailing whitespace and an optional
/// `>>graph6<<` header are tolerated.
pub fn from_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let line = line.trim();
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let order_byte = bytes[0];
    // 126 introduces the multi-byte order forms for n >= 63.
    if order_byte == 126 {
        return Err(Graph6Error::UnsupportedOrder { n: 63 });
    }
    if !(OFFSET..=125).contains(&order_byte) {
        return Err(Graph6Error::BadOrderByte { byte: order_byte });
    }
    let n = (order_byte - OFFSET) as usize;
    if n == 0 || n > MAXN {
        return Err(Graph6Error::UnsupportedOrder { n });
    }
    let expected = payload_len(n);
    let payload = &bytes[1..];
    if payload.len() != expected {
        return Err(Graph6Error::BadLength {
            n,
            expected,
            got: payload.len(),
        });
    }
    for (k, &b) in payload.iter().enumerate() {
        if !(OFFSET..=126).contains(&b) {
            return Err(Graph6Error::BadByte { pos: k + 1, byte: b });
        }
    }

    let mut g = Graph::empty(n).expect("order already validated");
    let mut bit_index = 0usize;
    let total_bits = n * (n - 1) / 2;
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            let byte = payload[bit_index / 6] - OFFSET;
            let bit = (byte >> (5 - bit_index % 6)) & 1;
            if bit == 1 {
                edges.push((i, j));
            }
            bit_index += 1;
        }
    }
    // Padding bits beyond the triangle must be zero.
    for extra in total_bits..expected * 6 {
        let byte = payload[extra / 6] - OFFSET;
        if (byte >> (5 - extra % 6)) & 1 != 0 {
            return Err(Graph6Error::NonzeroPadding);
        }
    }
    for (i, j) in edges {
        g = g.add_edge(i, j).expect("triangle bits are simple edges");
    }
    Ok(g)
}

/// Decode a newline-separated stream of graph6 lines, skipping blank lines.
/// Errors carry the 1-based line number.
pub fn read_graph6_stream(text: &str) -> Result<Vec<Graph>, (usize, Graph6Error)> {
    let mut out = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        out.push(from_graph6(line).map_err(|e| (idx + 1, e))?);
    }
    Ok(out)
}
