//! graph6 encoding of simple undirected graphs.
//!
//! Layout: `N(n)` followed by the upper triangle of the adjacency matrix in
//! column order (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed big-endian six
//! bits per byte, each byte offset by 63, zero-padded to a full byte.

use crate::error::{Error, Result};
use crate::graph::{CubicGraph, Edge};

const HEADER: &str = ">>graph6<<";
const BIAS: u8 = 63;

fn err(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        message: message.into(),
    }
}

fn sextet(bytes: &[u8], at: usize) -> Result<u8> {
    match bytes.get(at) {
        None => Err(err(at, "unexpected end of input")),
        Some(&b) if (BIAS..=BIAS + 63).contains(&b) => Ok(b - BIAS),
        Some(&b) => Err(err(at, format!("byte 0x{b:02x} is outside the graph6 range"))),
    }
}

/// Returns the order and the offset where the adjacency bits start.
fn read_order(bytes: &[u8], start: usize) -> Result<(usize, usize)> {
    let first = bytes.get(start).copied().ok_or_else(|| err(start, "empty input"))?;
    if first != 126 {
        return Ok((sextet(bytes, start)? as usize, start + 1));
    }
    let (width, from) = if bytes.get(start + 1) == Some(&126) {
        (6, start + 2)
    } else {
        (3, start + 1)
    };
    let mut n = 0usize;
    for i in 0..width {
        n = (n << 6) | sextet(bytes, from + i)? as usize;
    }
    Ok((n, from + width))
}

pub fn parse_graph6(line: &str) -> Result<CubicGraph> {
    let line = line.trim_end_matches(['\n', '\r']);
    let bytes = line.as_bytes();
    let start = if line.starts_with(HEADER) { HEADER.len() } else { 0 };
    let (n, body) = read_order(bytes, start)?;

    let bits = n * n.saturating_sub(1) / 2;
    let needed = bits.div_ceil(6);
    let available = bytes.len() - body;
    if available < needed {
        return Err(err(
            bytes.len(),
            format!("truncated: order {n} needs {needed} data bytes, found {available}"),
        ));
    }
    if available > needed {
        return Err(err(body + needed, "trailing bytes after the adjacency data"));
    }

    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let chunk = sextet(bytes, body + k / 6)?;
            if chunk >> (5 - k % 6) & 1 == 1 {
                edges.push(Edge::new(i, j));
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = body + needed - 1;
        let chunk = sextet(bytes, last)?;
        let pad = 6 - bits % 6;
        if chunk & ((1 << pad) - 1) != 0 {
            return Err(err(last, "nonzero padding bits"));
        }
    }
    CubicGraph::new(n, edges)
}

fn push_order(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + BIAS));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + BIAS));
    }
}

/// Encodes a simple graph without header or trailing newline.
pub fn encode_graph6(g: &CubicGraph) -> Result<String> {
    if g.has_dangling() {
        return Err(Error::NotSimple("dangling edges"));
    }
    if g.loop_count() > 0 {
        return Err(Error::NotSimple("loops"));
    }
    if g.has_parallel_edges() {
        return Err(Error::NotSimple("parallel edges"));
    }
    let n = g.vertex_count();
    let mut adjacent = vec![false; n * n];
    for e in g.edges() {
        let (a, b) = e.vertices().expect("no dangling edges");
        adjacent[a * n + b] = true;
        adjacent[b * n + a] = true;
    }
    let mut out = Vec::new();
    push_order(&mut out, n);
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = (chunk << 1) | adjacent[i * n + j] as u8;
            filled += 1;
            if filled == 6 {
                out.push(chunk + BIAS);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + BIAS);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}
