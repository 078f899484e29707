//! graph6 short form (orders 1..=62).
//!
//! One size byte `n + 63`, then the upper triangle of the adjacency matrix
//! in column order `(0,1), (0,2), (1,2), (0,3), ...`, packed big-endian into
//! 6-bit groups, each group offset by 63, zero-padded at the end.

use crate::error::Graph6Error;
use crate::graph::Graph;

pub const MAX_ORDER: usize = 62;

fn payload_len(n: usize) -> usize {
    (n * (n - 1) / 2).div_ceil(6)
}

pub fn to_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n > MAX_ORDER {
        return Err(Graph6Error::UnsupportedOrder(n));
    }
    let mut out = Vec::with_capacity(1 + payload_len(n));
    out.push(n as u8 + 63);
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

pub fn from_graph6(text: &[u8]) -> Result<Graph, Graph6Error> {
    let (&size, payload) = text.split_first().ok_or(Graph6Error::Empty)?;
    if !(63..=126).contains(&size) {
        return Err(Graph6Error::BadSizeByte(size));
    }
    if size == 126 {
        return Err(Graph6Error::UnsupportedOrder(MAX_ORDER + 1));
    }
    let n = (size - 63) as usize;
    if n == 0 {
        return Err(Graph6Error::UnsupportedOrder(0));
    }
    for (i, &b) in payload.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::BadByte { byte: b, offset: i + 1 });
        }
    }
    let expected = payload_len(n);
    if payload.len() < expected {
        return Err(Graph6Error::Truncated { expected, found: payload.len() });
    }
    if payload.len() > expected {
        return Err(Graph6Error::Trailing { expected, found: payload.len() });
    }
    let mut g = Graph::empty(n).expect("n >= 1");
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = payload[bit / 6] - 63;
            if byte >> (5 - bit % 6) & 1 == 1 {
                g.set(i, j, true);
            }
            bit += 1;
        }
    }
    Ok(g)
}

impl Graph {
    pub fn to_graph6(&self) -> Result<String, Graph6Error> {
        to_graph6(self)
    }

    pub fn from_graph6(text: &str) -> Result<Graph, Graph6Error> {
        from_graph6(text.as_bytes())
    }
}
