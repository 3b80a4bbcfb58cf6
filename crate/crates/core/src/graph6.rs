//! graph6 encoding: a size header followed by the upper adjacency triangle in
//! column-major order, packed six bits per printable byte (offset 63).

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const OFFSET: u8 = 63;
const HEADER: &[u8] = b">>graph6<<";

fn push_size(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    }
}

pub fn encode_graph6(g: &Graph) -> Vec<u8> {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    push_size(&mut out, n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    out
}

pub fn encode_graph6_string(g: &Graph) -> String {
    String::from_utf8(encode_graph6(g)).expect("graph6 bytes are ASCII")
}

fn sextet(b: u8) -> Result<u8> {
    if (OFFSET..=126).contains(&b) {
        Ok(b - OFFSET)
    } else {
        Err(Error::Graph6(format!("byte {b:#04x} outside 63..=126")))
    }
}

fn read_size(bytes: &[u8]) -> Result<(usize, usize)> {
    let first = *bytes
        .first()
        .ok_or_else(|| Error::Graph6("empty input".into()))?;
    if first != 126 {
        return Ok((sextet(first)? as usize, 1));
    }
    let (start, width) = if bytes.get(1) == Some(&126) {
        (2, 6)
    } else {
        (1, 3)
    };
    let digits = bytes
        .get(start..start + width)
        .ok_or_else(|| Error::Graph6("truncated size header".into()))?;
    let mut n = 0usize;
    for &d in digits {
        n = (n << 6) | sextet(d)? as usize;
    }
    Ok((n, start + width))
}

/// Decodes one graph6 record. An optional `>>graph6<<` header and trailing
/// line ending are accepted.
pub fn decode_graph6(bytes: &[u8]) -> Result<Graph> {
    let mut bytes = bytes.strip_prefix(HEADER).unwrap_or(bytes);
    while let [rest @ .., b'\n' | b'\r'] = bytes {
        bytes = rest;
    }
    let (n, used) = read_size(bytes)?;
    if n > MAX_VERTICES {
        return Err(Error::TooLarge(n));
    }
    let body = &bytes[used..];
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    if body.len() < need {
        return Err(Error::Graph6(format!(
            "truncated edge field: {} of {need} bytes",
            body.len()
        )));
    }
    if body.len() > need {
        return Err(Error::Graph6(format!(
            "{} trailing bytes after edge field",
            body.len() - need
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let chunk = sextet(body[k / 6])?;
            if chunk >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = sextet(body[need - 1])?;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::Graph6("non-zero padding bits".into()));
        }
    }
    Graph::from_edges(n, &edges)
}
