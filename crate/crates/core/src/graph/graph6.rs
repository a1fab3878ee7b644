//! graph6 encoding, short form only (at most 62 vertices).
//!
//! Layout: one header byte `n + 63`, then the upper triangle of the
//! adjacency matrix in column-major order `x(0,1), x(0,2), x(1,2), x(0,3), ...`
//! packed six bits per byte (most significant first), zero padded, each
//! byte offset by 63.

use super::Graph;
use crate::error::{Error, Result};

pub const GRAPH6_MAX_VERTICES: usize = 62;

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    if let Some(pos) = bytes.iter().position(|b| !b.is_ascii()) {
        return Err(parse_err(pos, "non-ASCII byte"));
    }
    let header = *bytes.first().ok_or_else(|| parse_err(0, "empty input"))?;
    if header == 126 {
        return Err(parse_err(0, "long-form header (n > 62) is not supported"));
    }
    if !(63..=125).contains(&header) {
        return Err(parse_err(0, format!("invalid header byte {header}")));
    }
    let n = (header - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    let body = &bytes[1..];
    if body.len() < nbytes {
        return Err(parse_err(
            bytes.len(),
            format!(
                "truncated body: expected {nbytes} bytes, found {}",
                body.len()
            ),
        ));
    }
    if body.len() > nbytes {
        return Err(parse_err(
            1 + nbytes,
            "trailing garbage after graph6 record",
        ));
    }
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(parse_err(1 + i, format!("invalid body byte {b}")));
        }
    }

    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

pub fn format_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > GRAPH6_MAX_VERTICES {
        return Err(Error::UnsupportedSize(format!(
            "graph6 short form holds at most {GRAPH6_MAX_VERTICES} vertices, got {n}"
        )));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let mut body = vec![0u8; nbits.div_ceil(6)];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                body[k / 6] |= 1 << (5 - k % 6);
            }
            k += 1;
        }
    }
    let mut out = String::with_capacity(body.len() + 1);
    out.push((n as u8 + 63) as char);
    out.extend(body.into_iter().map(|b| (b + 63) as char));
    Ok(out)
}
