//! graph6 encoding: a size prefix followed by the upper triangle of the
//! adjacency matrix in column order `(0,1),(0,2),(1,2),(0,3),...`, packed
//! six bits per byte with an offset of 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

const OFFSET: u8 = 63;
const HEADER: &str = ">>graph6<<";

/// Largest vertex count with a single-byte size prefix.
pub const MAX_SMALL_N: usize = 62;

fn check_byte(pos: usize, byte: u8) -> Result<u8> {
    if (OFFSET..=126).contains(&byte) {
        Ok(byte - OFFSET)
    } else {
        Err(Error::Graph6InvalidByte { pos, byte })
    }
}

/// Decodes the size prefix, returning `(n, prefix_len)`.
fn decode_size(bytes: &[u8]) -> Result<(usize, usize)> {
    let first = *bytes.first().ok_or(Error::Graph6Truncated {
        expected: 1,
        found: 0,
    })?;
    let first = check_byte(0, first)?;
    if first < 63 {
        return Ok((first as usize, 1));
    }
    // 126 escape: three more bytes, or a second 126 and six more.
    let (start, len) = if bytes.get(1) == Some(&126) {
        (2, 6)
    } else {
        (1, 3)
    };
    if bytes.len() < start + len {
        return Err(Error::Graph6Truncated {
            expected: start + len,
            found: bytes.len(),
        });
    }
    let mut n = 0usize;
    for (pos, &b) in bytes.iter().enumerate().skip(start).take(len) {
        n = (n << 6) | check_byte(pos, b)? as usize;
    }
    Ok((n, start + len))
}

pub fn parse_graph6(token: &str) -> Result<Graph> {
    let token = token.trim();
    let token = token.strip_prefix(HEADER).unwrap_or(token);
    let bytes = token.as_bytes();
    let (n, prefix) = decode_size(bytes)?;
    if n == 0 {
        return Err(Error::SizeOutOfRange { what: "graph6", n });
    }
    let bits = n * (n - 1) / 2;
    let expected = prefix + bits.div_ceil(6);
    if bytes.len() < expected {
        return Err(Error::Graph6Truncated {
            expected,
            found: bytes.len(),
        });
    }
    if bytes.len() > expected {
        return Err(Error::InvalidParams(format!(
            "graph6: {} trailing bytes after payload",
            bytes.len() - expected
        )));
    }
    let payload = bytes[prefix..]
        .iter()
        .enumerate()
        .map(|(i, &b)| check_byte(prefix + i, b))
        .collect::<Result<Vec<u8>>>()?;

    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if payload[k / 6] & (0b10_0000 >> (k % 6)) != 0 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges)
}

pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_SMALL_N {
        return Err(Error::Graph6TooLarge(n));
    }
    let bits = n * (n - 1) / 2;
    let mut payload = vec![0u8; bits.div_ceil(6)];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                payload[k / 6] |= 0b10_0000 >> (k % 6);
            }
            k += 1;
        }
    }
    let mut out = String::with_capacity(1 + payload.len());
    out.push((n as u8 + OFFSET) as char);
    out.extend(payload.into_iter().map(|b| (b + OFFSET) as char));
    Ok(out)
}

/// Parses a corpus with one graph6 token per line, skipping blank lines.
/// Errors carry the 1-based line number.
pub fn parse_corpus(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            parse_graph6(l).map_err(|e| Error::InvalidToken {
                line: i + 1,
                token: format!("{} ({e})", l.trim()),
            })
        })
        .collect()
}
