//! The graph6 format: a size prefix followed by the upper triangle of the
//! adjacency matrix in column order, packed six bits per printable byte.

use crate::bitset::MAX_VERTICES;
use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

fn err(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

fn sextet(b: u8) -> Result<u64> {
    if (63..=126).contains(&b) {
        Ok((b - 63) as u64)
    } else {
        Err(err(format!("byte {b:#04x} outside the printable range")))
    }
}

/// Decodes one graph6 string, with or without the `>>graph6<<` header.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let s = text.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(HEADER).unwrap_or(s).as_bytes();
    let (n, body) = match s {
        [] => return Err(err("empty input")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(err("truncated size prefix"));
            }
            let n = rest[..6]
                .iter()
                .try_fold(0u64, |acc, &b| Ok::<_, Error>(acc << 6 | sextet(b)?))?;
            (n, &rest[6..])
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(err("truncated size prefix"));
            }
            let n = rest[..3]
                .iter()
                .try_fold(0u64, |acc, &b| Ok::<_, Error>(acc << 6 | sextet(b)?))?;
            (n, &rest[3..])
        }
        [b, rest @ ..] => (sextet(*b)?, rest),
    };
    if n as usize > MAX_VERTICES {
        return Err(Error::TooManyVertices(n as usize));
    }
    let n = n as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let want = bits.div_ceil(6);
    if body.len() != want {
        return Err(err(format!(
            "expected {want} data bytes for {n} vertices, found {}",
            body.len()
        )));
    }
    let mut g = Graph::new(n)?;
    let mut idx = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = sextet(body[idx / 6])?;
            if byte >> (5 - idx % 6) & 1 == 1 {
                g.add_edge(u, v)?;
            }
            idx += 1;
        }
    }
    if let Some(&last) = body.last() {
        let pad = want * 6 - bits;
        if sextet(last)? & ((1 << pad) - 1) != 0 {
            return Err(err("nonzero padding bits"));
        }
    }
    Ok(g)
}

/// Encodes `g` without a header.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("printable ASCII")
}
