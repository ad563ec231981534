//! The graph6 text encoding.

use thiserror::Error;

use super::Graph;

const MAX_N: usize = 1 << 18;
const HEADER: &str = ">>graph6<<";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the printable range 63..=126")]
    BadByte { offset: usize, byte: u8 },
    #[error("malformed size header")]
    BadHeader,
    #[error("{n} vertices exceeds the supported maximum {MAX_N}")]
    TooLarge { n: usize },
    #[error("expected {expected} data bytes, found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("nonzero padding bits in the last byte")]
    NonzeroPadding,
}

fn header_len(n: usize) -> usize {
    match n {
        0..=62 => 1,
        63..=258047 => 4,
        _ => 8,
    }
}

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::with_capacity(header_len(n) + (n * n.saturating_sub(1) / 2).div_ceil(6));
    match header_len(n) {
        1 => out.push(n as u8 + 63),
        4 => {
            out.push(126);
            out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
        }
        _ => {
            out.extend([126, 126]);
            out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Decodes one graph6 string; surrounding whitespace and a leading
/// `>>graph6<<` marker are ignored.
pub fn decode(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if let Some((offset, &byte)) = bytes
        .iter()
        .enumerate()
        .find(|(_, &b)| !(63..=126).contains(&b))
    {
        return Err(Graph6Error::BadByte { offset, byte });
    }
    let digits = |s: &[u8]| s.iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
    let (n, body) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(Graph6Error::BadHeader);
        }
        (digits(&bytes[2..8]), &bytes[8..])
    } else {
        if bytes.len() < 4 {
            return Err(Graph6Error::BadHeader);
        }
        (digits(&bytes[1..4]), &bytes[4..])
    };
    if n > MAX_N {
        return Err(Graph6Error::TooLarge { n });
    }
    if bytes.len() - body.len() != header_len(n) {
        return Err(Graph6Error::BadHeader);
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Graph6Error::WrongLength {
            expected,
            found: body.len(),
        });
    }
    if bits % 6 != 0 {
        let pad = 6 - bits % 6;
        if (body[expected - 1] - 63) & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding);
        }
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let b = body[k / 6] - 63;
            if (b >> (5 - k % 6)) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Decodes a multi-line graph6 document, skipping blank lines and bare
/// `>>graph6<<` markers. Each result carries its 1-based line number.
pub fn parse_lines(text: &str) -> Vec<(usize, Result<Graph, Graph6Error>)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && t != HEADER
        })
        .map(|(i, l)| (i + 1, decode(l)))
        .collect()
}
