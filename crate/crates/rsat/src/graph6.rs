//! Short-form graph6 encoding (at most 62 vertices).
//!
//! The header byte is `n + 63`. The upper triangle follows column by column
//! (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), packed six bits per byte with
//! 63 added and the last group zero padded.

use rsat_core::SimpleGraph;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Graph6Error {
    #[error("byte {offset}: empty input")]
    Empty { offset: usize },
    #[error("byte {offset}: 0x{byte:02x} is outside the printable range 63..=126")]
    BadByte { offset: usize, byte: u8 },
    #[error("byte {offset}: long-form graph6 (more than 62 vertices) is not supported")]
    LongForm { offset: usize },
    #[error("byte {offset}: expected {expected} bytes in total, found {found}")]
    Length { offset: usize, expected: usize, found: usize },
    #[error("byte {offset}: padding bits must be zero")]
    Padding { offset: usize },
    #[error("byte {offset}: graphs need at least one vertex")]
    NoVertices { offset: usize },
    #[error("graph6 short form holds at most 62 vertices, got {0}")]
    TooLarge(usize),
}

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Encodes `g`; fails for more than 62 vertices.
pub fn encode(g: &SimpleGraph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n > 62 {
        return Err(Graph6Error::TooLarge(n));
    }
    let mut out = Vec::with_capacity(1 + body_len(n));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
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
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Decodes one graph6 line; a trailing newline is tolerated.
pub fn decode(input: &[u8]) -> Result<SimpleGraph, Graph6Error> {
    let bytes = input.strip_suffix(b"\n").unwrap_or(input);
    let bytes = bytes.strip_suffix(b"\r").unwrap_or(bytes);
    let Some(&head) = bytes.first() else {
        return Err(Graph6Error::Empty { offset: 0 });
    };
    if head == 126 {
        return Err(Graph6Error::LongForm { offset: 0 });
    }
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::BadByte { offset, byte });
        }
    }
    let n = usize::from(head - 63);
    let expected = 1 + body_len(n);
    if bytes.len() != expected {
        return Err(Graph6Error::Length { offset: bytes.len().min(expected), expected, found: bytes.len() });
    }
    if n == 0 {
        return Err(Graph6Error::NoVertices { offset: 0 });
    }
    let mut g = SimpleGraph::empty(n).map_err(|_| Graph6Error::TooLarge(n))?;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[1 + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if k % 6 != 0 {
        let last = bytes[expected - 1] - 63;
        if last & ((1u8 << (6 - k % 6)) - 1) != 0 {
            return Err(Graph6Error::Padding { offset: expected - 1 });
        }
    }
    Ok(g)
}

pub fn decode_str(s: &str) -> Result<SimpleGraph, Graph6Error> {
    decode(s.trim_end().as_bytes())
}
