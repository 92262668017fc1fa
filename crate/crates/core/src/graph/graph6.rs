//! graph6 encoding, single-byte size form only.
//!
//! Layout: one size byte `n + 63`, then the upper triangle of the adjacency
//! matrix in column order (`(0,1), (0,2), (1,2), (0,3), ...`) packed six bits
//! per byte, most significant bit first, each byte offset by 63, with the
//! final byte zero-padded.

use super::Graph;
use crate::error::{Error, Result};

pub const GRAPH6_HEADER: &str = ">>graph6<<";

/// Largest order expressible in the single-byte size form.
pub const MAX_GRAPH6_VERTICES: usize = 62;

fn parse_error(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Decodes one graph6 line. A leading `>>graph6<<` header and a trailing
/// line terminator are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.strip_suffix('\n').unwrap_or(text);
    let line = line.strip_suffix('\r').unwrap_or(line);
    let (skip, line) = match line.strip_prefix(GRAPH6_HEADER) {
        Some(rest) => (GRAPH6_HEADER.len(), rest),
        None => (0, line),
    };
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(parse_error(skip, "empty input"));
    }
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(parse_error(
            skip + pos,
            format!("byte 0x{:02x} outside the graph6 range 63..=126", bytes[pos]),
        ));
    }
    if bytes[0] == 126 {
        return Err(parse_error(skip, "extended size forms (n > 62) are not supported"));
    }
    let n = (bytes[0] - 63) as usize;
    let need = body_len(n);
    let body = &bytes[1..];
    if body.len() < need {
        return Err(parse_error(
            skip + bytes.len(),
            format!("truncated: {n} vertices need {need} data bytes, found {}", body.len()),
        ));
    }
    if body.len() > need {
        return Err(parse_error(skip + 1 + need, "trailing garbage after graph data"));
    }

    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.set(i, j, true);
            }
            k += 1;
        }
    }
    if k % 6 != 0 {
        let last = body[need - 1] - 63;
        if last & ((1 << (6 - k % 6)) - 1) != 0 {
            return Err(parse_error(skip + need, "nonzero padding bits"));
        }
    }
    Ok(g)
}

/// Decodes a corpus with one graph per line. Blank lines are skipped and a
/// header is tolerated on any line. Errors name the 1-based line.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    let mut line_start = 0;
    for (lineno, line) in text.split('\n').enumerate() {
        let trimmed = line.trim_end_matches('\r');
        if !trimmed.is_empty() && trimmed != GRAPH6_HEADER {
            match parse_graph6(trimmed) {
                Ok(g) => out.push(g),
                Err(Error::Graph6 { offset, reason }) => {
                    return Err(parse_error(
                        line_start + offset,
                        format!("line {}: {reason}", lineno + 1),
                    ))
                }
                Err(e) => return Err(e),
            }
        }
        line_start += line.len() + 1;
    }
    Ok(out)
}

/// Encodes `g` without header or line terminator.
pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_GRAPH6_VERTICES {
        return Err(Error::Capacity(format!(
            "graph6 output supports at most {MAX_GRAPH6_VERTICES} vertices, got {n}"
        )));
    }
    let mut out = Vec::with_capacity(1 + body_len(n));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}
