//! graph6 (bit-exact per the published format) and a DIMACS-like edge-list
//! reader.
//!
//! graph6 layout: an optional `>>graph6<<` prefix, the vertex count as
//! `n + 63` for n <= 62 (or `~` followed by three bytes for larger n, which we
//! parse but reject past [`MAX_N`]), then the upper triangle of the adjacency
//! matrix in column-major order -- bits x(0,1), x(0,2), x(1,2), x(0,3), ... --
//! packed into 6-bit big-endian groups, each emitted as `value + 63`. Padding
//! bits at the end must be zero.

use thiserror::Error;

use crate::graph::{Graph, MAX_N};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("malformed header at byte {offset}: {reason}")]
    MalformedHeader { offset: usize, reason: &'static str },
    #[error("vertex count {n} at byte {offset} exceeds the limit {max}")]
    TooLarge { n: usize, max: usize, offset: usize },
    #[error("byte {offset} is not a printable graph6 byte (0x{byte:02x})")]
    BadByte { offset: usize, byte: u8 },
    #[error("body truncated at byte {offset}: expected {expected} data bytes")]
    Truncated { offset: usize, expected: usize },
    #[error("unexpected trailing byte at offset {offset}")]
    TrailingBytes { offset: usize },
    #[error("nonzero padding bit in final group at byte {offset}")]
    TrailingBits { offset: usize },
}

const OPTIONAL_HEADER: &[u8] = b">>graph6<<";

/// Parses a one-line graph6 encoding. The optional `>>graph6<<` prefix and a
/// trailing newline are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let mut bytes = text.as_bytes();
    let mut base = 0;
    if let Some(stripped) = bytes.strip_suffix(b"\n") {
        bytes = stripped;
    }
    if let Some(stripped) = bytes.strip_suffix(b"\r") {
        bytes = stripped;
    }
    if bytes.starts_with(OPTIONAL_HEADER) {
        bytes = &bytes[OPTIONAL_HEADER.len()..];
        base = OPTIONAL_HEADER.len();
    }
    if bytes.is_empty() {
        return Err(Graph6Error::MalformedHeader { offset: base, reason: "empty input" });
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::BadByte { offset: base + i, byte: b });
        }
    }
    let (n, header_len) = parse_order(bytes, base)?;
    if n > MAX_N {
        return Err(Graph6Error::TooLarge { n, max: MAX_N, offset: base });
    }
    let body = &bytes[header_len..];
    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = bit_count.div_ceil(6);
    if body.len() < expected {
        return Err(Graph6Error::Truncated { offset: base + bytes.len(), expected });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingBytes { offset: base + header_len + expected });
    }

    let mut g = Graph::empty(n).expect("n <= MAX_N checked above");
    let mut idx = 0usize; // index into the upper-triangle bit sequence
    'outer: for v in 1..n {
        for u in 0..v {
            let byte = body[idx / 6] - 63;
            let bit = byte >> (5 - idx % 6) & 1;
            if bit == 1 {
                g.add_edge(u, v).expect("indices in range");
            }
            idx += 1;
            if idx == bit_count {
                break 'outer;
            }
        }
    }
    // Remaining bits of the final group must be zero.
    if bit_count > 0 {
        let last = body.len() - 1;
        let used_in_last = bit_count - 6 * last;
        let mask = (1u8 << (6 - used_in_last)) - 1;
        if (body[last] - 63) & mask != 0 {
            return Err(Graph6Error::TrailingBits { offset: base + header_len + last });
        }
    }
    Ok(g)
}

fn parse_order(bytes: &[u8], base: usize) -> Result<(usize, usize), Graph6Error> {
    if bytes[0] != b'~' {
        return Ok(((bytes[0] - 63) as usize, 1));
    }
    // Extended forms: '~' + 3 bytes (n < 2^18), or '~~' + 6 bytes.
    if bytes.len() >= 2 && bytes[1] == b'~' {
        if bytes.len() < 8 {
            return Err(Graph6Error::MalformedHeader {
                offset: base,
                reason: "long-form order needs 6 bytes after '~~'",
            });
        }
        let mut n = 0usize;
        for &b in &bytes[2..8] {
            n = n << 6 | (b - 63) as usize;
        }
        Ok((n, 8))
    } else {
        if bytes.len() < 4 {
            return Err(Graph6Error::MalformedHeader {
                offset: base,
                reason: "medium-form order needs 3 bytes after '~'",
            });
        }
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            n = n << 6 | (b - 63) as usize;
        }
        Ok((n, 4))
    }
}

/// Canonical (minimal-length) graph6 encoding of `g`.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    debug_assert!(n <= 62, "MAX_N fits the one-byte order form");
    let mut out = Vec::new();
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut filled = 0u8;
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
    String::from_utf8(out).expect("graph6 bytes are printable ascii")
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DimacsError {
    #[error("line {0}: missing or malformed 'p edge <n> <m>' header")]
    BadHeader(usize),
    #[error("line {0}: malformed edge line")]
    BadEdge(usize),
    #[error("line {0}: vertex {1} out of range 1..={2}")]
    VertexRange(usize, usize, usize),
    #[error("header declares {declared} edges but {found} edge lines present")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("vertex count {n} exceeds the limit {max}")]
    TooLarge { n: usize, max: usize },
}

/// Reads a DIMACS-like edge list: a `p edge n m` header, then `e u v` lines
/// with 1-based endpoints. Lines starting with `c` are comments.
pub fn parse_dimacs(text: &str) -> Result<Graph, DimacsError> {
    let mut graph: Option<Graph> = None;
    let mut declared = 0usize;
    let mut found = 0usize;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let lineno = i + 1;
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if let Some(rest) = line.strip_prefix('p') {
            if graph.is_some() {
                return Err(DimacsError::BadHeader(lineno));
            }
            let mut it = rest.split_whitespace();
            if it.next() != Some("edge") {
                return Err(DimacsError::BadHeader(lineno));
            }
            let n: usize =
                it.next().and_then(|s| s.parse().ok()).ok_or(DimacsError::BadHeader(lineno))?;
            let m: usize =
                it.next().and_then(|s| s.parse().ok()).ok_or(DimacsError::BadHeader(lineno))?;
            if it.next().is_some() {
                return Err(DimacsError::BadHeader(lineno));
            }
            if n > MAX_N {
                return Err(DimacsError::TooLarge { n, max: MAX_N });
            }
            graph = Some(Graph::empty(n).expect("bounds checked"));
            declared = m;
        } else if let Some(rest) = line.strip_prefix('e') {
            let g = graph.as_mut().ok_or(DimacsError::BadHeader(lineno))?;
            let mut it = rest.split_whitespace();
            let u: usize =
                it.next().and_then(|s| s.parse().ok()).ok_or(DimacsError::BadEdge(lineno))?;
            let v: usize =
                it.next().and_then(|s| s.parse().ok()).ok_or(DimacsError::BadEdge(lineno))?;
            if it.next().is_some() {
                return Err(DimacsError::BadEdge(lineno));
            }
            let n = g.n();
            if u == 0 || u > n {
                return Err(DimacsError::VertexRange(lineno, u, n));
            }
            if v == 0 || v > n {
                return Err(DimacsError::VertexRange(lineno, v, n));
            }
            g.add_edge(u - 1, v - 1).map_err(|_| DimacsError::BadEdge(lineno))?;
            found += 1;
        } else {
            return Err(DimacsError::BadEdge(lineno));
        }
    }
    if declared != found {
        return Err(DimacsError::EdgeCountMismatch { declared, found });
    }
    graph.ok_or(DimacsError::BadHeader(0))
}
