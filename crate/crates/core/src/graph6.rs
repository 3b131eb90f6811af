//! graph6 encoding, restricted to the single-byte order form (n ≤ 62).
//!
//! Layout: byte 0 is `63 + n`; the upper triangle of the adjacency matrix
//! follows in column order `(0,1), (0,2), (1,2), (0,3), …`, six bits per
//! byte, most significant first, each byte offset by 63. The last byte is
//! zero-padded.

use std::io::BufRead;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

pub const HEADER: &str = ">>graph6<<";

/// Largest order expressible in the single-byte length form.
pub const MAX_ORDER: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 record")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the printable range 63..=126")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("multi-byte order field at offset {offset} is not supported (n > {MAX_ORDER})")]
    UnsupportedLength { offset: usize },
    #[error("expected {expected} data bytes for n={order}, found {found} (record ends at offset {offset})")]
    WrongLength {
        order: usize,
        expected: usize,
        found: usize,
        offset: usize,
    },
    #[error("nonzero padding bits in final byte at offset {offset}")]
    NonzeroPadding { offset: usize },
    #[error("order {0} cannot be written in single-byte graph6 (supported: 1..={MAX_ORDER})")]
    OrderOutOfRange(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn data_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Decodes one graph6 record. A leading `>>graph6<<` header and trailing
/// line terminators are accepted; error offsets count from the start of
/// `text` as given.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.as_bytes();
    let start = if bytes.starts_with(HEADER.as_bytes()) {
        HEADER.len()
    } else {
        0
    };
    let mut end = bytes.len();
    while end > start && matches!(bytes[end - 1], b'\n' | b'\r') {
        end -= 1;
    }
    let body = &bytes[start..end];
    let Some(&first) = body.first() else {
        return Err(Graph6Error::Empty);
    };
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::InvalidByte {
                offset: start + i,
                byte: b,
            });
        }
    }
    if first == 126 {
        return Err(Graph6Error::UnsupportedLength { offset: start });
    }
    let n = (first - 63) as usize;
    let data = &body[1..];
    let expected = data_len(n);
    if data.len() != expected {
        return Err(Graph6Error::WrongLength {
            order: n,
            expected,
            found: data.len(),
            offset: end,
        });
    }
    let pairs = n * n.saturating_sub(1) / 2;
    if !pairs.is_multiple_of(6) {
        let last = data[expected - 1] - 63;
        let pad = 6 * expected - pairs;
        if last & ((1u8 << pad) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding { offset: end - 1 });
        }
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = data[k / 6] - 63;
            if byte & (0b10_0000 >> (k % 6)) != 0 {
                g.add_edge(u, v)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Encodes `g` without header or line terminator.
pub fn write_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n == 0 || n > MAX_ORDER {
        return Err(Graph6Error::OrderOutOfRange(n));
    }
    let mut out = Vec::with_capacity(1 + data_len(n));
    out.push(63 + n as u8);
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// One line of a graph6 stream.
#[derive(Debug)]
pub struct Record {
    /// 1-based line number in the input.
    pub line: usize,
    pub text: String,
    pub graph: Result<Graph, Graph6Error>,
}

/// Reads a graph6 stream, one record per non-blank line. Malformed lines
/// are returned as errors in place and never stop the stream; I/O errors do.
pub fn read_records<R: BufRead>(reader: R) -> std::io::Result<Vec<Record>> {
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let text = line.trim_end_matches(['\r', '\n']).to_string();
        if text.trim().is_empty() {
            continue;
        }
        let graph = parse_graph6(&text);
        out.push(Record {
            line: i + 1,
            text,
            graph,
        });
    }
    Ok(out)
}

/// Parses every line of a graph6 catalog held in memory, failing on the
/// first malformed record.
pub fn parse_catalog(text: &str) -> Result<Vec<Graph>, (usize, Graph6Error)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| parse_graph6(l).map_err(|e| (i + 1, e)))
        .collect()
}
