//! graph6 text encoding for simple graphs of order at most 64.
//!
//! A token is a size header followed by the upper adjacency triangle in
//! column-major order (`(0,1), (0,2), (1,2), (0,3), ...`), packed six bits per
//! byte, most significant bit first, each sextet offset by 63.

use thiserror::Error;

use crate::graph::{bit, Graph, MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 token")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is not a graph6 character")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("malformed size header at offset {offset}")]
    MalformedHeader { offset: usize },
    #[error("graph order {order} is outside [1, {MAX_ORDER}] (header at offset {offset})")]
    OrderOutOfRange { offset: usize, order: usize },
    #[error("bit body truncated at offset {offset}: expected {expected} body bytes, found {found}")]
    Truncated {
        offset: usize,
        expected: usize,
        found: usize,
    },
    #[error("trailing data at offset {offset}")]
    TrailingData { offset: usize },
    #[error("nonzero padding bits in final byte at offset {offset}")]
    NonzeroPadding { offset: usize },
}

const OFFSET: u8 = 63;

fn body_len(order: usize) -> usize {
    (order * (order - 1) / 2).div_ceil(6)
}

/// Encodes `g` as a graph6 token (no newline).
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + body_len(n));
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let col = g.neighbors(j);
        for i in 0..j {
            acc = (acc << 1) | u8::from(col & bit(i) != 0);
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Decodes one graph6 token. Surrounding whitespace is not accepted; callers
/// reading files strip line terminators first.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if let Some(offset) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Graph6Error::InvalidByte {
            offset,
            byte: bytes[offset],
        });
    }

    let (order, header_len) = if bytes[0] != b'~' {
        ((bytes[0] - OFFSET) as usize, 1)
    } else {
        if bytes.len() < 4 {
            return Err(Graph6Error::MalformedHeader { offset: bytes.len() });
        }
        if bytes[1] == b'~' {
            // 8-byte header for orders >= 258048; always out of range here
            return Err(Graph6Error::OrderOutOfRange {
                offset: 0,
                order: usize::MAX,
            });
        }
        let order = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - OFFSET) as usize);
        if order <= 62 {
            return Err(Graph6Error::MalformedHeader { offset: 1 });
        }
        (order, 4)
    };
    if order == 0 || order > MAX_ORDER {
        return Err(Graph6Error::OrderOutOfRange { offset: 0, order });
    }

    let body = &bytes[header_len..];
    let expected = body_len(order);
    if body.len() < expected {
        return Err(Graph6Error::Truncated {
            offset: bytes.len(),
            expected,
            found: body.len(),
        });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingData {
            offset: header_len + expected,
        });
    }

    let total_bits = order * (order - 1) / 2;
    let pad = expected * 6 - total_bits;
    if pad > 0 {
        let last = body[expected - 1] - OFFSET;
        if last & ((1u8 << pad) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding {
                offset: header_len + expected - 1,
            });
        }
    }

    let mut adj = vec![0u64; order];
    let mut idx = 0;
    for j in 1..order {
        for i in 0..j {
            let sextet = body[idx / 6] - OFFSET;
            if sextet & (0x20 >> (idx % 6)) != 0 {
                adj[i] |= bit(j);
                adj[j] |= bit(i);
            }
            idx += 1;
        }
    }
    Ok(Graph::from_adjacency(adj))
}

/// Parses a graph6 file body: one token per line, blank lines skipped, optional
/// trailing newline. Errors carry the 1-based line number.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>, (usize, Graph6Error)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim_end_matches('\r').is_empty())
        .map(|(i, l)| parse_graph6(l.trim_end_matches('\r')).map_err(|e| (i + 1, e)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    #[test]
    fn k2_and_2k1() {
        let k2 = Graph::generate(Family::Complete, 2).unwrap();
        assert_eq!(emit_graph6(&k2), "A_");
        assert_eq!(parse_graph6("A_").unwrap(), k2);
        let e2 = Graph::empty(2).unwrap();
        assert_eq!(emit_graph6(&e2), "A?");
        assert_eq!(parse_graph6("A?").unwrap(), e2);
    }

    #[test]
    fn known_token() {
        // 5 vertices, edges 0-2 0-4 1-3 3-4
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(emit_graph6(&g), "DQc");
        assert_eq!(parse_graph6("DQc").unwrap(), g);
    }

    #[test]
    fn long_header_orders() {
        for n in [62, 63, 64] {
            let g = Graph::generate(Family::Cycle, n).unwrap();
            let t = emit_graph6(&g);
            assert_eq!(t.starts_with('~'), n > 62);
            assert_eq!(parse_graph6(&t).unwrap(), g);
        }
    }

    #[test]
    fn parse_errors() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(
            parse_graph6("A "),
            Err(Graph6Error::InvalidByte { offset: 1, byte: b' ' })
        );
        assert!(matches!(
            parse_graph6("?"),
            Err(Graph6Error::OrderOutOfRange { order: 0, .. })
        ));
        assert!(matches!(parse_graph6("D"), Err(Graph6Error::Truncated { expected: 2, found: 0, .. })));
        assert_eq!(parse_graph6("A_?"), Err(Graph6Error::TrailingData { offset: 2 }));
        assert_eq!(parse_graph6("A@"), Err(Graph6Error::NonzeroPadding { offset: 1 }));
        assert!(matches!(parse_graph6("~?"), Err(Graph6Error::MalformedHeader { .. })));
        assert!(matches!(parse_graph6("~??}"), Err(Graph6Error::MalformedHeader { offset: 1 })));
        assert_eq!(
            parse_graph6("~?A?"),
            Err(Graph6Error::OrderOutOfRange { offset: 0, order: 128 })
        );
    }

    #[test]
    fn file_lines() {
        let gs = parse_graph6_lines("A_\nA?\r\n\nBw\n").unwrap();
        assert_eq!(gs.len(), 3);
        assert_eq!(gs[2], Graph::generate(Family::Complete, 3).unwrap());
        assert_eq!(parse_graph6_lines("A_\nZZ\n").unwrap_err().0, 2);
    }
}
