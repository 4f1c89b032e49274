//! The graph6 text format for simple undirected graphs.
//!
//! One graph per line: a length field, then the upper triangle of the
//! adjacency matrix packed six bits per printable byte (offset 63). The
//! optional `>>graph6<<` header is tolerated and skipped.

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

fn byte_err(offset: usize, reason: &str) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.to_string(),
    }
}

/// Parses one graph6 line (optionally prefixed by the format header).
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let mut s = text.trim_end_matches(['\n', '\r']);
    let mut base_offset = 0;
    if let Some(rest) = s.strip_prefix(HEADER) {
        s = rest;
        base_offset = HEADER.len();
    }
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(byte_err(base_offset, "empty graph6 string"));
    }
    let (n, mut pos) = parse_order(bytes, base_offset)?;
    let nbits = n * (n.saturating_sub(1)) / 2;
    let nbytes = (nbits + 5) / 6;
    if bytes.len() < pos + nbytes {
        return Err(byte_err(
            base_offset + bytes.len(),
            &format!(
                "truncated adjacency data: need {} bytes, found {}",
                nbytes,
                bytes.len() - pos
            ),
        ));
    }
    if bytes.len() > pos + nbytes {
        return Err(byte_err(base_offset + pos + nbytes, "trailing garbage"));
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[pos + bit / 6];
            if !(63..=126).contains(&byte) {
                return Err(byte_err(
                    base_offset + pos + bit / 6,
                    &format!("out-of-range character 0x{:02x}", byte),
                ));
            }
            let value = byte - 63;
            if value & (1 << (5 - bit % 6)) != 0 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    // Padding bits beyond the triangle must be zero.
    while bit < nbytes * 6 {
        let byte = bytes[pos + bit / 6];
        if !(63..=126).contains(&byte) {
            return Err(byte_err(
                base_offset + pos + bit / 6,
                &format!("out-of-range character 0x{:02x}", byte),
            ));
        }
        if (byte - 63) & (1 << (5 - bit % 6)) != 0 {
            return Err(byte_err(base_offset + pos + bit / 6, "nonzero padding bit"));
        }
        bit += 1;
    }
    pos += nbytes;
    let _ = pos;
    Graph::from_edges(n, &edges)
}

fn parse_order(bytes: &[u8], base_offset: usize) -> Result<(usize, usize)> {
    let b0 = bytes[0];
    if b0 == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            // '~~' + 36 bits
            let mut n = 0usize;
            for (i, &b) in bytes.iter().enumerate().take(8).skip(2) {
                if !(63..=126).contains(&b) {
                    return Err(byte_err(base_offset + i, "bad byte in length prefix"));
                }
                n = (n << 6) | (b - 63) as usize;
            }
            if bytes.len() < 8 {
                return Err(byte_err(base_offset + bytes.len(), "truncated length prefix"));
            }
            Ok((n, 8))
        } else {
            // '~' + 18 bits
            if bytes.len() < 4 {
                return Err(byte_err(base_offset + bytes.len(), "truncated length prefix"));
            }
            let mut n = 0usize;
            for (i, &b) in bytes.iter().enumerate().take(4).skip(1) {
                if !(63..=126).contains(&b) {
                    return Err(byte_err(base_offset + i, "bad byte in length prefix"));
                }
                n = (n << 6) | (b - 63) as usize;
            }
            Ok((n, 4))
        }
    } else if (63..126).contains(&b0) {
        Ok(((b0 - 63) as usize, 1))
    } else {
        Err(byte_err(
            base_offset,
            &format!("malformed length prefix 0x{:02x}", b0),
        ))
    }
}

/// Encodes a graph as a canonical graph6 string (no header).
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(63 + ((n >> shift) & 0x3f) as u8);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(63 + ((n >> shift) & 0x3f) as u8);
        }
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            nbits += 1;
            if nbits == 6 {
                out.push(63 + acc);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push(63 + (acc << (6 - nbits)));
    }
    String::from_utf8(out).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> Graph {
        let mut edges = Vec::new();
        for j in 1..n {
            for i in 0..j {
                edges.push((i, j));
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    // Expected strings below are computed from the published format rules:
    // length byte n+63, then upper-triangle bits packed 6 per byte, offset 63.
    #[test]
    fn k2_is_a_underscore() {
        // n=2: 'A'; one bit set -> 100000 -> 63+32 = '_'.
        assert_eq!(encode_graph6(&k(2)), "A_");
        assert_eq!(parse_graph6("A_").unwrap(), k(2));
    }

    #[test]
    fn k3_is_bw() {
        // n=3: 'B'; bits 111 -> 111000 -> 63+56 = 'w'.
        assert_eq!(encode_graph6(&k(3)), "Bw");
        assert_eq!(parse_graph6("Bw").unwrap(), k(3));
    }

    #[test]
    fn single_vertex_is_at() {
        let g = Graph::from_edges(1, &[]).unwrap();
        assert_eq!(encode_graph6(&g), "@");
        assert_eq!(parse_graph6("@").unwrap().order(), 1);
    }

    #[test]
    fn header_is_tolerated() {
        assert_eq!(parse_graph6(">>graph6<<A_").unwrap(), k(2));
    }

    #[test]
    fn out_of_range_character() {
        let err = parse_graph6("A\x20").unwrap_err();
        let msg = format!("{}", err);
        assert!(msg.contains("byte 1"), "{}", msg);
    }

    #[test]
    fn trailing_garbage() {
        assert!(parse_graph6("A_X").is_err());
    }

    #[test]
    fn truncated_data() {
        assert!(parse_graph6("D").is_err());
    }

    #[test]
    fn large_order_roundtrip() {
        // Path on 100 vertices exercises the '~' length prefix.
        let edges: Vec<(usize, usize)> = (0..99).map(|i| (i, i + 1)).collect();
        let g = Graph::from_edges(100, &edges).unwrap();
        let s = encode_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }
}
