//! graph6 interchange: header byte `63 + n` (or `~` plus three bytes for
//! larger orders), then the upper triangle column by column, six bits per
//! byte, most significant bit first.

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

const OFFSET: u8 = 63;
const HEADER: &str = ">>graph6<<";

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 { offset, reason: reason.into() }
}

pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.trim_end_matches(['\n', '\r']);
    let (base, line) = match line.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest),
        None => (0, line),
    };
    let bytes = line.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(base + i, format!("byte {b} outside printable range 63..=126")));
        }
    }
    let (n, body_start) = match bytes.first() {
        None => return Err(err(base, "missing order header")),
        Some(&126) => {
            if bytes.get(1) == Some(&126) {
                return Err(err(base + 1, "orders above 258047 are not supported"));
            }
            if bytes.len() < 4 {
                return Err(err(base + bytes.len(), "truncated extended order header"));
            }
            let n = bytes[1..4]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - OFFSET) as usize);
            if n < 63 {
                return Err(err(base, format!("extended header used for order {n}")));
            }
            (n, 4)
        }
        Some(&b) => ((b - OFFSET) as usize, 1),
    };
    if n > MAX_VERTICES {
        return Err(err(base, format!("order {n} exceeds {MAX_VERTICES}")));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    let body = &bytes[body_start..];
    if body.len() < nbytes {
        return Err(err(base + bytes.len(), format!("truncated bit vector: need {nbytes} bytes, found {}", body.len())));
    }
    if body.len() > nbytes {
        return Err(err(base + body_start + nbytes, "trailing bytes after bit vector"));
    }
    let mut rows = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - OFFSET;
            if byte >> (5 - k % 6) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    // padding bits must be zero
    if nbits % 6 != 0 {
        let last = body[nbytes - 1] - OFFSET;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err(base + body_start + nbytes - 1, "nonzero padding bits"));
        }
    }
    Graph::from_rows(&rows)
}

pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_VERTICES {
        return Err(Error::TooLarge { what: "graph6 output", n, limit: MAX_VERTICES });
    }
    let mut out = Vec::new();
    if n <= 62 {
        out.push(OFFSET + n as u8);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(OFFSET + ((n >> shift) & 63) as u8);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(OFFSET + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(OFFSET + (acc << (6 - filled)));
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Parses one graph per non-empty line; errors carry the line number.
pub fn read_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            parse_graph6(l.trim()).map_err(|e| match e {
                Error::Graph6 { offset, reason } => err(offset, format!("line {}: {reason}", i + 1)),
                other => other,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::enumerate_labeled;

    #[test]
    fn known_encodings() {
        let g = parse_graph6("?").unwrap();
        assert_eq!(g.order(), 0);
        let k2 = parse_graph6("A_").unwrap();
        assert_eq!((k2.order(), k2.size()), (2, 1));
        let k4 = parse_graph6("C~").unwrap();
        assert_eq!(k4, Graph::complete(4).unwrap());
        assert_eq!(write_graph6(&Graph::complete(2).unwrap()).unwrap(), "A_");
        assert_eq!(write_graph6(&Graph::complete(4).unwrap()).unwrap(), "C~");
        assert_eq!(write_graph6(&Graph::empty(0).unwrap()).unwrap(), "?");
        // C_5 as listed by common generators
        assert_eq!(write_graph6(&Graph::cycle(5).unwrap()).unwrap(), "Dhc");
    }

    #[test]
    fn header_prefix_is_accepted() {
        assert_eq!(parse_graph6(">>graph6<<C~").unwrap(), Graph::complete(4).unwrap());
    }

    #[test]
    fn errors_name_offsets() {
        match parse_graph6("C~~") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("{other:?}"),
        }
        match parse_graph6("D") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("{other:?}"),
        }
        match parse_graph6("C ") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("{other:?}"),
        }
        // K_2 with a stray padding bit
        assert!(parse_graph6("A`").is_err());
    }

    #[test]
    fn extended_header_round_trip() {
        let g = Graph::complete_bipartite(30, 34).unwrap();
        let s = write_graph6(&g).unwrap();
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn round_trip_small_orders() {
        for n in 0..=5 {
            for g in enumerate_labeled(n).unwrap() {
                assert_eq!(parse_graph6(&write_graph6(&g).unwrap()).unwrap(), g);
            }
        }
    }
}
