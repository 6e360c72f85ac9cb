//! graph6 and plain edge-list text formats.

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

impl Graph {
    /// Decodes one graph6 string (surrounding whitespace and an optional
    /// `>>graph6<<` header are ignored).
    pub fn from_graph6(s: &str) -> Result<Graph> {
        let trimmed = s.trim();
        let offset = if trimmed.starts_with(HEADER) {
            HEADER.len()
        } else {
            0
        };
        let bytes = &trimmed.as_bytes()[offset..];
        let err = |pos: usize, msg: &str| Error::Graph6 {
            pos: pos + offset,
            msg: msg.to_string(),
        };
        if bytes.is_empty() {
            return Err(err(0, "empty input"));
        }
        if let Some(i) = bytes.iter().position(|&b| !(63..=126).contains(&b)) {
            return Err(err(i, &format!("byte {:#04x} outside 63..=126", bytes[i])));
        }
        let (n, body) = if bytes[0] < 126 {
            ((bytes[0] - 63) as usize, &bytes[1..])
        } else {
            if bytes.len() < 4 {
                return Err(err(0, "truncated vertex count"));
            }
            if bytes[1] == 126 {
                return Err(err(1, "vertex counts above 258047 are not supported"));
            }
            let n = bytes[1..4]
                .iter()
                .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
            (n, &bytes[4..])
        };
        if n > MAX_VERTICES {
            return Err(err(0, &format!("{n} vertices exceeds {MAX_VERTICES}")));
        }
        let nbits = n * n.saturating_sub(1) / 2;
        let expected = nbits.div_ceil(6);
        let header_len = bytes.len() - body.len();
        if body.len() != expected {
            return Err(err(
                header_len,
                &format!(
                    "expected {expected} data bytes for n = {n}, found {}",
                    body.len()
                ),
            ));
        }
        let mut g = Graph::empty(n)?;
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                let byte = body[k / 6] - 63;
                if byte >> (5 - k % 6) & 1 == 1 {
                    g.add_edge(i, j)?;
                }
                k += 1;
            }
        }
        if nbits % 6 != 0 {
            let last = body[expected - 1] - 63;
            let pad = 6 - nbits % 6;
            if last & ((1 << pad) - 1) != 0 {
                return Err(err(header_len + expected - 1, "nonzero padding bits"));
            }
        }
        Ok(g)
    }

    /// Header-less graph6 encoding.
    pub fn to_graph6(&self) -> String {
        let n = self.n();
        let mut out = Vec::new();
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
        for j in 1..n {
            for i in 0..j {
                acc = acc << 1 | self.has_edge(i, j) as u8;
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
        String::from_utf8(out).expect("graph6 is printable ASCII")
    }
}

/// Parses the edge-list format: first line `n`, then one `u v` pair per line
/// (0-indexed). Blank lines and lines starting with `#` are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (first, header) = lines.next().ok_or(Error::EdgeList {
        line: 1,
        msg: "missing vertex count".into(),
    })?;
    let n: usize = header.parse().map_err(|_| Error::EdgeList {
        line: first,
        msg: format!("expected a vertex count, found {header:?}"),
    })?;
    let mut g = Graph::empty(n).map_err(|e| Error::EdgeList {
        line: first,
        msg: e.to_string(),
    })?;
    for (line, text) in lines {
        let parts: Vec<&str> = text.split_whitespace().collect();
        let parsed: Option<Vec<usize>> = parts.iter().map(|p| p.parse().ok()).collect();
        match parsed.as_deref() {
            Some(&[u, v]) => g.add_edge(u, v).map_err(|e| Error::EdgeList {
                line,
                msg: e.to_string(),
            })?,
            _ => {
                return Err(Error::EdgeList {
                    line,
                    msg: format!("expected `u v`, found {text:?}"),
                })
            }
        }
    }
    Ok(g)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn known_encodings() {
        // values produced by nauty's geng / showg conventions
        assert_eq!(Graph::empty(0).unwrap().to_graph6(), "?");
        assert_eq!(
            Graph::from_edge_list(2, &[(0, 1)]).unwrap().to_graph6(),
            "A_"
        );
        let p3 = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.to_graph6(), "Bg");
        let k4 =
            Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.to_graph6(), "C~");
        // the worked example from the format description
        let ex = Graph::from_edge_list(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(ex.to_graph6(), "DQc");
    }

    #[test]
    fn decode_examples() {
        let g = Graph::from_graph6("DQc").unwrap();
        assert_eq!(g.edges(), vec![(0, 2), (0, 4), (1, 3), (3, 4)]);
        let h = Graph::from_graph6(">>graph6<<DQc\n").unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn decode_errors() {
        assert!(matches!(Graph::from_graph6(""), Err(Error::Graph6 { .. })));
        assert!(matches!(Graph::from_graph6("D"), Err(Error::Graph6 { .. })));
        assert!(matches!(
            Graph::from_graph6("DQcc"),
            Err(Error::Graph6 { .. })
        ));
        assert!(matches!(
            Graph::from_graph6("D Qc"),
            Err(Error::Graph6 { .. })
        ));
        // "Bh" sets a padding bit for n = 3
        assert!(matches!(
            Graph::from_graph6("Bh"),
            Err(Error::Graph6 { .. })
        ));
    }

    #[test]
    fn large_vertex_counts_use_long_prefix() {
        let n = 64;
        let edges: Vec<_> = (0..n - 1).map(|v| (v, v + 1)).collect();
        let path = Graph::from_edge_list(n, &edges).unwrap();
        let s = path.to_graph6();
        assert!(s.starts_with('~'));
        assert_eq!(Graph::from_graph6(&s).unwrap(), path);
    }

    #[test]
    fn edge_list_format() {
        let g = parse_edge_list("3\n0 1\n# comment\n\n1 2\n").unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
        assert!(matches!(
            parse_edge_list("3\n0 1\n1 x\n"),
            Err(Error::EdgeList { line: 3, .. })
        ));
        assert!(matches!(
            parse_edge_list("3\n0 3\n"),
            Err(Error::EdgeList { line: 2, .. })
        ));
        assert!(matches!(parse_edge_list(""), Err(Error::EdgeList { .. })));
    }

    proptest! {
        #[test]
        fn graph6_round_trip(n in 0usize..=20, bits in proptest::collection::vec(any::<bool>(), 190)) {
            let mut g = Graph::empty(n).unwrap();
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[k] { g.add_edge(i, j).unwrap(); }
                    k += 1;
                }
            }
            prop_assert_eq!(Graph::from_graph6(&g.to_graph6()).unwrap(), g);
        }
    }
}
