//! Text formats: graph6 (short form, up to 62 vertices) and a plain edge list.
//!
//! graph6 writes `N(n)` as the byte `n + 63`, followed by the upper-triangle
//! adjacency bits `x(0,1) x(0,2) x(1,2) x(0,3) ...` packed six to a byte,
//! most significant first, each byte offset by 63 and the last one padded
//! with zero bits.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

/// Largest order expressible in the one-byte graph6 header.
pub const GRAPH6_MAX_ORDER: usize = 62;

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("empty graph6 string")]
    Empty,
    #[error("graph6 long form (n > {GRAPH6_MAX_ORDER}) is not supported")]
    LongForm,
    #[error("invalid graph6 header byte {0:#04x}")]
    BadHeader(u8),
    #[error("invalid graph6 data byte {byte:#04x} at offset {offset}")]
    BadByte { offset: usize, byte: u8 },
    #[error("truncated graph6 payload: expected {expected} data bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing data after graph6 payload ({0} extra bytes)")]
    Trailing(usize),
    #[error("non-zero padding bits in the last graph6 byte")]
    Padding,
    #[error("graph on {0} vertices cannot be written as short-form graph6")]
    TooLarge(usize),
    #[error("edge list line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn payload_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Encodes a graph as a short-form graph6 string (no newline).
pub fn emit_graph6(g: &Graph) -> Result<String, FormatError> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(FormatError::TooLarge(n));
    }
    let mut out = Vec::with_capacity(1 + payload_len(n));
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

/// Decodes one graph6 line. A single trailing newline and the optional
/// `>>graph6<<` prefix are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, FormatError> {
    let text = text
        .strip_suffix('\n')
        .map(|t| t.strip_suffix('\r').unwrap_or(t))
        .unwrap_or(text);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    let (&head, data) = bytes.split_first().ok_or(FormatError::Empty)?;
    let n = match head {
        126 => return Err(FormatError::LongForm),
        63..=125 => (head - 63) as usize,
        _ => return Err(FormatError::BadHeader(head)),
    };
    let expected = payload_len(n);
    if let Some((i, &b)) = data
        .iter()
        .enumerate()
        .find(|(_, &b)| !(63..=126).contains(&b))
    {
        return Err(FormatError::BadByte {
            offset: i + 1,
            byte: b,
        });
    }
    if data.len() < expected {
        return Err(FormatError::Truncated {
            expected,
            found: data.len(),
        });
    }
    if data.len() > expected {
        return Err(FormatError::Trailing(data.len() - expected));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let pad = expected * 6 - nbits;
    if pad > 0 && (data[expected - 1] - 63) & ((1u8 << pad) - 1) != 0 {
        return Err(FormatError::Padding);
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let chunk = data[k / 6] - 63;
            if chunk & (1 << (5 - k % 6)) != 0 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::from_edges(n, edges)?)
}

/// Parses the edge-list format: a header line `n m`, then `m` lines `u v`.
/// Blank lines and lines starting with `#` are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let err = |line: usize, message: &str| FormatError::EdgeList {
        line,
        message: message.to_string(),
    };
    let (hline, header) = lines.next().ok_or_else(|| err(1, "missing `n m` header"))?;
    let (n, m) = two_numbers(header).ok_or_else(|| err(hline, "expected `n m`"))?;
    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines {
        let pair = two_numbers(l).ok_or_else(|| err(line, "expected `u v`"))?;
        edges.push(pair);
    }
    if edges.len() != m {
        return Err(err(
            hline,
            &format!("header announces {m} edges but {} were listed", edges.len()),
        ));
    }
    Ok(Graph::from_edges(n, edges)?)
}

fn two_numbers(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_whitespace().map(str::parse::<usize>);
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Some((a, b)),
        _ => None,
    }
}

/// Writes the edge-list format accepted by [`parse_edge_list`].
pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k1_is_at_sign() {
        assert_eq!(emit_graph6(&Graph::empty(1).unwrap()).unwrap(), "@");
        assert_eq!(emit_graph6(&Graph::empty(0).unwrap()).unwrap(), "?");
    }

    #[test]
    fn triangle_is_bw() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(emit_graph6(&k3).unwrap(), "Bw");
        assert_eq!(parse_graph6("Bw\n").unwrap(), k3);
    }

    #[test]
    fn star_at_last_vertex() {
        let g = parse_graph6("D?{").unwrap();
        let star = Graph::from_edges(5, (0..4).map(|i| (i, 4))).unwrap();
        assert_eq!(g, star);
        assert_eq!(emit_graph6(&g).unwrap(), "D?{");
    }

    #[test]
    fn header_prefix_accepted() {
        assert_eq!(
            parse_graph6(">>graph6<<Bw").unwrap(),
            Graph::complete(3).unwrap()
        );
    }

    #[test]
    fn malformed_inputs() {
        assert_eq!(parse_graph6(""), Err(FormatError::Empty));
        assert_eq!(parse_graph6("\n"), Err(FormatError::Empty));
        assert_eq!(parse_graph6("~?@"), Err(FormatError::LongForm));
        assert_eq!(parse_graph6(" "), Err(FormatError::BadHeader(b' ')));
        assert_eq!(
            parse_graph6("D?"),
            Err(FormatError::Truncated {
                expected: 2,
                found: 1
            })
        );
        assert_eq!(parse_graph6("Bw?"), Err(FormatError::Trailing(1)));
        assert_eq!(parse_graph6("Bx"), Err(FormatError::Padding));
        assert!(matches!(
            parse_graph6("D? "),
            Err(FormatError::BadByte { offset: 2, .. })
        ));
    }

    #[test]
    fn refuses_long_form_emission() {
        let g = Graph::path(63).unwrap();
        assert_eq!(emit_graph6(&g), Err(FormatError::TooLarge(63)));
        assert!(emit_graph6(&Graph::path(62).unwrap()).is_ok());
    }

    #[test]
    fn edge_list_round_trip() {
        let text = "# path\n3 2\n0 1\n1 2\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g, Graph::path(3).unwrap());
        assert_eq!(parse_edge_list(&emit_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(
            parse_edge_list(""),
            Err(FormatError::EdgeList { .. })
        ));
        assert!(matches!(
            parse_edge_list("3 2\n0 1\n"),
            Err(FormatError::EdgeList { .. })
        ));
        assert!(matches!(
            parse_edge_list("3 1\n0 x\n"),
            Err(FormatError::EdgeList { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("3 1\n0 3\n"),
            Err(FormatError::Graph(_))
        ));
    }
}
