//! graph6 and DOT encodings.
//!
//! graph6 follows the standard layout: a size prefix (one byte for orders up to
//! 62, `~` plus three bytes up to 258047, `~~` plus six bytes beyond), then the
//! upper triangle column by column, six bits per printable byte.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(8 + n * n / 12);
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
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
    // all bytes are in 63..=126
    String::from_utf8(out).expect("graph6 is ASCII")
}

pub fn from_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Parse(format!("byte {b:#04x} is not valid graph6")));
    }
    let (n, body) = match bytes {
        [126, 126, rest @ ..] => (decode_size(rest, 6)?, &rest[6..]),
        [126, rest @ ..] => (decode_size(rest, 3)?, &rest[3..]),
        [first, rest @ ..] => ((first - 63) as usize, rest),
        [] => return Err(Error::Parse("empty graph6 string".into())),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Parse(format!(
            "graph6 body for order {n} needs {expected} bytes, found {}",
            body.len()
        )));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.set_edge(i, j);
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let pad = body[body.len() - 1] - 63;
        if pad & ((1 << (6 - bits % 6)) - 1) != 0 {
            return Err(Error::Parse("non-zero padding bits in graph6".into()));
        }
    }
    Ok(g)
}

fn decode_size(bytes: &[u8], len: usize) -> Result<usize> {
    if bytes.len() < len {
        return Err(Error::Parse("truncated graph6 size prefix".into()));
    }
    Ok(bytes[..len]
        .iter()
        .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize))
}

/// DOT text: every vertex on its own line, then every edge `u -- v` with `u < v`.
pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph {\n");
    for v in 0..g.order() {
        let _ = writeln!(out, "  {v};");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

/// Parses the DOT subset written by [`to_dot`].
pub fn from_dot(text: &str) -> Result<Graph> {
    let body = text
        .trim()
        .strip_prefix("graph")
        .map(str::trim_start)
        .and_then(|s| s.strip_prefix('{'))
        .and_then(|s| s.strip_suffix('}'))
        .ok_or_else(|| Error::Parse("expected `graph { ... }`".into()))?;
    let mut order = 0;
    let mut edges = Vec::new();
    let parse = |s: &str| {
        s.trim()
            .parse::<usize>()
            .map_err(|_| Error::Parse(format!("bad vertex id `{}`", s.trim())))
    };
    for stmt in body.split(';').map(str::trim).filter(|s| !s.is_empty()) {
        if let Some((a, b)) = stmt.split_once("--") {
            let (u, v) = (parse(a)?, parse(b)?);
            order = order.max(u + 1).max(v + 1);
            edges.push((u, v));
        } else {
            order = order.max(parse(stmt)? + 1);
        }
    }
    Graph::from_edges(order, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_strings() {
        assert_eq!(to_graph6(&Graph::empty(0).unwrap()), "?");
        assert_eq!(to_graph6(&Graph::complete(4).unwrap()), "C~");
        // path 0-1-2-3-4 in the usual graph6 tables
        let p5 = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&p5), "DhC");
        assert_eq!(from_graph6("DhC").unwrap(), p5);
        assert_eq!(from_graph6(">>graph6<<C~\n").unwrap(), Graph::complete(4).unwrap());
    }

    #[test]
    fn long_form_round_trip() {
        let g = Graph::circulant_regular(100, 5).unwrap();
        let s = to_graph6(&g);
        assert_eq!(s.as_bytes()[0], 126);
        assert_eq!(from_graph6(&s).unwrap(), g);

        let big = Graph::circulant_regular(4096, 3).unwrap();
        assert_eq!(from_graph6(&to_graph6(&big)).unwrap(), big);
    }

    #[test]
    fn rejects_malformed() {
        assert!(from_graph6("").is_err());
        assert!(from_graph6("C").is_err());
        assert!(from_graph6("C~~").is_err());
        assert!(from_graph6("C\u{7f}").is_err());
        // order 2 has one bit; the remaining five must be zero
        assert!(from_graph6("A_").is_ok());
        assert!(from_graph6("A`").is_err());
    }

    #[test]
    fn dot_round_trip_keeps_isolated_vertices() {
        let g = Graph::from_edges(5, [(0, 3), (1, 2)]).unwrap();
        let text = to_dot(&g);
        assert!(text.contains("  4;\n"));
        assert_eq!(from_dot(&text).unwrap(), g);
        assert_eq!(to_dot(&from_dot(&text).unwrap()), text);
    }
}
