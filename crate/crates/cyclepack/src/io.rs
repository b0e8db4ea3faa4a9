//! Canonical text formats: the edge-list format used by every command in
//! this crate, and DOT export for visualization.
//!
//! Edge-list format: first line `n m` (vertex count, arc count), then `m`
//! lines `u v` with 0-based vertex IDs, newline-terminated. On output the
//! arcs are sorted lexicographically, so the representation of a digraph
//! is unique.

use std::io::{BufRead, Write};

use thiserror::Error;

use crate::digraph::{BuildError, Digraph, DigraphBuilder};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: {source}")]
    Arc {
        line: usize,
        #[source]
        source: BuildError,
    },
    #[error("header declares {declared} arcs but {found} arc lines follow")]
    ArcCountMismatch { declared: usize, found: usize },
    #[error("read failed: {0}")]
    Io(#[from] std::io::Error),
}

/// Parse the canonical edge-list format.
pub fn parse_edge_list(text: &str) -> Result<Digraph, ParseError> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or(ParseError::Malformed {
        line: 1,
        message: "missing `n m` header line".into(),
    })?;
    let (n, m) = parse_pair(header, 1)?;
    let mut builder = DigraphBuilder::new(n);
    let mut found = 0usize;
    for (idx, line) in lines {
        if line.trim().is_empty() {
            continue;
        }
        let lineno = idx + 1;
        let (u, v) = parse_pair(line, lineno)?;
        builder.add_arc(u, v).map_err(|source| ParseError::Arc {
            line: lineno,
            source,
        })?;
        found += 1;
    }
    if found != m {
        return Err(ParseError::ArcCountMismatch { declared: m, found });
    }
    Ok(builder.build())
}

/// Read the edge-list format from any buffered reader.
pub fn read_edge_list<R: BufRead>(mut reader: R) -> Result<Digraph, ParseError> {
    let mut text = String::new();
    reader.read_to_string(&mut text)?;
    parse_edge_list(&text)
}

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize), ParseError> {
    let mut parts = line.split_whitespace();
    let mut next = |what: &str| -> Result<usize, ParseError> {
        parts
            .next()
            .ok_or_else(|| ParseError::Malformed {
                line: lineno,
                message: format!("missing {what}"),
            })?
            .parse()
            .map_err(|_| ParseError::Malformed {
                line: lineno,
                message: format!("{what} is not a non-negative integer"),
            })
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if parts.next().is_some() {
        return Err(ParseError::Malformed {
            line: lineno,
            message: "expected exactly two fields".into(),
        });
    }
    Ok((a, b))
}

/// Canonical edge-list text: header then lexicographically sorted arcs,
/// newline-terminated.
pub fn to_edge_list(d: &Digraph) -> String {
    let mut out = String::new();
    out.push_str(&format!("{} {}\n", d.vertex_count(), d.arc_count()));
    for (u, v) in d.arcs() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn write_edge_list<W: Write>(d: &Digraph, mut writer: W) -> std::io::Result<()> {
    writer.write_all(to_edge_list(d).as_bytes())
}

/// DOT export: a single `digraph` block, vertices as bare integers, one
/// edge statement per arc, arcs in lexicographic order.
pub fn to_dot(d: &Digraph) -> String {
    let mut out = String::from("digraph {\n");
    for v in 0..d.vertex_count() {
        out.push_str(&format!("  {v};\n"));
    }
    for (u, v) in d.arcs() {
        out.push_str(&format!("  {u} -> {v};\n"));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_is_canonical() {
        let d = Digraph::from_arcs(4, [(3, 0), (0, 1), (1, 0), (2, 3)]).unwrap();
        let text = to_edge_list(&d);
        assert_eq!(text, "4 4\n0 1\n1 0\n2 3\n3 0\n");
        let back = parse_edge_list(&text).unwrap();
        assert_eq!(to_edge_list(&back), text);
    }

    #[test]
    fn parses_isolated_vertices_and_empty() {
        let d = parse_edge_list("3 0\n").unwrap();
        assert_eq!(d.vertex_count(), 3);
        assert_eq!(d.arc_count(), 0);
        let e = parse_edge_list("0 0\n").unwrap();
        assert_eq!(e.vertex_count(), 0);
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("2\n").is_err());
        assert!(parse_edge_list("2 1\n0 1\n1 0\n").is_err()); // count mismatch
        assert!(parse_edge_list("2 1\n0 0\n").is_err()); // self-loop
        assert!(parse_edge_list("2 2\n0 1\n0 1\n").is_err()); // parallel
        assert!(parse_edge_list("2 1\n0 2\n").is_err()); // out of range
        assert!(parse_edge_list("2 1\n0 x\n").is_err());
    }

    #[test]
    fn dot_block_lists_vertices_then_arcs() {
        let d = Digraph::from_arcs(3, [(1, 2), (0, 1)]).unwrap();
        assert_eq!(
            to_dot(&d),
            "digraph {\n  0;\n  1;\n  2;\n  0 -> 1;\n  1 -> 2;\n}\n"
        );
    }
}
