//! Whitespace-separated vertex pairs, SNAP style. Lines starting with `#` or
//! `%` are comments. A `# Nodes: <n> Edges: <m>` comment fixes the vertex
//! count; otherwise it is inferred as one past the largest id.

use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::graph::{EdgeList, Graph, VertexId};

use super::parse_id;

/// Id base of an edge-list file.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum IndexBase {
    #[default]
    Zero,
    One,
}

impl IndexBase {
    fn offset(self) -> u64 {
        match self {
            IndexBase::Zero => 0,
            IndexBase::One => 1,
        }
    }
}

pub fn parse_edge_list<R: BufRead>(reader: R, base: IndexBase) -> Result<EdgeList> {
    let mut declared: Option<usize> = None;
    let mut edges = Vec::new();
    let mut max_id: Option<u64> = None;
    let mut line_no = 0;

    for line in reader.lines() {
        line_no += 1;
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(comment) = trimmed.strip_prefix('#').or_else(|| trimmed.strip_prefix('%')) {
            if let Some(n) = nodes_header(comment) {
                declared = Some(n);
            }
            continue;
        }
        let mut tokens = trimmed.split(|c: char| c.is_ascii_whitespace() || c == ',');
        let mut next = || tokens.by_ref().find(|t| !t.is_empty());
        let u = parse_id(next(), line_no)?;
        let v = parse_id(next(), line_no)?;
        for id in [u, v] {
            if id < base.offset() {
                return Err(Error::format(line_no, format!("vertex {id} below 1-based range")));
            }
        }
        let (u, v) = (u - base.offset(), v - base.offset());
        if u.max(v) >= VertexId::MAX as u64 {
            return Err(Error::format(line_no, "vertex id too large"));
        }
        if let Some(n) = declared {
            if u.max(v) >= n as u64 {
                return Err(Error::format(
                    line_no,
                    format!("vertex {} exceeds declared {n} nodes", u.max(v) + base.offset()),
                ));
            }
        }
        max_id = max_id.max(Some(u.max(v)));
        edges.push((u as VertexId, v as VertexId));
    }

    let inferred = max_id.map_or(0, |m| m as usize + 1);
    Ok(EdgeList {
        n: declared.unwrap_or(inferred).max(inferred),
        edges,
    })
}

/// Recognizes `Nodes: <n> Edges: <m>` (case-insensitive keys).
fn nodes_header(comment: &str) -> Option<usize> {
    let mut tokens = comment.split_ascii_whitespace();
    while let Some(tok) = tokens.next() {
        if tok.eq_ignore_ascii_case("nodes:") {
            return tokens.next()?.parse().ok();
        }
    }
    None
}

pub fn write_edge_list<W: Write>(g: &Graph, mut out: W, base: IndexBase) -> Result<()> {
    writeln!(out, "# Nodes: {} Edges: {}", g.n(), g.m())?;
    let off = base.offset();
    for (u, v) in g.edges() {
        writeln!(out, "{}\t{}", u as u64 + off, v as u64 + off)?;
    }
    out.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_on_three_vertices() {
        let el = parse_edge_list("0 1\n1 2".as_bytes(), IndexBase::Zero).unwrap();
        assert_eq!(el.n, 3);
        assert_eq!(el.edges, vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn n_inferred_from_max_id() {
        let el = parse_edge_list("# comment\n5 7".as_bytes(), IndexBase::Zero).unwrap();
        assert_eq!(el.n, 8);
        assert_eq!(el.normalize().unwrap().m(), 1);
    }

    #[test]
    fn non_numeric_rejected() {
        assert!(matches!(
            parse_edge_list("a b".as_bytes(), IndexBase::Zero),
            Err(Error::Format { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("0 1\n3".as_bytes(), IndexBase::Zero),
            Err(Error::Format { line: 2, .. })
        ));
    }

    #[test]
    fn one_based_and_snap_header() {
        let text = "# Directed graph\n# Nodes: 5 Edges: 1\n1\t2\n";
        let el = parse_edge_list(text.as_bytes(), IndexBase::One).unwrap();
        assert_eq!(el.n, 5);
        assert_eq!(el.edges, vec![(0, 1)]);
        assert!(parse_edge_list("0 1".as_bytes(), IndexBase::One).is_err());
        assert!(parse_edge_list("# Nodes: 2\n0 2".as_bytes(), IndexBase::Zero).is_err());
    }

    #[test]
    fn header_keeps_trailing_isolated_vertices() {
        let g = Graph::from_edges(6, [(0, 1)]).unwrap();
        let mut buf = Vec::new();
        write_edge_list(&g, &mut buf, IndexBase::Zero).unwrap();
        let back = parse_edge_list(buf.as_slice(), IndexBase::Zero)
            .unwrap()
            .normalize()
            .unwrap();
        assert_eq!(back, g);
    }
}
