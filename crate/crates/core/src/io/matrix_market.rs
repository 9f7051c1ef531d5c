//! Matrix Market coordinate files read as adjacency patterns.
//!
//! Accepted banners: `coordinate` with field `pattern`, `real` or `integer`
//! and symmetry `general` or `symmetric`. Values are ignored and diagonal
//! entries dropped.

use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::graph::{EdgeList, Graph, VertexId};

use super::parse_id;

pub fn parse_matrix_market<R: BufRead>(reader: R) -> Result<EdgeList> {
    let mut lines = reader.lines();
    let mut line_no = 1;

    let banner = lines
        .next()
        .transpose()?
        .ok_or_else(|| Error::format(1, "empty input, expected %%MatrixMarket banner"))?;
    check_banner(&banner)?;

    let mut size: Option<(usize, usize)> = None;
    let mut el = EdgeList::default();
    let mut seen = 0usize;

    for line in lines {
        line_no += 1;
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('%') {
            continue;
        }
        let mut tokens = trimmed.split_ascii_whitespace();
        match size {
            None => {
                let rows = parse_id(tokens.next(), line_no)? as usize;
                let cols = parse_id(tokens.next(), line_no)? as usize;
                let nnz = parse_id(tokens.next(), line_no)? as usize;
                if rows != cols {
                    return Err(Error::format(
                        line_no,
                        format!("adjacency matrix must be square, got {rows}x{cols}"),
                    ));
                }
                el = EdgeList::new(rows);
                el.edges.reserve(nnz);
                size = Some((rows, nnz));
            }
            Some((n, nnz)) => {
                if seen == nnz {
                    return Err(Error::format(line_no, format!("more than {nnz} entries")));
                }
                seen += 1;
                let i = parse_id(tokens.next(), line_no)?;
                let j = parse_id(tokens.next(), line_no)?;
                for id in [i, j] {
                    if id == 0 || id > n as u64 {
                        return Err(Error::format(
                            line_no,
                            format!("index {id} outside 1..={n}"),
                        ));
                    }
                }
                if i != j {
                    el.push((i - 1) as VertexId, (j - 1) as VertexId);
                }
            }
        }
    }

    match size {
        None => Err(Error::format(line_no, "missing size line")),
        Some((_, nnz)) if seen < nnz => Err(Error::format(
            line_no,
            format!("expected {nnz} entries, found {seen}"),
        )),
        Some(_) => Ok(el),
    }
}

fn check_banner(banner: &str) -> Result<()> {
    let tokens: Vec<String> = banner
        .split_ascii_whitespace()
        .map(|t| t.to_ascii_lowercase())
        .collect();
    if tokens.first().map(String::as_str) != Some("%%matrixmarket") || tokens.len() < 5 {
        return Err(Error::format(1, "missing %%MatrixMarket banner"));
    }
    if tokens[1] != "matrix" {
        return Err(Error::Unsupported(format!("matrix market object `{}`", tokens[1])));
    }
    if tokens[2] != "coordinate" {
        return Err(Error::Unsupported(format!("matrix market format `{}`", tokens[2])));
    }
    if !matches!(tokens[3].as_str(), "pattern" | "real" | "integer") {
        return Err(Error::Unsupported(format!("matrix market field `{}`", tokens[3])));
    }
    if !matches!(tokens[4].as_str(), "general" | "symmetric") {
        return Err(Error::Unsupported(format!("matrix market symmetry `{}`", tokens[4])));
    }
    Ok(())
}

/// Writes the lower triangle as a symmetric pattern matrix.
pub fn write_matrix_market<W: Write>(g: &Graph, mut out: W) -> Result<()> {
    writeln!(out, "%%MatrixMarket matrix coordinate pattern symmetric")?;
    writeln!(out, "{} {} {}", g.n(), g.n(), g.m())?;
    for (u, v) in g.edges() {
        writeln!(out, "{} {}", v + 1, u + 1)?;
    }
    out.flush()?;
    Ok(())
}
