//! Graph file formats.

mod dimacs;
mod edge_list;
mod matrix_market;

use std::fmt;
use std::fs::File;
use std::io::{BufReader, BufWriter};
use std::path::Path;
use std::str::FromStr;

pub use dimacs::{parse_dimacs, write_dimacs};
pub use edge_list::{parse_edge_list, write_edge_list, IndexBase};
pub use matrix_market::{parse_matrix_market, write_matrix_market};

use crate::error::{Error, Result};
use crate::graph::{EdgeList, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    /// DIMACS `.clq` ASCII.
    Dimacs,
    /// 0-based whitespace-separated pairs.
    EdgeList,
    /// 1-based whitespace-separated pairs.
    EdgeList1,
    MatrixMarket,
}

impl Format {
    pub const ALL: [Format; 4] = [
        Format::Dimacs,
        Format::EdgeList,
        Format::EdgeList1,
        Format::MatrixMarket,
    ];

    /// Guesses the format from a file extension.
    pub fn from_path(path: &Path) -> Option<Format> {
        let ext = path.extension()?.to_str()?.to_ascii_lowercase();
        match ext.as_str() {
            "clq" | "col" | "dimacs" => Some(Format::Dimacs),
            "mtx" => Some(Format::MatrixMarket),
            "txt" | "el" | "edges" | "tsv" => Some(Format::EdgeList),
            _ => None,
        }
    }

    pub fn parse<R: std::io::BufRead>(self, reader: R) -> Result<EdgeList> {
        match self {
            Format::Dimacs => parse_dimacs(reader),
            Format::EdgeList => parse_edge_list(reader, IndexBase::Zero),
            Format::EdgeList1 => parse_edge_list(reader, IndexBase::One),
            Format::MatrixMarket => parse_matrix_market(reader),
        }
    }

    pub fn write<W: std::io::Write>(self, g: &Graph, out: W) -> Result<()> {
        match self {
            Format::Dimacs => write_dimacs(g, out),
            Format::EdgeList => write_edge_list(g, out, IndexBase::Zero),
            Format::EdgeList1 => write_edge_list(g, out, IndexBase::One),
            Format::MatrixMarket => write_matrix_market(g, out),
        }
    }
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "dimacs" | "clq" => Ok(Format::Dimacs),
            "edgelist" | "edge-list" | "el" | "snap" => Ok(Format::EdgeList),
            "edgelist1" | "edge-list-1" => Ok(Format::EdgeList1),
            "mtx" | "matrix-market" | "mm" => Ok(Format::MatrixMarket),
            other => Err(Error::Unsupported(format!("format `{other}`"))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Dimacs => "dimacs",
            Format::EdgeList => "edgelist",
            Format::EdgeList1 => "edgelist1",
            Format::MatrixMarket => "mtx",
        })
    }
}

/// Reads and normalizes a graph file. Without an explicit format the file
/// extension decides.
pub fn read_graph(path: impl AsRef<Path>, format: Option<Format>) -> Result<Graph> {
    let path = path.as_ref();
    let format = match format.or_else(|| Format::from_path(path)) {
        Some(f) => f,
        None => {
            return Err(Error::Unsupported(format!(
                "cannot infer format of {}",
                path.display()
            )))
        }
    };
    let reader = BufReader::new(File::open(path)?);
    format.parse(reader)?.normalize()
}

pub fn write_graph(g: &Graph, path: impl AsRef<Path>, format: Format) -> Result<()> {
    let out = BufWriter::new(File::create(path)?);
    format.write(g, out)
}

pub(crate) fn parse_id(token: Option<&str>, line: usize) -> Result<u64> {
    let token = token.ok_or_else(|| Error::format(line, "missing field"))?;
    token
        .parse()
        .map_err(|_| Error::format(line, format!("`{token}` is not a non-negative integer")))
}
