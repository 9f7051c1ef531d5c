//! DIMACS ASCII clique format: `c` comments, one `p edge <n> <m>` header,
//! `e <u> <v>` edge lines with 1-based ids.

use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::graph::{EdgeList, Graph, VertexId};

use super::parse_id;

pub fn parse_dimacs<R: BufRead>(reader: R) -> Result<EdgeList> {
    let mut list: Option<EdgeList> = None;
    let mut line_no = 0;

    for line in reader.lines() {
        line_no += 1;
        let line = line?;
        let mut tokens = line.split_ascii_whitespace();
        let Some(kind) = tokens.next() else {
            continue;
        };
        match kind {
            "c" => {}
            "p" => {
                if list.is_some() {
                    return Err(Error::format(line_no, "duplicate `p` line"));
                }
                match tokens.next() {
                    Some("edge" | "col" | "edges") => {}
                    Some(other) => {
                        return Err(Error::format(
                            line_no,
                            format!("unknown problem type `{other}`"),
                        ))
                    }
                    None => return Err(Error::format(line_no, "truncated `p` line")),
                }
                let n = parse_id(tokens.next(), line_no)?;
                let m = parse_id(tokens.next(), line_no)?;
                let mut el = EdgeList::new(n as usize);
                el.edges.reserve(m as usize);
                list = Some(el);
            }
            "e" => {
                let Some(el) = list.as_mut() else {
                    return Err(Error::format(line_no, "edge before `p` line"));
                };
                let u = parse_id(tokens.next(), line_no)?;
                let v = parse_id(tokens.next(), line_no)?;
                for id in [u, v] {
                    if id == 0 || id > el.n as u64 {
                        return Err(Error::format(
                            line_no,
                            format!("vertex {id} outside 1..={}", el.n),
                        ));
                    }
                }
                el.push((u - 1) as VertexId, (v - 1) as VertexId);
            }
            // vertex weights / descriptors carry nothing for unweighted cliques
            "n" | "x" | "d" | "v" => {}
            other => {
                return Err(Error::format(
                    line_no,
                    format!("unexpected line type `{other}`"),
                ))
            }
        }
    }

    list.ok_or_else(|| Error::format(line_no.max(1), "missing `p` line"))
}

pub fn write_dimacs<W: Write>(g: &Graph, mut out: W) -> Result<()> {
    writeln!(out, "p edge {} {}", g.n(), g.m())?;
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1)?;
    }
    out.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(text: &str) -> Result<EdgeList> {
        parse_dimacs(text.as_bytes())
    }

    #[test]
    fn triangle() {
        let el = parse("c tiny\np edge 3 3\ne 1 2\ne 1 3\ne 2 3\n").unwrap();
        assert_eq!(el.n, 3);
        assert_eq!(el.edges, vec![(0, 1), (0, 2), (1, 2)]);
        let g = el.normalize().unwrap();
        assert_eq!(g.m(), 3);
    }

    #[test]
    fn id_beyond_header_is_reported_with_line() {
        let err = parse("p edge 2 1\ne 3 1\n").unwrap_err();
        match err {
            Error::Format { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn zero_id_rejected() {
        assert!(matches!(
            parse("p edge 2 1\ne 0 1\n"),
            Err(Error::Format { line: 2, .. })
        ));
    }

    #[test]
    fn header_errors() {
        assert!(matches!(parse("e 1 2\n"), Err(Error::Format { line: 1, .. })));
        assert!(matches!(parse("c nothing\n"), Err(Error::Format { .. })));
        assert!(matches!(
            parse("p edge 2 1\np edge 2 1\n"),
            Err(Error::Format { line: 2, .. })
        ));
        assert!(matches!(
            parse("p edge x 1\n"),
            Err(Error::Format { line: 1, .. })
        ));
    }

    #[test]
    fn writer_is_byte_stable() {
        let g = parse("c x\np edge 4 3\ne 2 1\ne 3 4\ne 1 3\n")
            .unwrap()
            .normalize()
            .unwrap();
        let mut first = Vec::new();
        write_dimacs(&g, &mut first).unwrap();
        let again = parse_dimacs(first.as_slice()).unwrap().normalize().unwrap();
        let mut second = Vec::new();
        write_dimacs(&again, &mut second).unwrap();
        assert_eq!(first, second);
        assert_eq!(
            String::from_utf8(first).unwrap(),
            "p edge 4 3\ne 1 2\ne 1 3\ne 3 4\n"
        );
    }
}
