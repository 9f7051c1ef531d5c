//! Reading the supported formats and converting between them.

use maxclique::io::{parse_dimacs, parse_edge_list, parse_matrix_market, Format, IndexBase};

fn main() -> maxclique::Result<()> {
    let dimacs = "c triangle\np edge 3 3\ne 1 2\ne 1 3\ne 2 3\n";
    let mtx = "%%MatrixMarket matrix coordinate real general\n3 3 4\n1 2 0.5\n2 1 0.5\n3 1 1.0\n3 3 9.0\n";
    let snap = "# Nodes: 4 Edges: 2\n0\t1\n1\t2\n";

    let k3 = parse_dimacs(dimacs.as_bytes())?.normalize()?;
    // values are ignored, both orientations collapse and the diagonal is dropped
    let from_mtx = parse_matrix_market(mtx.as_bytes())?.normalize()?;
    // the header keeps vertex 3 although it has no edges
    let path = parse_edge_list(snap.as_bytes(), IndexBase::Zero)?.normalize()?;
    for (name, g) in [("dimacs", &k3), ("matrix market", &from_mtx), ("edge list", &path)] {
        println!("{name:<14} n={} m={} edges={:?}", g.n(), g.m(), g.edges().collect::<Vec<_>>());
    }

    for format in Format::ALL {
        let mut buf = Vec::new();
        format.write(&k3, &mut buf)?;
        assert_eq!(format.parse(buf.as_slice())?.normalize()?, k3);
        println!("--- {format}\n{}", String::from_utf8_lossy(&buf));
    }

    match parse_dimacs("p edge 2 1\ne 3 1\n".as_bytes()) {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
