//! Exact maximum clique of a graph file.
//!
//! cargo run --release --example solve_file -- data/graphs/petersen.clq

use std::path::PathBuf;

use maxclique::io::read_graph;
use maxclique::{max_clique, verify_clique, SolverConfig};

fn main() -> maxclique::Result<()> {
    let path = std::env::args_os()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/graphs/petersen.clq")));
    let g = read_graph(&path, None)?;
    println!("{}: n={} m={} max degree={}", path.display(), g.n(), g.m(), g.max_degree());

    let r = max_clique(&g, &SolverConfig::default());
    assert!(verify_clique(&g, &r.witness));
    println!("clique number {} witness {:?} in {:.3}s", r.size, r.witness, r.elapsed);
    println!("{}", serde_json::to_string_pretty(&r)?);
    Ok(())
}
