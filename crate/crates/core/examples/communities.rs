//! Overlapping communities from wall/user interaction records.
//!
//! cargo run --example communities -- data/records.tsv 0.5

use std::fs::File;
use std::io::BufReader;
use std::path::PathBuf;

use maxclique::community::{build_cooccurrence_graph, communities_from_records, InteractionRecords};

fn main() -> maxclique::Result<()> {
    let mut args = std::env::args().skip(1);
    let path = args
        .next()
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/records.tsv")));
    let threshold: f64 = args.next().map_or(0.5, |s| s.parse().expect("threshold"));

    let records = InteractionRecords::parse(BufReader::new(File::open(&path)?))?;
    let walls = records.walls();
    let weighted = build_cooccurrence_graph(&records);
    println!("{} records, {} walls, {} co-occurrence edges", records.len(), walls.len(), weighted.graph.m());
    for (u, v, w) in weighted.edges() {
        println!("  {:<8} {:<8} {w:.3}", walls[u as usize], walls[v as usize]);
    }

    let report = communities_from_records(&records, threshold);
    println!("communities above {threshold}:");
    for c in &report.communities {
        let names: Vec<&str> = c.iter().map(|&v| walls[v as usize].as_str()).collect();
        println!("  {}", names.join(", "));
    }
    Ok(())
}
