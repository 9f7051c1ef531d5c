//! Runs a benchmark manifest and prints the CSV rows.
//!
//! cargo run --release --example benchmark_manifest -- data/bench/rmat.txt

use std::path::{Path, PathBuf};

use maxclique::bench::{parse_manifest, run_manifest, write_csv};

fn main() -> maxclique::Result<()> {
    let path = std::env::args_os()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/bench/dimacs5.txt")));
    let text = std::fs::read_to_string(&path)?;
    let entries = parse_manifest(&text, path.parent().unwrap_or(Path::new(".")))?;
    let rows = run_manifest(&entries);
    write_csv(&rows, std::io::stdout().lock())
}
