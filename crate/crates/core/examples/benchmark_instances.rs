//! The built-in structured DIMACS instances and their structure.
//!
//! cargo run --release --example benchmark_instances -- out_dir

use maxclique::families::{dimacs_instance, DIMACS_NAMES};
use maxclique::io::{write_graph, Format};

fn main() -> maxclique::Result<()> {
    let out = std::env::args_os().nth(1).map(std::path::PathBuf::from);
    println!("{:<14} {:>5} {:>7} {:>5}", "name", "n", "m", "Δ");
    for name in DIMACS_NAMES {
        let g = dimacs_instance(name).expect("listed instance");
        println!("{name:<14} {:>5} {:>7} {:>5}", g.n(), g.m(), g.max_degree());
        if let Some(dir) = &out {
            std::fs::create_dir_all(dir)?;
            write_graph(&g, dir.join(format!("{name}.clq")), Format::Dimacs)?;
        }
    }
    Ok(())
}
