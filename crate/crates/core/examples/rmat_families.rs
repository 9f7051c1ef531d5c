//! The three R-MAT families side by side.
//!
//! cargo run --release --example rmat_families -- 16

use maxclique::{generate_rmat, max_clique, max_clique_heuristic, RmatFamily, SelectionPolicy, SolverConfig};

fn main() -> maxclique::Result<()> {
    let scale: u32 = std::env::args().nth(1).map_or(14, |s| s.parse().expect("scale"));
    println!("{:<10} {:>9} {:>10} {:>6} {:>4} {:>9} {:>8}", "family", "n", "m", "Δ", "ω", "greedy", "exact s");
    for family in RmatFamily::ALL {
        let p = family.params(scale, 1);
        let g = generate_rmat(&p)?;
        let r = max_clique(&g, &SolverConfig::default());
        let h = max_clique_heuristic(&g, SelectionPolicy::MaxDegree);
        println!(
            "{:<10} {:>9} {:>10} {:>6} {:>4} {:>9} {:>8.3}",
            family.name(), g.n(), g.m(), g.max_degree(), r.size, h.size, r.elapsed
        );
    }
    Ok(())
}
