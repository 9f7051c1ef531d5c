//! The exact solver against the Carraghan-Pardalos baseline and exhaustive
//! enumeration.

use maxclique::{brute_force, families, generate_rmat, max_clique, max_clique_cp, RmatFamily, SolverConfig};

fn main() -> maxclique::Result<()> {
    // enumeration only handles tiny graphs
    for seed in 0..5 {
        let g = families::gnp(24, 0.5, seed);
        let exact = max_clique(&g, &SolverConfig::default());
        println!("gnp(24, 0.5) seed {seed}: exact {} cp {} brute {}", exact.size, max_clique_cp(&g, None).size, brute_force(&g)?);
    }

    // the degree prunings matter on skewed sparse graphs
    for family in [RmatFamily::Er, RmatFamily::Sd1] {
        let g = generate_rmat(&family.params(15, 1))?;
        let exact = max_clique(&g, &SolverConfig::default());
        let cp = max_clique_cp(&g, None);
        println!(
            "{family}: ω={} exact {:.3}s ({} nodes) cp {:.3}s ({} nodes)",
            exact.size, exact.elapsed, exact.stats.nodes, cp.elapsed, cp.stats.nodes
        );
    }
    Ok(())
}
