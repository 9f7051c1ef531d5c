//! The exact search on several threads. Sizes agree across thread counts;
//! counters and witnesses may not, since the shared incumbent is read
//! without ordering.

use maxclique::{families, generate_rmat, max_clique, Graph, RmatFamily, SolverConfig, VertexOrder};

fn main() -> maxclique::Result<()> {
    let graphs: Vec<(&str, Graph)> = vec![
        ("keller4", families::dimacs_instance("keller4").expect("built-in")),
        ("johnson16-2-4", families::dimacs_instance("johnson16-2-4").expect("built-in")),
        ("rmat_sd2 scale 14", generate_rmat(&RmatFamily::Sd2.params(14, 1))?),
    ];
    for (name, g) in &graphs {
        for ordering in [VertexOrder::NaturalIndex, VertexOrder::DegreeDescending] {
            for threads in [1, 2, 4] {
                let cfg = SolverConfig::default().with_threads(threads).with_ordering(ordering);
                let r = max_clique(g, &cfg);
                println!(
                    "{name:<18} {ordering:?} threads={threads} size={} p4={} {:.3}s",
                    r.size, r.stats.p4, r.elapsed
                );
            }
        }
    }
    Ok(())
}
