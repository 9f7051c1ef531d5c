//! Pruning counters on the structured DIMACS instances.
//!
//! These graphs have minimum degree at least their clique number, so the
//! degree prunings never fire and every edge is excluded exactly once by the
//! order test (p2 = m).

use maxclique::{families, max_clique, SolverConfig};

fn main() {
    println!("{:<14} {:>4} {:>6} {:>4} {:>6} {:>4} {:>10} {:>4}", "graph", "ω", "m", "p1", "p2", "p3", "p4", "p5");
    for name in ["hamming6-4", "johnson8-4-4", "keller4", "c-fat200-5", "johnson8-2-4", "MANN_a9"] {
        let g = families::dimacs_instance(name).expect("built-in instance");
        let r = max_clique(&g, &SolverConfig::default());
        let s = r.stats;
        println!(
            "{:<14} {:>4} {:>6} {:>4} {:>6} {:>4} {:>10} {:>4}",
            name, r.size, g.m(), s.p1, s.p2, s.p3, s.p4, s.p5
        );
    }
}
