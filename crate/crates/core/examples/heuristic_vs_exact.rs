//! Greedy heuristic against the exact solver, and the heuristic's clique
//! as a starting lower bound for the exact search.

use maxclique::{families, max_clique, max_clique_heuristic, SelectionPolicy, SolverConfig};

fn main() {
    println!("{:<14} {:>5} {:>9} {:>9} {:>10} {:>10}", "graph", "ω", "greedy", "random:1", "exact s", "seeded s");
    for name in ["hamming6-2", "hamming8-4", "johnson16-2-4", "keller4", "c-fat500-5", "MANN_a9", "MANN_a27"] {
        let g = families::dimacs_instance(name).expect("built-in instance");
        let greedy = max_clique_heuristic(&g, SelectionPolicy::MaxDegree);
        let random = max_clique_heuristic(&g, SelectionPolicy::UniformRandom { seed: 1 });

        let limit = std::time::Duration::from_secs(10);
        let cold = max_clique(&g, &SolverConfig::default().with_time_limit(limit));
        // the heuristic's witness makes this lower bound valid
        let seeded = max_clique(
            &g,
            &SolverConfig::default().with_lb(greedy.size).with_time_limit(limit),
        );
        let omega = if seeded.exact { seeded.size.to_string() } else { format!("≥{}", seeded.size) };
        let secs = |r: &maxclique::CliqueResult| if r.exact { format!("{:.3}", r.elapsed) } else { "timeout".into() };
        println!(
            "{:<14} {:>5} {:>9} {:>9} {:>10} {:>10}",
            name, omega, greedy.size, random.size, secs(&cold), secs(&seeded)
        );
    }
}
