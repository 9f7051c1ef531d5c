//! Reference solvers: Carraghan–Pardalos and exhaustive enumeration.

use std::time::Duration;

use crate::error::{Error, Result};
use crate::exact::{branch_and_bound, CliqueResult, Prunings, SolverConfig};
use crate::graph::{Graph, VertexId};

/// Largest graph [`brute_force`] accepts.
pub const BRUTE_FORCE_LIMIT: usize = 30;

/// Carraghan–Pardalos: per-vertex depth-first search with the order test
/// and the size bound, and none of the degree prunings. Shares the exact
/// solver's recursion, so the two differ only in the prunings switched on.
pub fn max_clique_cp(g: &Graph, time_limit: Option<Duration>) -> CliqueResult {
    let cfg = SolverConfig {
        time_limit,
        ..SolverConfig::default()
    };
    branch_and_bound(g, &cfg, Prunings::NONE)
}

/// Clique number by enumerating every clique with bitmask adjacency, with
/// no bounding at all. Refuses graphs over [`BRUTE_FORCE_LIMIT`] vertices.
pub fn brute_force(g: &Graph) -> Result<usize> {
    brute_force_clique(g).map(|c| c.len())
}

/// Like [`brute_force`], returning a maximum clique (sorted).
pub fn brute_force_clique(g: &Graph) -> Result<Vec<VertexId>> {
    let n = g.n();
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLarge {
            n,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let adj: Vec<u32> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect();
    let all = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut best = Vec::new();
    enumerate(&adj, all, &mut Vec::new(), &mut best);
    Ok(best)
}

/// Visits every clique extending `current` by vertices of `candidates`,
/// each generated once by always extending with higher ids.
fn enumerate(adj: &[u32], candidates: u32, current: &mut Vec<VertexId>, best: &mut Vec<VertexId>) {
    if current.len() > best.len() {
        best.clone_from(current);
    }
    let mut rest = candidates;
    while rest != 0 {
        let v = rest.trailing_zeros();
        rest &= rest - 1;
        current.push(v);
        enumerate(adj, rest & adj[v as usize], current, best);
        current.pop();
    }
}
