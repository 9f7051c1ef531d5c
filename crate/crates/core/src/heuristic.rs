//! Greedy single-path variant of the exact search.
//!
//! For every seed the heuristic follows one path: it repeatedly adds one
//! candidate (by default the candidate of largest degree in the whole
//! graph) and intersects the remaining candidates with that vertex's
//! filtered neighborhood. The seed loop and degree rules 1, 3 and 5 work
//! as in [`crate::exact`]; there is no order test and no backtracking, so
//! `p2` and `p4` stay zero. Total work is `O(n * Δ²)`.

use std::fmt;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::exact::{CliqueResult, PruneStats};
use crate::graph::{Graph, VertexId};
use crate::search::{degrees, intersect_into, DegreeIndex, Incumbent};

/// How the next clique vertex is chosen among the candidates.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "policy", rename_all = "snake_case")]
pub enum SelectionPolicy {
    /// Largest degree in the input graph, ties to the lowest id.
    #[default]
    MaxDegree,
    /// Uniformly random candidate. Each seed vertex draws from its own
    /// stream of the run's seed, so results do not depend on scheduling.
    UniformRandom { seed: u64 },
}

impl SelectionPolicy {
    pub fn name(&self) -> &'static str {
        match self {
            SelectionPolicy::MaxDegree => "maxdeg",
            SelectionPolicy::UniformRandom { .. } => "random",
        }
    }

    pub fn seed(&self) -> Option<u64> {
        match *self {
            SelectionPolicy::MaxDegree => None,
            SelectionPolicy::UniformRandom { seed } => Some(seed),
        }
    }
}

impl fmt::Display for SelectionPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.seed() {
            None => f.write_str(self.name()),
            Some(seed) => write!(f, "{}:{seed}", self.name()),
        }
    }
}

/// Heuristic clique: a lower bound on the clique number, always witnessed.
pub fn max_clique_heuristic(g: &Graph, policy: SelectionPolicy) -> CliqueResult {
    let start = Instant::now();
    let degree = degrees(g);
    let index = DegreeIndex::new(g, &degree);
    let incumbent = Incumbent::new(0);
    let mut stats = PruneStats::default();
    let mut candidates = Vec::new();
    let mut next = Vec::new();
    let mut clique = Vec::new();

    for v in g.vertices() {
        let max = incumbent.size();
        if (degree[v as usize] as usize) < max {
            stats.p1 += 1;
            continue;
        }
        candidates.clear();
        for &w in g.neighbors(v) {
            if (degree[w as usize] as usize) < max {
                stats.p3 += 1;
            } else {
                candidates.push(w);
            }
        }
        clique.clear();
        clique.push(v);
        let mut rng = policy_rng(policy, v);
        loop {
            stats.nodes += 1;
            if candidates.is_empty() {
                if clique.len() > incumbent.size() {
                    incumbent.offer(&clique);
                }
                break;
            }
            let pick = select(&candidates, &degree, rng.as_mut());
            let u = candidates.remove(pick);
            let max = incumbent.size();
            stats.p5 += index.neighbors_below(g, u, max) as u64;
            next.clear();
            intersect_into(&candidates, g.neighbors(u), &mut next, |w| {
                degree[w as usize] as usize >= max
            });
            clique.push(u);
            std::mem::swap(&mut candidates, &mut next);
        }
    }

    let (size, witness) = incumbent.into_parts();
    CliqueResult {
        size,
        witness,
        stats,
        elapsed: start.elapsed().as_secs_f64(),
        exact: true,
        lb_unverified: false,
    }
}

fn policy_rng(policy: SelectionPolicy, v: VertexId) -> Option<ChaCha8Rng> {
    match policy {
        SelectionPolicy::MaxDegree => None,
        SelectionPolicy::UniformRandom { seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(v as u64);
            Some(rng)
        }
    }
}

/// Index into `candidates` (sorted ascending) of the next vertex.
fn select(candidates: &[VertexId], degree: &[u32], rng: Option<&mut ChaCha8Rng>) -> usize {
    match rng {
        Some(rng) => rng.random_range(0..candidates.len()),
        None => {
            let mut best = 0;
            for (i, &w) in candidates.iter().enumerate().skip(1) {
                // strict comparison keeps the lowest id on ties
                if degree[w as usize] > degree[candidates[best] as usize] {
                    best = i;
                }
            }
            best
        }
    }
}

/// For every vertex, the greedy max-degree clique grown from it with no
/// degree filtering. Entry `v` is sorted and contains `v`.
pub fn largest_clique_per_vertex(g: &Graph) -> Vec<Vec<VertexId>> {
    let degree = degrees(g);
    g.vertices()
        .into_par_iter()
        .map(|v| {
            let mut clique = vec![v];
            let mut candidates = g.neighbors(v).to_vec();
            let mut next = Vec::new();
            while !candidates.is_empty() {
                let u = candidates.remove(select(&candidates, &degree, None));
                next.clear();
                intersect_into(&candidates, g.neighbors(u), &mut next, |_| true);
                clique.push(u);
                std::mem::swap(&mut candidates, &mut next);
            }
            clique.sort_unstable();
            clique
        })
        .collect()
}

/// One timing sample of the heuristic, for growth-rate plots.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScalingSample {
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    /// Heuristic wall-clock seconds.
    pub elapsed: f64,
}

impl ScalingSample {
    pub const CSV_HEADER: &'static str = "n,m,max_degree,elapsed";

    pub fn csv_row(&self) -> String {
        format!("{},{},{},{:.9}", self.n, self.m, self.max_degree, self.elapsed)
    }
}

/// Times one max-degree heuristic run on `g`.
pub fn heuristic_scaling_probe(g: &Graph) -> ScalingSample {
    let start = Instant::now();
    let result = max_clique_heuristic(g, SelectionPolicy::MaxDegree);
    let elapsed = start.elapsed().as_secs_f64();
    debug_assert!(result.size <= g.n());
    ScalingSample {
        n: g.n(),
        m: g.m(),
        max_degree: g.max_degree(),
        elapsed,
    }
}
