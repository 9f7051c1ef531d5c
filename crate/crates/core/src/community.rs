//! Overlapping communities from co-occurrence data.
//!
//! Interaction records pair an entity ("wall") with a user who interacted
//! with it. Two walls are linked when they share a user, weighted by the
//! Jaccard index of their user sets. After thresholding, every wall's greedy
//! clique becomes a candidate community; duplicates and communities
//! contained in another one are dropped. A wall may belong to several
//! communities.

use std::collections::HashMap;
use std::io::BufRead;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeList, Graph, VertexId};
use crate::heuristic::largest_clique_per_vertex;

/// (wall, user) pairs with opaque string ids mapped to dense ids.
#[derive(Clone, Debug, Default)]
pub struct InteractionRecords {
    walls: Vec<String>,
    wall_ids: HashMap<String, u32>,
    user_ids: HashMap<String, u32>,
    records: Vec<(u32, u32)>,
}

impl InteractionRecords {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, wall: &str, user: &str) {
        let next_wall = self.walls.len() as u32;
        let w = *self.wall_ids.entry(wall.to_owned()).or_insert(next_wall);
        if w == next_wall {
            self.walls.push(wall.to_owned());
        }
        let next_user = self.user_ids.len() as u32;
        let u = *self.user_ids.entry(user.to_owned()).or_insert(next_user);
        self.records.push((w, u));
    }

    /// Two columns per line, `wall<TAB>user` (any whitespace works). Blank
    /// lines and `#` comments are skipped.
    pub fn parse<R: BufRead>(reader: R) -> Result<Self> {
        let mut records = InteractionRecords::new();
        for (i, line) in reader.lines().enumerate() {
            let line = line?;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let mut cols = trimmed.split(|c: char| c == '\t' || c.is_whitespace());
            let mut next = || cols.by_ref().find(|c| !c.is_empty());
            match (next(), next()) {
                (Some(wall), Some(user)) => records.push(wall, user),
                _ => return Err(Error::format(i + 1, "expected `wall user` columns")),
            }
        }
        Ok(records)
    }

    /// Wall names indexed by dense vertex id.
    pub fn walls(&self) -> &[String] {
        &self.walls
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }
}

/// Graph with one weight per undirected edge, aligned with the adjacency
/// layout.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedGraph {
    pub graph: Graph,
    weights: Vec<f64>,
}

impl WeightedGraph {
    pub fn weight(&self, u: VertexId, v: VertexId) -> Option<f64> {
        if u as usize >= self.graph.n() {
            return None;
        }
        let pos = self.graph.neighbors(u).binary_search(&v).ok()?;
        Some(self.weights[self.graph.offsets()[u as usize] + pos])
    }

    /// `(u, v, weight)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId, f64)> + '_ {
        let off = self.graph.offsets();
        self.graph.vertices().flat_map(move |u| {
            let start = off[u as usize];
            self.graph
                .neighbors(u)
                .iter()
                .enumerate()
                .filter(move |(_, &v)| v > u)
                .map(move |(i, &v)| (u, v, self.weights[start + i]))
        })
    }
}

/// Walls become vertices; walls sharing at least one user are joined with
/// weight `|U_a ∩ U_b| / |U_a ∪ U_b|`.
pub fn build_cooccurrence_graph(r: &InteractionRecords) -> WeightedGraph {
    let n = r.walls.len();
    let mut users_of = vec![Vec::new(); n];
    let mut walls_of = vec![Vec::new(); r.user_ids.len()];
    for &(w, u) in &r.records {
        users_of[w as usize].push(u);
        walls_of[u as usize].push(w);
    }
    for list in users_of.iter_mut().chain(walls_of.iter_mut()) {
        list.sort_unstable();
        list.dedup();
    }

    let mut shared: HashMap<(u32, u32), u32> = HashMap::new();
    for walls in &walls_of {
        for (i, &a) in walls.iter().enumerate() {
            for &b in &walls[i + 1..] {
                *shared.entry((a, b)).or_insert(0) += 1;
            }
        }
    }

    let graph = EdgeList::from_pairs(n, shared.keys().copied())
        .normalize()
        .expect("wall ids are dense");
    let mut weights = vec![0.0; graph.targets().len()];
    let off = graph.offsets();
    for u in graph.vertices() {
        for (i, &v) in graph.neighbors(u).iter().enumerate() {
            let key = (u.min(v), u.max(v));
            let inter = shared[&key] as f64;
            let union = (users_of[u as usize].len() + users_of[v as usize].len()) as f64 - inter;
            weights[off[u as usize] + i] = inter / union;
        }
    }
    WeightedGraph { graph, weights }
}

/// Unweighted graph of the edges with weight strictly above `t`.
///
/// Panics unless `0 <= t <= 1`.
pub fn threshold_filter(wg: &WeightedGraph, t: f64) -> Graph {
    assert!((0.0..=1.0).contains(&t), "threshold {t} outside [0, 1]");
    let kept = wg.edges().filter(|&(_, _, w)| w > t).map(|(u, v, _)| (u, v));
    Graph::from_edges(wg.graph.n(), kept).expect("filtered edges stay in range")
}

/// Distinct per-vertex cliques of at least two vertices, excluding any
/// clique contained in another one. Sorted.
pub fn detect_communities(g: &Graph) -> Vec<Vec<VertexId>> {
    let mut cliques: Vec<Vec<VertexId>> = largest_clique_per_vertex(g)
        .into_iter()
        .filter(|c| c.len() >= 2)
        .collect();
    cliques.sort_unstable();
    cliques.dedup();

    // containing communities of each vertex, for the subset test
    let mut by_vertex: HashMap<VertexId, Vec<usize>> = HashMap::new();
    for (i, c) in cliques.iter().enumerate() {
        for &v in c {
            by_vertex.entry(v).or_default().push(i);
        }
    }
    let keep: Vec<bool> = cliques
        .iter()
        .enumerate()
        .map(|(i, c)| {
            !by_vertex[&c[0]].iter().any(|&j| {
                j != i && cliques[j].len() > c.len() && is_subset(c, &cliques[j])
            })
        })
        .collect();
    cliques
        .into_iter()
        .zip(keep)
        .filter_map(|(c, k)| k.then_some(c))
        .collect()
}

/// Both slices sorted ascending.
fn is_subset(small: &[VertexId], large: &[VertexId]) -> bool {
    let mut it = large.iter();
    small.iter().all(|x| it.any(|y| y == x))
}

/// Community detection output: vertex-id arrays plus the wall dictionary.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CommunityReport {
    pub threshold: f64,
    pub walls: Vec<String>,
    pub communities: Vec<Vec<VertexId>>,
}

/// Full pipeline: co-occurrence graph, threshold, communities.
pub fn communities_from_records(records: &InteractionRecords, threshold: f64) -> CommunityReport {
    let wg = build_cooccurrence_graph(records);
    let g = threshold_filter(&wg, threshold);
    CommunityReport {
        threshold,
        walls: records.walls().to_vec(),
        communities: detect_communities(&g),
    }
}
