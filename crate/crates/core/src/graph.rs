//! Immutable undirected simple graphs in compressed adjacency form.
//!
//! Every solver in the crate consumes a [`Graph`]. Raw input is staged as an
//! [`EdgeList`] (which may hold duplicates, self-loops and both orientations
//! of an edge) and turned into a `Graph` by [`EdgeList::normalize`].

use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// Dense 0-based vertex identifier.
pub type VertexId = u32;

/// Undirected simple graph stored as offset/target arrays.
///
/// Invariants upheld by every constructor:
/// - adjacency is symmetric,
/// - no self-loops and no repeated neighbors,
/// - each neighbor list is sorted ascending,
/// - the neighbor lists hold exactly `2 * m` entries.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<VertexId>,
}

impl Graph {
    /// Graph with `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            offsets: vec![0; n + 1],
            targets: Vec::new(),
        }
    }

    /// Builds a graph from `n` and any iterator of vertex pairs.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        EdgeList::from_pairs(n, edges).normalize()
    }

    pub fn n(&self) -> usize {
        self.offsets.len().saturating_sub(1)
    }

    /// Number of undirected edges.
    pub fn m(&self) -> usize {
        self.targets.len() / 2
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.n() as VertexId
    }

    /// Sorted neighbor list of `v`. Panics if `v` is out of range.
    #[inline]
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        let v = v as usize;
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    /// Panics if `v` is out of range.
    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        let v = v as usize;
        assert!(v < self.n(), "vertex {v} out of range for {} vertices", self.n());
        self.offsets[v + 1] - self.offsets[v]
    }

    /// Largest degree, 0 for the empty graph.
    pub fn max_degree(&self) -> usize {
        self.offsets
            .windows(2)
            .map(|w| w[1] - w[0])
            .max()
            .unwrap_or(0)
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.offsets.windows(2).map(|w| w[1] - w[0]).collect()
    }

    /// Map from degree to the number of vertices with that degree.
    pub fn degree_histogram(&self) -> BTreeMap<usize, usize> {
        let mut hist = BTreeMap::new();
        for d in self.offsets.windows(2).map(|w| w[1] - w[0]) {
            *hist.entry(d).or_insert(0) += 1;
        }
        hist
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        if u as usize >= self.n() || v as usize >= self.n() {
            return false;
        }
        self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Each undirected edge once, as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.vertices().flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Subgraph induced by `vertices`, relabelled `0..vertices.len()` in the
    /// order given.
    pub fn induced_subgraph(&self, vertices: &[VertexId]) -> Graph {
        let mut relabel = vec![VertexId::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            relabel[v as usize] = i as VertexId;
        }
        let edges = vertices.iter().flat_map(|&u| {
            let relabel = &relabel;
            self.neighbors(u).iter().filter_map(move |&w| {
                let lw = relabel[w as usize];
                (lw != VertexId::MAX).then(|| (relabel[u as usize], lw))
            })
        });
        EdgeList::from_pairs(vertices.len(), edges)
            .normalize()
            .expect("relabelled ids are in range")
    }

    /// Offset array, `n + 1` entries.
    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }

    /// Concatenated neighbor lists.
    pub fn targets(&self) -> &[VertexId] {
        &self.targets
    }
}

/// Raw ingestion staging: declared vertex count plus an unnormalized
/// multiset of vertex pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EdgeList {
    pub n: usize,
    pub edges: Vec<(VertexId, VertexId)>,
}

impl EdgeList {
    pub fn new(n: usize) -> Self {
        EdgeList {
            n,
            edges: Vec::new(),
        }
    }

    pub fn from_pairs<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        EdgeList {
            n,
            edges: edges.into_iter().collect(),
        }
    }

    pub fn push(&mut self, u: VertexId, v: VertexId) {
        self.edges.push((u, v));
    }

    /// Drops self-loops, collapses duplicates and symmetrizes.
    pub fn normalize(&self) -> Result<Graph> {
        let n = self.n;
        let mut degree = vec![0usize; n];
        for (index, &(u, v)) in self.edges.iter().enumerate() {
            if u as usize >= n || v as usize >= n {
                return Err(Error::VertexOutOfRange {
                    index,
                    u: u as u64,
                    v: v as u64,
                    n,
                });
            }
            if u != v {
                degree[u as usize] += 1;
                degree[v as usize] += 1;
            }
        }

        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut fill = offsets[..n].to_vec();
        let mut targets = vec![0 as VertexId; offsets[n]];
        for &(u, v) in &self.edges {
            if u != v {
                targets[fill[u as usize]] = v;
                fill[u as usize] += 1;
                targets[fill[v as usize]] = u;
                fill[v as usize] += 1;
            }
        }

        // Sort and dedup each list, compacting in place.
        let mut write = 0;
        let mut compact_offsets = Vec::with_capacity(n + 1);
        compact_offsets.push(0);
        for v in 0..n {
            let (start, end) = (offsets[v], offsets[v + 1]);
            targets[start..end].sort_unstable();
            let mut last = None;
            for i in start..end {
                let w = targets[i];
                if last != Some(w) {
                    targets[write] = w;
                    write += 1;
                    last = Some(w);
                }
            }
            compact_offsets.push(write);
        }
        targets.truncate(write);
        targets.shrink_to_fit();

        Ok(Graph {
            offsets: compact_offsets,
            targets,
        })
    }
}

impl From<&Graph> for EdgeList {
    fn from(g: &Graph) -> Self {
        EdgeList::from_pairs(g.n(), g.edges())
    }
}
