//! Machinery shared by the exact, baseline and heuristic searches.

use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use crate::graph::{Graph, VertexId};

/// Best clique found so far. The size only grows; it is written under the
/// witness lock so size and witness always agree, and read without
/// synchronization by the searches.
pub(crate) struct Incumbent {
    size: AtomicUsize,
    witness: Mutex<Vec<VertexId>>,
}

impl Incumbent {
    pub fn new(lower_bound: usize) -> Self {
        Incumbent {
            size: AtomicUsize::new(lower_bound),
            witness: Mutex::new(Vec::new()),
        }
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size.load(Ordering::Relaxed)
    }

    /// Installs `clique` if it beats the current size.
    pub fn offer(&self, clique: &[VertexId]) -> bool {
        let mut witness = self.witness.lock().unwrap();
        if clique.len() > self.size.load(Ordering::Acquire) {
            witness.clear();
            witness.extend_from_slice(clique);
            self.size.store(clique.len(), Ordering::Release);
            true
        } else {
            false
        }
    }

    pub fn into_parts(self) -> (usize, Vec<VertexId>) {
        let size = self.size.into_inner();
        let mut witness = self.witness.into_inner().unwrap();
        witness.sort_unstable();
        (size, witness)
    }
}

/// Cooperative wall-clock limit.
pub(crate) struct Deadline {
    at: Option<Instant>,
    expired: AtomicBool,
}

impl Deadline {
    pub fn new(start: Instant, limit: Option<Duration>) -> Self {
        Deadline {
            at: limit.map(|l| start + l),
            expired: AtomicBool::new(false),
        }
    }

    #[inline]
    pub fn expired(&self) -> bool {
        self.expired.load(Ordering::Relaxed)
    }

    /// Reads the clock and latches expiry.
    pub fn check(&self) -> bool {
        if let Some(at) = self.at {
            if Instant::now() >= at {
                self.expired.store(true, Ordering::Relaxed);
            }
        }
        self.expired()
    }
}

/// Per-vertex neighbor degrees sorted ascending, in the graph's offset
/// layout. Counting the neighbors of `u` whose degree is below a bound is a
/// binary search.
pub(crate) struct DegreeIndex {
    sorted_neighbor_degrees: Vec<u32>,
}

impl DegreeIndex {
    pub fn new(g: &Graph, degree: &[u32]) -> Self {
        let mut sorted: Vec<u32> = g.targets().iter().map(|&w| degree[w as usize]).collect();
        for w in g.offsets().windows(2) {
            sorted[w[0]..w[1]].sort_unstable();
        }
        DegreeIndex {
            sorted_neighbor_degrees: sorted,
        }
    }

    /// Number of neighbors of `u` with degree `< bound`.
    #[inline]
    pub fn neighbors_below(&self, g: &Graph, u: VertexId, bound: usize) -> usize {
        let off = g.offsets();
        let slice = &self.sorted_neighbor_degrees[off[u as usize]..off[u as usize + 1]];
        slice.partition_point(|&d| (d as usize) < bound)
    }
}

pub(crate) fn degrees(g: &Graph) -> Vec<u32> {
    g.degrees().into_iter().map(|d| d as u32).collect()
}

/// Appends `a ∩ b` to `out` keeping only vertices accepted by `keep`. Both
/// inputs must be sorted ascending.
#[inline]
pub(crate) fn intersect_into(
    a: &[VertexId],
    b: &[VertexId],
    out: &mut Vec<VertexId>,
    mut keep: impl FnMut(VertexId) -> bool,
) {
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    if small.is_empty() {
        return;
    }
    if small.len() * 16 < large.len() {
        // galloping lookups into the longer list
        let mut rest = large;
        for &x in small {
            match rest.binary_search(&x) {
                Ok(i) => {
                    if keep(x) {
                        out.push(x);
                    }
                    rest = &rest[i + 1..];
                }
                Err(i) => rest = &rest[i..],
            }
            if rest.is_empty() {
                break;
            }
        }
        return;
    }
    let (mut i, mut j) = (0, 0);
    while i < small.len() && j < large.len() {
        let (x, y) = (small[i], large[j]);
        if x < y {
            i += 1;
        } else if y < x {
            j += 1;
        } else {
            if keep(x) {
                out.push(x);
            }
            i += 1;
            j += 1;
        }
    }
}
