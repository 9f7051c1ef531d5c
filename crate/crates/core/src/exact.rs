//! Exact maximum clique search with hierarchical degree pruning.
//!
//! The search computes, for every vertex `v` in a fixed processing order,
//! the largest clique that contains `v` and otherwise only vertices later in
//! the order. Five rules cut the work:
//!
//! 1. a seed whose degree is below the incumbent size is skipped;
//! 2. neighbors earlier in the order are left out of the candidate set,
//!    since their cliques were already explored;
//! 3. neighbors whose degree is below the incumbent size are left out;
//! 4. a branch returns once `|clique| + |candidates|` cannot beat the
//!    incumbent;
//! 5. when branching on `u`, the candidate set is intersected only with the
//!    neighbors of `u` whose degree is at least the incumbent size.
//!
//! Degrees are static degrees in the input graph. Candidates are taken in
//! ascending id order.
//!
//! [`PruneStats`] records how often each pruning fires: `p1` counts skipped
//! seeds, `p2` and `p3` count neighbors excluded while building seed
//! candidate sets, `p4` counts bound-triggered returns and `p5` counts
//! neighbors dropped by the degree filter of rule 5.

use std::ops::{Add, AddAssign};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexId};
use crate::search::{degrees, intersect_into, Deadline, DegreeIndex, Incumbent};

/// Order in which seed vertices are processed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexOrder {
    /// Ascending vertex id.
    #[default]
    NaturalIndex,
    /// Descending degree, ties by ascending id.
    DegreeDescending,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SolverConfig {
    /// Initial incumbent size. A positive value asserts that a clique of
    /// this size exists.
    pub lb: usize,
    pub ordering: VertexOrder,
    /// Worker threads, at least 1.
    pub threads: usize,
    pub time_limit: Option<Duration>,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            lb: 0,
            ordering: VertexOrder::NaturalIndex,
            threads: 1,
            time_limit: None,
        }
    }
}

impl SolverConfig {
    pub fn with_lb(mut self, lb: usize) -> Self {
        self.lb = lb;
        self
    }

    pub fn with_ordering(mut self, ordering: VertexOrder) -> Self {
        self.ordering = ordering;
        self
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads;
        self
    }

    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.time_limit = Some(limit);
        self
    }
}

/// Pruning event counters. `nodes` counts calls of the recursive
/// subroutine.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PruneStats {
    pub p1: u64,
    pub p2: u64,
    pub p3: u64,
    pub p4: u64,
    pub p5: u64,
    pub nodes: u64,
}

impl AddAssign for PruneStats {
    fn add_assign(&mut self, o: Self) {
        self.p1 += o.p1;
        self.p2 += o.p2;
        self.p3 += o.p3;
        self.p4 += o.p4;
        self.p5 += o.p5;
        self.nodes += o.nodes;
    }
}

impl Add for PruneStats {
    type Output = PruneStats;

    fn add(mut self, o: Self) -> Self {
        self += o;
        self
    }
}

/// Outcome of one solver run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CliqueResult {
    pub size: usize,
    /// Sorted vertex set of a clique of `size` vertices. Empty when
    /// `lb_unverified` is set.
    pub witness: Vec<VertexId>,
    #[serde(flatten)]
    pub stats: PruneStats,
    /// Wall-clock seconds.
    pub elapsed: f64,
    /// False when the time limit cut the search short.
    pub exact: bool,
    /// The search never beat the caller's lower bound, so `size` is the
    /// unwitnessed bound itself.
    pub lb_unverified: bool,
}

/// True iff every pair in `s` is adjacent in `g`. Out-of-range or repeated
/// ids make the set invalid.
pub fn verify_clique(g: &Graph, s: &[VertexId]) -> bool {
    s.iter().enumerate().all(|(i, &u)| {
        (u as usize) < g.n() && s[i + 1..].iter().all(|&v| g.has_edge(u, v))
    })
}

/// Seed processing order for `ordering`.
pub fn vertex_order(g: &Graph, ordering: VertexOrder) -> Vec<VertexId> {
    let mut order: Vec<VertexId> = g.vertices().collect();
    if ordering == VertexOrder::DegreeDescending {
        order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    }
    order
}

/// Maximum clique of `g`.
///
/// ```
/// use maxclique::{families, max_clique, SolverConfig};
///
/// let r = max_clique(&families::complete(3), &SolverConfig::default());
/// assert_eq!((r.size, r.exact), (3, true));
/// ```
pub fn max_clique(g: &Graph, cfg: &SolverConfig) -> CliqueResult {
    branch_and_bound(g, cfg, Prunings::ALL)
}

/// Which of the degree-based prunings are active. The order test and the
/// size bound are always on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Prunings {
    pub seed_degree: bool,
    pub neighbor_degree: bool,
    pub intersection_degree: bool,
}

impl Prunings {
    pub const ALL: Prunings = Prunings {
        seed_degree: true,
        neighbor_degree: true,
        intersection_degree: true,
    };
    pub const NONE: Prunings = Prunings {
        seed_degree: false,
        neighbor_degree: false,
        intersection_degree: false,
    };
}

struct Context<'a> {
    g: &'a Graph,
    degree: Vec<u32>,
    rank: Vec<u32>,
    index: Option<DegreeIndex>,
    prunings: Prunings,
    incumbent: Incumbent,
    deadline: Deadline,
}

pub(crate) fn branch_and_bound(g: &Graph, cfg: &SolverConfig, prunings: Prunings) -> CliqueResult {
    assert!(cfg.threads >= 1, "thread count must be positive");
    let start = Instant::now();
    let order = vertex_order(g, cfg.ordering);
    let mut rank = vec![0u32; g.n()];
    for (pos, &v) in order.iter().enumerate() {
        rank[v as usize] = pos as u32;
    }
    let degree = degrees(g);
    let index = prunings
        .intersection_degree
        .then(|| DegreeIndex::new(g, &degree));
    let ctx = Context {
        g,
        degree,
        rank,
        index,
        prunings,
        incumbent: Incumbent::new(cfg.lb),
        deadline: Deadline::new(start, cfg.time_limit),
    };

    let stats = if cfg.threads == 1 {
        let mut worker = Worker::new(&ctx);
        for &v in &order {
            if ctx.deadline.check() {
                break;
            }
            worker.seed(v);
        }
        worker.stats
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.threads)
            .build()
            .expect("failed to build solver thread pool");
        pool.install(|| {
            order
                .par_iter()
                .fold(
                    || Worker::new(&ctx),
                    |mut worker, &v| {
                        if !ctx.deadline.check() {
                            worker.seed(v);
                        }
                        worker
                    },
                )
                .map(|w| w.stats)
                .reduce(PruneStats::default, |a, b| a + b)
        })
    };

    let exact = !ctx.deadline.expired();
    let (size, witness) = ctx.incumbent.into_parts();
    CliqueResult {
        size,
        lb_unverified: witness.len() < size,
        witness,
        stats,
        elapsed: start.elapsed().as_secs_f64(),
        exact,
    }
}

const CLOCK_CHECK_MASK: u64 = (1 << 16) - 1;

struct Worker<'a> {
    ctx: &'a Context<'a>,
    stats: PruneStats,
    clique: Vec<VertexId>,
    buffers: Vec<Vec<VertexId>>,
}

impl<'a> Worker<'a> {
    fn new(ctx: &'a Context<'a>) -> Self {
        Worker {
            ctx,
            stats: PruneStats::default(),
            clique: Vec::new(),
            buffers: Vec::new(),
        }
    }

    fn take_buffer(&mut self) -> Vec<VertexId> {
        self.buffers.pop().unwrap_or_default()
    }

    fn return_buffer(&mut self, mut buf: Vec<VertexId>) {
        buf.clear();
        self.buffers.push(buf);
    }

    /// Largest clique through `v` using only later vertices.
    fn seed(&mut self, v: VertexId) {
        let ctx = self.ctx;
        let max = ctx.incumbent.size();
        if ctx.prunings.seed_degree && (ctx.degree[v as usize] as usize) < max {
            self.stats.p1 += 1;
            return;
        }
        let own_rank = ctx.rank[v as usize];
        let mut candidates = self.take_buffer();
        for &w in ctx.g.neighbors(v) {
            if ctx.rank[w as usize] < own_rank {
                self.stats.p2 += 1;
                continue;
            }
            if ctx.prunings.neighbor_degree && (ctx.degree[w as usize] as usize) < max {
                self.stats.p3 += 1;
                continue;
            }
            candidates.push(w);
        }
        self.clique.push(v);
        self.extend(&candidates);
        self.clique.pop();
        self.return_buffer(candidates);
    }

    /// Every candidate is adjacent to every vertex of `self.clique`.
    fn extend(&mut self, candidates: &[VertexId]) {
        let ctx = self.ctx;
        self.stats.nodes += 1;
        if self.stats.nodes & CLOCK_CHECK_MASK == 0 {
            ctx.deadline.check();
        }
        if ctx.deadline.expired() {
            return;
        }
        if candidates.is_empty() {
            if self.clique.len() > ctx.incumbent.size() {
                ctx.incumbent.offer(&self.clique);
            }
            return;
        }
        for idx in 0..candidates.len() {
            let max = ctx.incumbent.size();
            if self.clique.len() + (candidates.len() - idx) <= max {
                self.stats.p4 += 1;
                return;
            }
            let u = candidates[idx];
            let rest = &candidates[idx + 1..];
            // candidates ascend by id, so only neighbors above u can match
            let nbrs = ctx.g.neighbors(u);
            let upper = &nbrs[nbrs.partition_point(|&w| w <= u)..];
            let mut next = self.take_buffer();
            match &ctx.index {
                Some(index) => {
                    self.stats.p5 += index.neighbors_below(ctx.g, u, max) as u64;
                    let degree = &ctx.degree;
                    intersect_into(rest, upper, &mut next, |w| {
                        degree[w as usize] as usize >= max
                    });
                }
                None => intersect_into(rest, upper, &mut next, |_| true),
            }
            self.clique.push(u);
            self.extend(&next);
            self.clique.pop();
            self.return_buffer(next);
            if ctx.deadline.expired() {
                return;
            }
        }
    }
}
