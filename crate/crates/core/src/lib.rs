//! Maximum-clique search for large sparse graphs.
//!
//! The exact solver ([`max_clique`]) is a per-vertex branch and bound with
//! five degree and size prunings, each counted in [`PruneStats`]. A greedy
//! single-path variant ([`max_clique_heuristic`]) gives a fast lower bound.
//! Around them sit graph loaders, an R-MAT generator, deterministic
//! constructions of structured benchmark graphs, an overlapping-community
//! pipeline and a benchmark harness.
//!
//! ```
//! use maxclique::{families, max_clique, max_clique_heuristic, SelectionPolicy, SolverConfig};
//!
//! let g = families::hamming(6, 4);
//! let exact = max_clique(&g, &SolverConfig::default());
//! let greedy = max_clique_heuristic(&g, SelectionPolicy::MaxDegree);
//! assert_eq!(exact.size, 4);
//! assert!(greedy.size <= exact.size);
//! ```

pub mod baseline;
pub mod bench;
pub mod cli;
pub mod community;
mod error;
pub mod exact;
pub mod families;
mod graph;
pub mod heuristic;
pub mod io;
pub mod rmat;
mod search;

pub use baseline::{brute_force, brute_force_clique, max_clique_cp, BRUTE_FORCE_LIMIT};
pub use error::{Error, Result};
pub use exact::{max_clique, verify_clique, CliqueResult, PruneStats, SolverConfig, VertexOrder};
pub use graph::{EdgeList, Graph, VertexId};
pub use heuristic::{
    heuristic_scaling_probe, largest_clique_per_vertex, max_clique_heuristic, ScalingSample,
    SelectionPolicy,
};
pub use rmat::{family_presets, generate_rmat, RmatFamily, RmatParams};
