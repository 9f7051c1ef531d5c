//! R-MAT recursive-matrix graph generator.
//!
//! Each edge draw descends `scale` levels of the adjacency matrix, picking
//! one of the four quadrants with probabilities `(a, b, c, d)` at every
//! level. The draws are then normalized: self-loops and repeats are
//! dropped, not redrawn, and the result is symmetrized.
//!
//! Draws are generated in fixed-size chunks, each from its own stream of
//! the master seed, so the output depends only on the parameters and not on
//! the number of threads.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeList, Graph, VertexId};

/// Draws per independently seeded chunk.
const CHUNK: usize = 1 << 16;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RmatParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    /// log2 of the vertex count.
    pub scale: u32,
    /// Directed edge draws per vertex.
    pub edge_factor: u32,
    pub seed: u64,
}

impl RmatParams {
    pub fn validate(&self) -> Result<()> {
        let probs = [self.a, self.b, self.c, self.d];
        if probs.iter().any(|p| !p.is_finite() || *p < 0.0) {
            return Err(Error::InvalidParameter(
                "quadrant probabilities must be non-negative".into(),
            ));
        }
        let sum: f64 = probs.iter().sum();
        if (sum - 1.0).abs() > 1e-9 {
            return Err(Error::InvalidParameter(format!(
                "quadrant probabilities sum to {sum}, expected 1"
            )));
        }
        if !(1..=31).contains(&self.scale) {
            return Err(Error::InvalidParameter(format!(
                "scale {} outside 1..=31",
                self.scale
            )));
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        1usize << self.scale
    }

    /// Number of directed pairs drawn before normalization.
    pub fn draws(&self) -> usize {
        self.edge_factor as usize * self.vertex_count()
    }

    pub fn with_scale(mut self, scale: u32) -> Self {
        self.scale = scale;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}

/// The three test families: uniform (Erdős–Rényi like) and two skewed
/// degree distributions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RmatFamily {
    Er,
    Sd1,
    Sd2,
}

impl RmatFamily {
    pub const ALL: [RmatFamily; 3] = [RmatFamily::Er, RmatFamily::Sd1, RmatFamily::Sd2];

    pub fn name(self) -> &'static str {
        match self {
            RmatFamily::Er => "rmat_er",
            RmatFamily::Sd1 => "rmat_sd1",
            RmatFamily::Sd2 => "rmat_sd2",
        }
    }

    /// Preset parameters at `scale` with edge factor 8.
    pub fn params(self, scale: u32, seed: u64) -> RmatParams {
        let (a, b, c, d) = match self {
            RmatFamily::Er => (0.25, 0.25, 0.25, 0.25),
            RmatFamily::Sd1 => (0.45, 0.15, 0.15, 0.25),
            RmatFamily::Sd2 => (0.55, 0.15, 0.15, 0.15),
        };
        RmatParams {
            a,
            b,
            c,
            d,
            scale,
            edge_factor: 8,
            seed,
        }
    }
}

impl FromStr for RmatFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim_start_matches("rmat_") {
            "er" => Ok(RmatFamily::Er),
            "sd1" => Ok(RmatFamily::Sd1),
            "sd2" => Ok(RmatFamily::Sd2),
            other => Err(Error::InvalidParameter(format!("unknown R-MAT family `{other}`"))),
        }
    }
}

impl fmt::Display for RmatFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Named presets `rmat_er`, `rmat_sd1`, `rmat_sd2` at scale 17, seed 1.
pub fn family_presets() -> Vec<(&'static str, RmatParams)> {
    RmatFamily::ALL
        .iter()
        .map(|f| (f.name(), f.params(17, 1)))
        .collect()
}

/// Generates and normalizes an R-MAT graph.
pub fn generate_rmat(p: &RmatParams) -> Result<Graph> {
    rmat_edges(p)?.normalize()
}

/// Raw directed draws, before normalization.
pub fn rmat_edges(p: &RmatParams) -> Result<EdgeList> {
    p.validate()?;
    let total = p.draws();
    let chunks = total.div_ceil(CHUNK);
    let edges: Vec<(VertexId, VertexId)> = (0..chunks)
        .into_par_iter()
        .flat_map_iter(|chunk| {
            let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
            rng.set_stream(chunk as u64);
            let len = CHUNK.min(total - chunk * CHUNK);
            let p = *p;
            (0..len).map(move |_| draw(&p, &mut rng))
        })
        .collect();
    Ok(EdgeList {
        n: p.vertex_count(),
        edges,
    })
}

fn draw(p: &RmatParams, rng: &mut ChaCha8Rng) -> (VertexId, VertexId) {
    let (ab, abc) = (p.a + p.b, p.a + p.b + p.c);
    let (mut u, mut v) = (0u32, 0u32);
    for _ in 0..p.scale {
        let r: f64 = rng.random();
        let (du, dv) = if r < p.a {
            (0, 0)
        } else if r < ab {
            (0, 1)
        } else if r < abc {
            (1, 0)
        } else {
            (1, 1)
        };
        u = (u << 1) | du;
        v = (v << 1) | dv;
    }
    (u, v)
}
