//! Deterministic graph families.
//!
//! Besides the usual small fixtures this module rebuilds the structured
//! DIMACS clique benchmarks (hamming, johnson, keller, c-fat and MANN_a)
//! from their combinatorial definitions. [`dimacs_instance`] maps the
//! benchmark names onto these constructions. The randomly generated DIMACS
//! families (brock, p_hat, san, gen) have no closed-form description and
//! must be loaded from their `.clq` files.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, VertexId};

pub fn complete(n: usize) -> Graph {
    let n32 = n as VertexId;
    build(n, (0..n32).flat_map(|u| (u + 1..n32).map(move |v| (u, v))))
}

pub fn path(n: usize) -> Graph {
    build(n, (1..n as VertexId).map(|v| (v - 1, v)))
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    let n32 = n as VertexId;
    build(n, (0..n32).map(|v| (v, (v + 1) % n32)))
}

/// `K_{1,leaves}` with the center at vertex 0.
pub fn star(leaves: usize) -> Graph {
    build(leaves + 1, (1..=leaves as VertexId).map(|v| (0, v)))
}

/// Erdős–Rényi `G(n, p)`, reproducible per seed.
pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n as VertexId {
        for v in u + 1..n as VertexId {
            if rng.random::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    build(n, edges)
}

/// Binary words of length `bits`, adjacent when their Hamming distance is at
/// least `distance` (DIMACS `hamming<bits>-<distance>`).
pub fn hamming(bits: u32, distance: u32) -> Graph {
    let n = 1usize << bits;
    let n32 = n as VertexId;
    build(
        n,
        (0..n32).flat_map(move |u| {
            (u + 1..n32)
                .filter(move |v| (u ^ v).count_ones() >= distance)
                .map(move |v| (u, v))
        }),
    )
}

/// `weight`-subsets of an `points`-set, adjacent when their symmetric
/// difference has at least `distance` elements (DIMACS
/// `johnson<points>-<weight>-<distance>`). Vertices are the subsets'
/// bitmasks in increasing numeric order.
pub fn johnson(points: u32, weight: u32, distance: u32) -> Graph {
    let words: Vec<u64> = (0u64..1 << points)
        .filter(|w| w.count_ones() == weight)
        .collect();
    let mut edges = Vec::new();
    for (i, a) in words.iter().enumerate() {
        for (j, b) in words.iter().enumerate().skip(i + 1) {
            if (a ^ b).count_ones() >= distance {
                edges.push((i as VertexId, j as VertexId));
            }
        }
    }
    build(words.len(), edges)
}

/// Full Keller graph on `{0,1,2,3}^dim`: two words are adjacent when they
/// differ in at least two coordinates and in at least one coordinate by
/// exactly 2 (mod 4).
pub fn keller(dim: u32) -> Graph {
    let n = 4usize.pow(dim);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if keller_adjacent(u, v, dim) {
                edges.push((u as VertexId, v as VertexId));
            }
        }
    }
    build(n, edges)
}

fn keller_adjacent(u: usize, v: usize, dim: u32) -> bool {
    let (mut differ, mut opposite) = (0, false);
    for k in 0..dim {
        let a = (u >> (2 * k)) & 3;
        let b = (v >> (2 * k)) & 3;
        if a != b {
            differ += 1;
            opposite |= (a + 4 - b) % 4 == 2;
        }
    }
    differ >= 2 && opposite
}

/// DIMACS `keller<dim>`: the Keller graph restricted to the neighborhood of
/// the all-zero word. Its clique number is one less than the full graph's.
pub fn keller_dimacs(dim: u32) -> Graph {
    let full = keller(dim);
    let nbhd = full.neighbors(0).to_vec();
    full.induced_subgraph(&nbhd)
}

/// DIMACS `c-fat<n>-<c>`: vertices split into `k = floor(n / (c ln n))`
/// parts laid out on a ring, vertex `i` in part `i mod k`; each part is a
/// clique and consecutive parts are completely joined.
pub fn c_fat(n: usize, c: u32) -> Graph {
    let parts = ((n as f64) / (c as f64 * (n as f64).ln())).floor() as usize;
    assert!(parts >= 3, "c-fat needs at least three parts");
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let (a, b) = (u % parts, v % parts);
            if a == b || (a + 1) % parts == b || (b + 1) % parts == a {
                edges.push((u as VertexId, v as VertexId));
            }
        }
    }
    build(n, edges)
}

/// DIMACS `MANN_a*`: the clique formulation of covering the affine Steiner
/// triple system `AG(dim, 3)`. `mann_a(2)` is `MANN_a9`, `mann_a(3)` is
/// `MANN_a27`.
///
/// There is one vertex per (triple, point-of-triple) incidence followed by
/// one vertex per point. The graph is the complement of: a triangle on each
/// triple's three incidences, plus an edge from each incidence to its
/// point's vertex.
pub fn mann_a(dim: u32) -> Graph {
    let triples = affine_triples(dim);
    let points = 3usize.pow(dim);
    let n = 3 * triples.len() + points;
    let mut conflict = vec![Vec::new(); n];
    for (t, triple) in triples.iter().enumerate() {
        for (i, &point) in triple.iter().enumerate() {
            let a = 3 * t + i;
            for j in 0..3 {
                if i != j {
                    conflict[a].push(3 * t + j);
                }
            }
            let pv = 3 * triples.len() + point;
            conflict[a].push(pv);
            conflict[pv].push(a);
        }
    }
    let mut edges = Vec::new();
    for (u, blocked) in conflict.iter().enumerate() {
        for v in u + 1..n {
            if !blocked.contains(&v) {
                edges.push((u as VertexId, v as VertexId));
            }
        }
    }
    build(n, edges)
}

/// Lines of `AG(dim, 3)`: triples `{x, x+d, x+2d}` with points encoded in
/// base 3.
fn affine_triples(dim: u32) -> Vec<[usize; 3]> {
    let points = 3usize.pow(dim);
    let add = |x: usize, y: usize| -> usize {
        let (mut x, mut y, mut out, mut place) = (x, y, 0, 1);
        for _ in 0..dim {
            out += ((x % 3 + y % 3) % 3) * place;
            x /= 3;
            y /= 3;
            place *= 3;
        }
        out
    };
    let mut lines = Vec::new();
    for x in 0..points {
        for d in 1..points {
            let y = add(x, d);
            let z = add(y, d);
            if x < y && y < z {
                lines.push([x, y, z]);
            }
        }
    }
    lines
}

/// Structured DIMACS benchmark by its conventional name.
pub fn dimacs_instance(name: &str) -> Option<Graph> {
    Some(match name {
        "hamming6-2" => hamming(6, 2),
        "hamming6-4" => hamming(6, 4),
        "hamming8-2" => hamming(8, 2),
        "hamming8-4" => hamming(8, 4),
        "hamming10-2" => hamming(10, 2),
        "hamming10-4" => hamming(10, 4),
        "johnson8-2-4" => johnson(8, 2, 4),
        "johnson8-4-4" => johnson(8, 4, 4),
        "johnson16-2-4" => johnson(16, 2, 4),
        "johnson32-2-4" => johnson(32, 2, 4),
        "keller4" => keller_dimacs(4),
        "keller5" => keller_dimacs(5),
        "c-fat200-1" => c_fat(200, 1),
        "c-fat200-2" => c_fat(200, 2),
        "c-fat200-5" => c_fat(200, 5),
        "c-fat500-1" => c_fat(500, 1),
        "c-fat500-2" => c_fat(500, 2),
        "c-fat500-5" => c_fat(500, 5),
        "c-fat500-10" => c_fat(500, 10),
        "MANN_a9" => mann_a(2),
        "MANN_a27" => mann_a(3),
        _ => return None,
    })
}

/// Names accepted by [`dimacs_instance`].
pub const DIMACS_NAMES: &[&str] = &[
    "hamming6-2",
    "hamming6-4",
    "hamming8-2",
    "hamming8-4",
    "hamming10-2",
    "hamming10-4",
    "johnson8-2-4",
    "johnson8-4-4",
    "johnson16-2-4",
    "johnson32-2-4",
    "keller4",
    "keller5",
    "c-fat200-1",
    "c-fat200-2",
    "c-fat200-5",
    "c-fat500-1",
    "c-fat500-2",
    "c-fat500-5",
    "c-fat500-10",
    "MANN_a9",
    "MANN_a27",
];

fn build<I: IntoIterator<Item = (VertexId, VertexId)>>(n: usize, edges: I) -> Graph {
    Graph::from_edges(n, edges).expect("generated ids are in range")
}
