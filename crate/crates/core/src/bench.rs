//! Benchmark harness: a manifest of graphs and algorithms in, CSV rows out.
//!
//! A manifest has one entry per line:
//!
//! ```text
//! # name        source                      options
//! hamming6-4    family:hamming6-4           algos=exact,heuristic,cp
//! brock200_2    dimacs/brock200_2.clq       algos=exact time_limit=60
//! er15          rmat:er:15:1                algos=heuristic
//! ```
//!
//! Sources are a file path (relative to the manifest), `family:<name>` for
//! a built-in benchmark construction, or `rmat:<family>:<scale>:<seed>`.
//! Options are `algos=` (comma list of `exact`, `heuristic`, `random`,
//! `cp`, `brute`), `format=`, `order=natural|degree`, `lb=`, `threads=`,
//! `time_limit=` (seconds) and `seed=` (for `random`).
//!
//! Entries run sequentially. A graph that cannot be loaded produces one row
//! per algorithm with status `missing` or `error`, and the run continues.

use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::baseline::{brute_force_clique, max_clique_cp};
use crate::error::{Error, Result};
use crate::exact::{max_clique, CliqueResult, PruneStats, SolverConfig, VertexOrder};
use crate::families;
use crate::graph::Graph;
use crate::heuristic::{max_clique_heuristic, SelectionPolicy};
use crate::io::{read_graph, Format};
use crate::rmat::{generate_rmat, RmatFamily};

/// Solver selectable from the command line and from manifests.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Algorithm {
    Exact,
    /// Max-degree heuristic.
    Heuristic,
    /// Heuristic with uniformly random selection.
    Random,
    Cp,
    Brute,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Exact => "exact",
            Algorithm::Heuristic => "heuristic",
            Algorithm::Random => "random",
            Algorithm::Cp => "cp",
            Algorithm::Brute => "brute",
        }
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(Algorithm::Exact),
            "heuristic" => Ok(Algorithm::Heuristic),
            "random" => Ok(Algorithm::Random),
            "cp" => Ok(Algorithm::Cp),
            "brute" => Ok(Algorithm::Brute),
            other => Err(Error::InvalidParameter(format!("unknown algorithm `{other}`"))),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Knobs shared by every algorithm; each one reads the fields it needs.
#[derive(Clone, Debug, PartialEq)]
pub struct RunOptions {
    pub lb: usize,
    pub ordering: VertexOrder,
    pub threads: usize,
    pub time_limit: Option<Duration>,
    pub seed: u64,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            lb: 0,
            ordering: VertexOrder::NaturalIndex,
            threads: 1,
            time_limit: None,
            seed: 0,
        }
    }
}

/// Runs one algorithm. Only `brute` can fail, on graphs over its size cap.
pub fn run_algorithm(g: &Graph, algo: Algorithm, opts: &RunOptions) -> Result<CliqueResult> {
    Ok(match algo {
        Algorithm::Exact => {
            let cfg = SolverConfig {
                lb: opts.lb,
                ordering: opts.ordering,
                threads: opts.threads,
                time_limit: opts.time_limit,
            };
            max_clique(g, &cfg)
        }
        Algorithm::Heuristic => max_clique_heuristic(g, SelectionPolicy::MaxDegree),
        Algorithm::Random => {
            max_clique_heuristic(g, SelectionPolicy::UniformRandom { seed: opts.seed })
        }
        Algorithm::Cp => max_clique_cp(g, opts.time_limit),
        Algorithm::Brute => {
            let start = Instant::now();
            let witness = brute_force_clique(g)?;
            CliqueResult {
                size: witness.len(),
                witness,
                stats: PruneStats::default(),
                elapsed: start.elapsed().as_secs_f64(),
                exact: true,
                lb_unverified: false,
            }
        }
    })
}

/// Where a manifest entry's graph comes from.
#[derive(Clone, Debug, PartialEq)]
pub enum GraphSource {
    File {
        path: PathBuf,
        format: Option<Format>,
    },
    /// A construction from [`families::dimacs_instance`].
    Family(String),
    Rmat {
        family: RmatFamily,
        scale: u32,
        seed: u64,
    },
}

impl GraphSource {
    pub fn load(&self) -> Result<Graph> {
        match self {
            GraphSource::File { path, format } => read_graph(path, *format),
            GraphSource::Family(name) => families::dimacs_instance(name)
                .ok_or_else(|| Error::InvalidParameter(format!("unknown family instance `{name}`"))),
            GraphSource::Rmat {
                family,
                scale,
                seed,
            } => generate_rmat(&family.params(*scale, *seed)),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ManifestEntry {
    pub name: String,
    pub source: GraphSource,
    pub algos: Vec<Algorithm>,
    pub options: RunOptions,
}

/// Parses manifest text. Relative file sources resolve against `base_dir`.
pub fn parse_manifest(text: &str, base_dir: &Path) -> Result<Vec<ManifestEntry>> {
    let mut entries = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| Error::Manifest {
            line: line_no,
            message,
        };
        let mut fields = line.split_whitespace();
        let name = fields.next().unwrap_or_default().to_owned();
        let source = fields
            .next()
            .ok_or_else(|| err("expected `name source [options]`".into()))?;

        let mut algos = vec![Algorithm::Exact];
        let mut options = RunOptions::default();
        let mut format = None;
        for opt in fields {
            let (key, value) = opt
                .split_once('=')
                .ok_or_else(|| err(format!("expected key=value, found `{opt}`")))?;
            let bad = |e: &dyn fmt::Display| err(format!("{key}: {e}"));
            match key {
                "algos" => {
                    algos = value
                        .split(',')
                        .map(str::parse)
                        .collect::<Result<_>>()
                        .map_err(|e| bad(&e))?;
                }
                "format" => format = Some(value.parse::<Format>().map_err(|e| bad(&e))?),
                "order" => {
                    options.ordering = match value {
                        "natural" => VertexOrder::NaturalIndex,
                        "degree" => VertexOrder::DegreeDescending,
                        _ => return Err(bad(&"expected natural or degree")),
                    }
                }
                "lb" => options.lb = value.parse().map_err(|e| bad(&e))?,
                "threads" => {
                    options.threads = value.parse().map_err(|e| bad(&e))?;
                    if options.threads == 0 {
                        return Err(bad(&"must be at least 1"));
                    }
                }
                "time_limit" => options.time_limit = Some(parse_seconds(value).map_err(|e| bad(&e))?),
                "seed" => options.seed = value.parse().map_err(|e| bad(&e))?,
                _ => return Err(err(format!("unknown option `{key}`"))),
            }
        }

        let source = parse_source(source, format, base_dir).map_err(|e| err(e.to_string()))?;
        entries.push(ManifestEntry {
            name,
            source,
            algos,
            options,
        });
    }
    Ok(entries)
}

fn parse_source(s: &str, format: Option<Format>, base_dir: &Path) -> Result<GraphSource> {
    if let Some(name) = s.strip_prefix("family:") {
        return Ok(GraphSource::Family(name.to_owned()));
    }
    if let Some(spec) = s.strip_prefix("rmat:") {
        let parts: Vec<&str> = spec.split(':').collect();
        let [family, scale, seed] = parts[..] else {
            return Err(Error::InvalidParameter(
                "expected rmat:<family>:<scale>:<seed>".into(),
            ));
        };
        let invalid = |what: &str| Error::InvalidParameter(format!("bad R-MAT {what}"));
        return Ok(GraphSource::Rmat {
            family: family.parse()?,
            scale: scale.parse().map_err(|_| invalid("scale"))?,
            seed: seed.parse().map_err(|_| invalid("seed"))?,
        });
    }
    Ok(GraphSource::File {
        path: base_dir.join(s),
        format,
    })
}

/// Non-negative, finite seconds.
pub fn parse_seconds(s: &str) -> Result<Duration> {
    let secs: f64 = s
        .parse()
        .map_err(|_| Error::InvalidParameter(format!("`{s}` is not a number of seconds")))?;
    Duration::try_from_secs_f64(secs)
        .map_err(|_| Error::InvalidParameter(format!("`{s}` is not a valid duration")))
}

/// Outcome class of one benchmark row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RunStatus {
    Ok,
    Timeout,
    Missing,
    Error,
}

/// One (graph, algorithm) run. Field order is the CSV column order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub graph: String,
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub max_degree: Option<usize>,
    pub algorithm: Algorithm,
    pub policy: Option<String>,
    pub seed: Option<u64>,
    pub size: Option<usize>,
    pub elapsed: Option<f64>,
    pub p1: Option<u64>,
    pub p2: Option<u64>,
    pub p3: Option<u64>,
    pub p4: Option<u64>,
    pub p5: Option<u64>,
    pub exact: Option<bool>,
    pub status: RunStatus,
    pub detail: String,
}

/// Header row; also serves as the CSV schema version marker.
pub const CSV_HEADER: [&str; 17] = [
    "graph",
    "n",
    "m",
    "max_degree",
    "algorithm",
    "policy",
    "seed",
    "size",
    "elapsed",
    "p1",
    "p2",
    "p3",
    "p4",
    "p5",
    "exact",
    "status",
    "detail",
];

impl BenchRow {
    fn failed(name: &str, algo: Algorithm, status: RunStatus, detail: String) -> Self {
        BenchRow {
            graph: name.to_owned(),
            n: None,
            m: None,
            max_degree: None,
            algorithm: algo,
            policy: None,
            seed: None,
            size: None,
            elapsed: None,
            p1: None,
            p2: None,
            p3: None,
            p4: None,
            p5: None,
            exact: None,
            status,
            detail,
        }
    }

    fn from_result(name: &str, g: &Graph, algo: Algorithm, opts: &RunOptions, r: &CliqueResult) -> Self {
        let (policy, seed) = match algo {
            Algorithm::Heuristic => (Some("maxdeg".to_owned()), None),
            Algorithm::Random => (Some("random".to_owned()), Some(opts.seed)),
            _ => (None, None),
        };
        let status = if r.exact { RunStatus::Ok } else { RunStatus::Timeout };
        BenchRow {
            graph: name.to_owned(),
            n: Some(g.n()),
            m: Some(g.m()),
            max_degree: Some(g.max_degree()),
            algorithm: algo,
            policy,
            seed,
            size: Some(r.size),
            elapsed: Some(r.elapsed),
            p1: Some(r.stats.p1),
            p2: Some(r.stats.p2),
            p3: Some(r.stats.p3),
            p4: Some(r.stats.p4),
            p5: Some(r.stats.p5),
            exact: Some(r.exact),
            status,
            detail: if r.lb_unverified {
                "lb-unverified".to_owned()
            } else {
                String::new()
            },
        }
    }
}

/// Loads the entry's graph once and runs each of its algorithms.
pub fn run_entry(entry: &ManifestEntry) -> Vec<BenchRow> {
    let g = match entry.source.load() {
        Ok(g) => g,
        Err(e) => {
            let status = match &e {
                Error::Io(io) if io.kind() == std::io::ErrorKind::NotFound => RunStatus::Missing,
                _ => RunStatus::Error,
            };
            return entry
                .algos
                .iter()
                .map(|&a| BenchRow::failed(&entry.name, a, status, e.to_string()))
                .collect();
        }
    };
    entry
        .algos
        .iter()
        .map(|&algo| match run_algorithm(&g, algo, &entry.options) {
            Ok(r) => BenchRow::from_result(&entry.name, &g, algo, &entry.options, &r),
            Err(e) => BenchRow::failed(&entry.name, algo, RunStatus::Error, e.to_string()),
        })
        .collect()
}

/// Runs every entry in order.
pub fn run_manifest(entries: &[ManifestEntry]) -> Vec<BenchRow> {
    entries.iter().flat_map(run_entry).collect()
}

/// RFC 4180 CSV with a header row, written even when `rows` is empty.
pub fn write_csv<W: Write>(rows: &[BenchRow], out: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    w.write_record(CSV_HEADER)?;
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

/// Structural summary of a graph.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GraphStats {
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    /// Degree to number of vertices with that degree.
    pub degree_histogram: std::collections::BTreeMap<usize, usize>,
}

pub fn graph_stats(g: &Graph) -> GraphStats {
    GraphStats {
        n: g.n(),
        m: g.m(),
        max_degree: g.max_degree(),
        degree_histogram: g.degree_histogram(),
    }
}
