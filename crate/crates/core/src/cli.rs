//! Command-line front end behind the `maxclique` binary.
//!
//! Exit codes are part of the interface: see [`exit`].

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bench::{self, parse_seconds, run_algorithm, Algorithm, RunOptions};
use crate::community::{communities_from_records, InteractionRecords};
use crate::error::{Error, Result};
use crate::exact::{CliqueResult, VertexOrder};
use crate::families;
use crate::graph::Graph;
use crate::heuristic::largest_clique_per_vertex;
use crate::io::{read_graph, write_graph, Format};
use crate::rmat::{generate_rmat, RmatFamily, RmatParams};

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    /// Bad flags or flag combinations.
    pub const USAGE: i32 = 2;
    /// Unreadable or malformed input.
    pub const INPUT: i32 = 3;
    /// Time limit reached; the best clique found is still printed.
    pub const TIMEOUT: i32 = 4;
    /// Request refused, such as brute force on a graph that is too large.
    pub const REFUSED: i32 = 5;
}

#[derive(Debug, Parser)]
#[command(name = "maxclique", version, about = "Maximum-clique search for large sparse graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Find a maximum clique and print the result as JSON.
    Solve(SolveArgs),
    /// Run a benchmark manifest and write one CSV row per run.
    Bench(BenchArgs),
    /// Print n, m, max degree and the degree histogram as JSON.
    Stats(StatsArgs),
    /// Convert a graph between file formats.
    Convert(ConvertArgs),
    /// Write an R-MAT graph as an edge list.
    GenRmat(GenRmatArgs),
    /// Write one of the built-in benchmark constructions.
    GenFamily(GenFamilyArgs),
    /// Detect overlapping communities in wall/user interaction records.
    Communities(CommunitiesArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AlgoArg {
    Exact,
    Heuristic,
    Cp,
    Brute,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Natural,
    Degree,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PolicyArg {
    Maxdeg,
    Random,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Er,
    Sd1,
    Sd2,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    pub input: PathBuf,
    /// Input format; inferred from the extension when omitted.
    #[arg(long, value_parser = parse_format)]
    pub format: Option<Format>,
    #[arg(long, value_enum, default_value = "exact")]
    pub algo: AlgoArg,
    /// Initial lower bound (exact only).
    #[arg(long)]
    pub lb: Option<usize>,
    /// Seed vertex order (exact only).
    #[arg(long, value_enum)]
    pub order: Option<OrderArg>,
    #[arg(long, env = "MAXCLIQUE_THREADS", default_value_t = 1,
          value_parser = clap::value_parser!(u32).range(1..))]
    pub threads: u32,
    /// Wall-clock limit in seconds (exact and cp).
    #[arg(long, env = "MAXCLIQUE_TIME_LIMIT", value_parser = parse_duration)]
    pub time_limit: Option<Duration>,
    /// Selection policy (heuristic only).
    #[arg(long, value_enum)]
    pub policy: Option<PolicyArg>,
    /// Seed for the random policy.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Print the greedy clique of every vertex as `v: c1 c2 ...` instead.
    #[arg(long)]
    pub per_vertex: bool,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    pub manifest: PathBuf,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct StatsArgs {
    pub input: PathBuf,
    #[arg(long, value_parser = parse_format)]
    pub format: Option<Format>,
}

#[derive(Debug, Args)]
pub struct ConvertArgs {
    pub input: PathBuf,
    #[arg(long, value_parser = parse_format)]
    pub from: Option<Format>,
    #[arg(long, value_parser = parse_format)]
    pub to: Format,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct GenRmatArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    #[arg(long)]
    pub scale: u32,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, default_value_t = 8)]
    pub edge_factor: u32,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct GenFamilyArgs {
    /// Instance name, such as `hamming6-4` or `c-fat200-5`.
    pub name: String,
    #[arg(long, value_parser = parse_format, default_value = "dimacs")]
    pub format: Format,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct CommunitiesArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// Keep edges with Jaccard weight strictly above this value.
    #[arg(long)]
    pub threshold: f64,
    #[arg(long)]
    pub out: PathBuf,
}

fn parse_format(s: &str) -> std::result::Result<Format, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_duration(s: &str) -> std::result::Result<Duration, String> {
    parse_seconds(s).map_err(|e| e.to_string())
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit code. Diagnostics go to stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { exit::USAGE } else { exit::OK };
        }
    };
    let stdout = io::stdout();
    match execute(cli.command, &mut stdout.lock()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidParameter(_) => exit::USAGE,
        Error::TooLarge { .. } => exit::REFUSED,
        _ => exit::INPUT,
    }
}

/// Runs a parsed command, writing its report to `out`.
pub fn execute(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Solve(a) => cmd_solve(&a, out),
        Command::Bench(a) => cmd_bench(&a.manifest, &a.out).map(|_| exit::OK),
        Command::Stats(a) => {
            let g = read_graph(&a.input, a.format)?;
            print_json(out, &bench::graph_stats(&g))?;
            Ok(exit::OK)
        }
        Command::Convert(a) => {
            let g = read_graph(&a.input, a.from)?;
            write_graph(&g, &a.out, a.to)?;
            Ok(exit::OK)
        }
        Command::GenRmat(a) => {
            let family = match a.family {
                FamilyArg::Er => RmatFamily::Er,
                FamilyArg::Sd1 => RmatFamily::Sd1,
                FamilyArg::Sd2 => RmatFamily::Sd2,
            };
            let p = RmatParams {
                edge_factor: a.edge_factor,
                ..family.params(a.scale, a.seed)
            };
            write_graph(&generate_rmat(&p)?, &a.out, Format::EdgeList)?;
            Ok(exit::OK)
        }
        Command::GenFamily(a) => {
            let g = families::dimacs_instance(&a.name).ok_or_else(|| {
                Error::InvalidParameter(format!(
                    "unknown instance `{}`; known: {}",
                    a.name,
                    families::DIMACS_NAMES.join(", ")
                ))
            })?;
            write_graph(&g, &a.out, a.format)?;
            Ok(exit::OK)
        }
        Command::Communities(a) => {
            if !(0.0..=1.0).contains(&a.threshold) {
                return Err(Error::InvalidParameter(format!(
                    "threshold {} outside [0, 1]",
                    a.threshold
                )));
            }
            let records = InteractionRecords::parse(BufReader::new(File::open(&a.input)?))?;
            let report = communities_from_records(&records, a.threshold);
            let mut w = BufWriter::new(File::create(&a.out)?);
            serde_json::to_writer_pretty(&mut w, &report)?;
            writeln!(w)?;
            w.flush()?;
            Ok(exit::OK)
        }
    }
}

/// `solve` output: the solver result plus the input summary and, for the
/// heuristic, the selection policy.
#[derive(Debug, Serialize)]
pub struct SolveReport {
    pub graph: String,
    pub n: usize,
    pub m: usize,
    pub algorithm: Algorithm,
    #[serde(flatten)]
    pub result: CliqueResult,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub policy: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

fn usage(msg: &str) -> Error {
    Error::InvalidParameter(msg.to_owned())
}

/// Checks flag combinations and maps the flags to an algorithm and its
/// options.
pub fn solve_plan(a: &SolveArgs) -> Result<(Algorithm, RunOptions)> {
    let heuristic = a.algo == AlgoArg::Heuristic;
    if !heuristic && (a.policy.is_some() || a.seed.is_some() || a.per_vertex) {
        return Err(usage("--policy, --seed and --per-vertex require --algo heuristic"));
    }
    if a.algo != AlgoArg::Exact && (a.lb.is_some() || a.order.is_some()) {
        return Err(usage("--lb and --order require --algo exact"));
    }
    if a.seed.is_some() && a.policy != Some(PolicyArg::Random) {
        return Err(usage("--seed requires --policy random"));
    }
    if a.per_vertex && a.policy.is_some() {
        return Err(usage("--per-vertex always uses max-degree selection"));
    }
    let algo = match (a.algo, a.policy) {
        (AlgoArg::Exact, _) => Algorithm::Exact,
        (AlgoArg::Heuristic, Some(PolicyArg::Random)) => Algorithm::Random,
        (AlgoArg::Heuristic, _) => Algorithm::Heuristic,
        (AlgoArg::Cp, _) => Algorithm::Cp,
        (AlgoArg::Brute, _) => Algorithm::Brute,
    };
    let opts = RunOptions {
        lb: a.lb.unwrap_or(0),
        ordering: match a.order {
            Some(OrderArg::Degree) => VertexOrder::DegreeDescending,
            _ => VertexOrder::NaturalIndex,
        },
        threads: a.threads as usize,
        time_limit: a.time_limit,
        seed: a.seed.unwrap_or(0),
    };
    Ok((algo, opts))
}

pub fn cmd_solve(a: &SolveArgs, out: &mut dyn Write) -> Result<i32> {
    let (algo, opts) = solve_plan(a)?;
    let g = read_graph(&a.input, a.format)?;
    if a.per_vertex {
        write_per_vertex(&g, out)?;
        return Ok(exit::OK);
    }
    let result = run_algorithm(&g, algo, &opts)?;
    let code = if result.exact { exit::OK } else { exit::TIMEOUT };
    let report = SolveReport {
        graph: a.input.display().to_string(),
        n: g.n(),
        m: g.m(),
        algorithm: algo,
        policy: match algo {
            Algorithm::Heuristic => Some("maxdeg"),
            Algorithm::Random => Some("random"),
            _ => None,
        },
        seed: (algo == Algorithm::Random).then_some(opts.seed),
        result,
    };
    print_json(out, &report)?;
    Ok(code)
}

/// One line per vertex: `v: c1 c2 ... ck`.
pub fn write_per_vertex(g: &Graph, out: &mut dyn Write) -> Result<()> {
    let mut w = BufWriter::new(out);
    for (v, clique) in largest_clique_per_vertex(g).iter().enumerate() {
        write!(w, "{v}:")?;
        for c in clique {
            write!(w, " {c}")?;
        }
        writeln!(w)?;
    }
    w.flush()?;
    Ok(())
}

pub fn cmd_bench(manifest: &Path, out: &Path) -> Result<()> {
    let text = std::fs::read_to_string(manifest)?;
    let base = manifest.parent().unwrap_or(Path::new("."));
    let entries = bench::parse_manifest(&text, base)?;
    let rows = bench::run_manifest(&entries);
    bench::write_csv(&rows, BufWriter::new(File::create(out)?))
}

fn print_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}
