//! Acceptance criteria, one status line each.
//!
//! Inputs that can only come from outside (random DIMACS instances, real
//! networks) are read from the data directory; see `common::data_dir`.
//! When such an input is absent its checks are reported as not run, and the
//! criterion line says INCOMPLETE or SKIP instead of PASS. Setting
//! `MAXCLIQUE_REQUIRE_DATA=1` turns every absent input into a failure.

mod common;

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use common::{dimacs, find_data, table_row, DIMACS_TABLE};
use maxclique::community::{build_cooccurrence_graph, detect_communities, InteractionRecords};
use maxclique::io::read_graph;
use maxclique::*;

#[derive(Default)]
struct Report {
    failures: Vec<String>,
    missing: Vec<String>,
    ran: usize,
    notes: String,
}

impl Report {
    fn check(&mut self, ok: bool, what: impl Into<String>) {
        self.ran += 1;
        if !ok {
            self.failures.push(what.into());
        }
    }

    fn missing(&mut self, input: &str) {
        self.missing.push(input.to_owned());
    }

    fn note(&mut self, text: impl AsRef<str>) {
        if !self.notes.is_empty() {
            self.notes.push_str("; ");
        }
        self.notes.push_str(text.as_ref());
    }

    /// (label, failed)
    fn verdict(&self, require_data: bool) -> (&'static str, bool) {
        if !self.failures.is_empty() || (require_data && !self.missing.is_empty()) {
            ("FAIL", true)
        } else if self.ran == 0 {
            ("SKIP", false)
        } else if !self.missing.is_empty() {
            ("INCOMPLETE", false)
        } else {
            ("PASS", false)
        }
    }
}

fn exact(g: &Graph) -> CliqueResult {
    max_clique(g, &SolverConfig::default())
}

fn sound(g: &Graph, r: &CliqueResult) -> bool {
    r.witness.len() == r.size && verify_clique(g, &r.witness)
}

/// DIMACS exact clique numbers on the five headline instances.
fn c1(rep: &mut Report) {
    let start = Instant::now();
    for name in ["hamming6-4", "johnson8-4-4", "keller4", "c-fat200-5", "brock200_2"] {
        let Some(g) = dimacs(name) else {
            rep.missing(name);
            continue;
        };
        let (_, _, omega, _) = table_row(name);
        let r = exact(&g);
        rep.check(r.exact && r.size == omega && sound(&g, &r), format!("{name}: got {} want {omega}", r.size));
        rep.note(format!("{name}={} ({:.2}s)", r.size, r.elapsed));
    }
    let total = start.elapsed();
    rep.check(total < Duration::from_secs(300), format!("total {total:?} over 5 min"));
}

/// Extended DIMACS regression.
fn c2(rep: &mut Report) {
    for name in [
        "c-fat200-1", "c-fat200-2", "c-fat200-5", "c-fat500-1", "c-fat500-2", "c-fat500-5",
        "hamming6-2", "johnson16-2-4", "p_hat300-1", "MANN_a9",
    ] {
        let Some(g) = dimacs(name) else {
            rep.missing(name);
            continue;
        };
        let (n, m, omega, _) = table_row(name);
        rep.check((g.n(), g.m()) == (n, m), format!("{name}: (n, m) = ({}, {})", g.n(), g.m()));
        let r = exact(&g);
        rep.check(r.exact && r.size == omega && sound(&g, &r), format!("{name}: got {} want {omega}", r.size));
        rep.note(format!("{name}={}", r.size));
    }
}

/// Exact, Carraghan–Pardalos and enumeration agree on small random graphs.
fn c3(rep: &mut Report) {
    let start = Instant::now();
    let probs = [0.1, 0.3, 0.5, 0.7, 0.9];
    let mut count = 0;
    for i in 0..200u64 {
        let n = 1 + (i % 20) as usize;
        let p = probs[((i / 20) % 5) as usize];
        let g = families::gnp(n, p, 1000 + i);
        let oracle = brute_force(&g).unwrap();
        let e = exact(&g);
        let cp = max_clique_cp(&g, None);
        rep.check(
            e.size == oracle && cp.size == oracle && sound(&g, &e) && sound(&g, &cp),
            format!("graph {i} (n={n}, p={p}): exact {} cp {} oracle {oracle}", e.size, cp.size),
        );
        count += 1;
    }
    let elapsed = start.elapsed();
    rep.check(elapsed < Duration::from_secs(60), format!("took {elapsed:?}"));
    rep.note(format!("{count} graphs in {:.2}s", elapsed.as_secs_f64()));
}

/// Pruning counters on the published counter instances. p4 is informational.
fn c4(rep: &mut Report) {
    let rows: [(&str, u64, u64); 5] = [
        ("hamming6-4", 704, 583),
        ("johnson8-4-4", 1855, 136_007),
        ("keller4", 9435, 8_834_190),
        ("c-fat200-5", 8473, 70_449),
        ("brock200_2", 9876, 349_427),
    ];
    for (name, p2, published_p4) in rows {
        let Some(g) = dimacs(name) else {
            rep.missing(name);
            continue;
        };
        let s = exact(&g).stats;
        rep.check(
            (s.p1, s.p2, s.p3, s.p5) == (0, p2, 0, 0),
            format!("{name}: (p1,p2,p3,p5) = ({},{},{},{})", s.p1, s.p2, s.p3, s.p5),
        );
        rep.note(format!("{name} p4={} (published {published_p4})", s.p4));
    }
}

/// p2 = m whenever a natural-order run has p1 = p3 = 0.
fn c5(rep: &mut Report) {
    let mut applicable = 0;
    for i in 0..300u64 {
        let n = 10 + (i % 90) as usize;
        let p = 0.05 + 0.6 * ((i * 37) % 100) as f64 / 100.0;
        let g = families::gnp(n, p, 5000 + i);
        let s = exact(&g).stats;
        if s.p1 == 0 && s.p3 == 0 {
            applicable += 1;
            rep.check(s.p2 == g.m() as u64, format!("graph {i}: p2 {} m {}", s.p2, g.m()));
        }
    }
    rep.check(applicable >= 100, format!("only {applicable} runs had p1 = p3 = 0"));
    rep.note(format!("{applicable}/300 random graphs qualified"));
}

/// Heuristic soundness on co-run instances and its values on the headline
/// instances.
fn c6(rep: &mut Report) {
    let want: [(&str, usize, usize); 5] = [
        ("hamming6-4", 4, 4),
        ("johnson8-4-4", 14, 14),
        ("keller4", 11, 11),
        ("c-fat200-5", 58, 58),
        ("brock200_2", 10, 12),
    ];
    for (name, lo, hi) in want {
        let Some(g) = dimacs(name) else {
            rep.missing(name);
            continue;
        };
        let h = max_clique_heuristic(&g, SelectionPolicy::MaxDegree);
        let e = exact(&g);
        rep.check(sound(&g, &h) && h.size <= e.size, format!("{name}: unsound heuristic"));
        rep.check((lo..=hi).contains(&h.size), format!("{name}: heuristic {} outside [{lo}, {hi}]", h.size));
        rep.note(format!("{name}={}", h.size));
    }
    for i in 0..100u64 {
        let g = families::gnp(20 + (i % 60) as usize, 0.1 + (i % 8) as f64 * 0.1, 9000 + i);
        let e = exact(&g);
        for policy in [SelectionPolicy::MaxDegree, SelectionPolicy::UniformRandom { seed: i }] {
            let h = max_clique_heuristic(&g, policy);
            rep.check(sound(&g, &h) && h.size <= e.size, format!("random graph {i}: {policy}"));
        }
    }
}

/// Heuristic accuracy over the runnable part of the published DIMACS table.
fn c7(rep: &mut Report) {
    let (mut total, mut optimal) = (0, 0);
    let mut worst = f64::INFINITY;
    for &(name, _, _, omega, _) in DIMACS_TABLE {
        let Some(g) = dimacs(name) else {
            rep.missing(name);
            continue;
        };
        let h = max_clique_heuristic(&g, SelectionPolicy::MaxDegree);
        rep.check(sound(&g, &h) && h.size <= omega, format!("{name}: unsound"));
        let ratio = h.size as f64 / omega as f64;
        rep.check(ratio >= 0.8, format!("{name}: {} of {omega}", h.size));
        worst = worst.min(ratio);
        total += 1;
        optimal += usize::from(h.size == omega);
        if name == "MANN_a27" {
            rep.check(h.size as f64 >= 0.83 * 126.0, "MANN_a27 below 0.83 of 126");
        }
    }
    rep.check(total > 0 && optimal * 10 >= total * 6, format!("optimal on {optimal}/{total}"));
    rep.note(format!("optimal on {optimal}/{total}, worst ratio {worst:.3}"));
}

/// R-MAT families at scale 17, three seeds each, majority rule.
fn c8(rep: &mut Report) {
    for (family, band) in [(RmatFamily::Er, 3..=3), (RmatFamily::Sd1, 5..=7)] {
        let mut hits = 0;
        let mut sizes = Vec::new();
        for seed in 1..=3 {
            let g = generate_rmat(&family.params(17, seed)).unwrap();
            let r = max_clique(&g, &SolverConfig::default().with_time_limit(Duration::from_secs(60)));
            rep.check(r.exact && r.elapsed < 60.0, format!("{family} seed {seed}: did not finish in 60s"));
            rep.check(sound(&g, &r), format!("{family} seed {seed}: bad witness"));
            hits += usize::from(band.contains(&r.size));
            sizes.push(r.size);
        }
        rep.check(hits >= 2, format!("{family}: clique numbers {sizes:?}, want {band:?} for 2 of 3"));
        rep.note(format!("{family} {sizes:?}"));
    }
}

/// Real networks, only when present locally.
fn c9(rep: &mut Report) {
    let exts = ["mtx", "txt", "el", "edges", "clq"];
    match find_data("real", "cond-mat-2003", &exts) {
        Some(path) => {
            let g = read_graph(&path, None).unwrap();
            let e = exact(&g);
            let h = max_clique_heuristic(&g, SelectionPolicy::MaxDegree);
            rep.check(e.size == 25 && h.size == 25, format!("cond-mat-2003: exact {} heuristic {}", e.size, h.size));
        }
        None => rep.missing("cond-mat-2003"),
    }
    match find_data("real", "as-Skitter", &exts) {
        Some(path) => {
            let g = read_graph(&path, None).unwrap();
            let h = max_clique_heuristic(&g, SelectionPolicy::MaxDegree);
            rep.check(h.size >= 66 && sound(&g, &h), format!("as-Skitter: heuristic {}", h.size));
        }
        None => rep.missing("as-Skitter"),
    }
}

/// Size is identical across thread counts, 30 repetitions.
fn c10(rep: &mut Report) {
    let graphs = [
        ("keller4", families::dimacs_instance("keller4").unwrap()),
        ("rmat_sd1 scale 15", generate_rmat(&RmatFamily::Sd1.params(15, 1)).unwrap()),
    ];
    for (name, g) in &graphs {
        let reference = exact(g).size;
        let mut runs = 0;
        for _ in 0..30 {
            for threads in [1, 2, 8] {
                let r = max_clique(g, &SolverConfig::default().with_threads(threads));
                rep.check(r.size == reference && sound(g, &r), format!("{name}: {threads} threads gave {}", r.size));
                runs += 1;
            }
        }
        rep.note(format!("{name}: {runs} runs, size {reference}"));
    }
}

/// Community fixtures and hand-computed Jaccard weights.
fn c11(rep: &mut Report) {
    let bowtie = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
    rep.check(
        detect_communities(&bowtie) == vec![vec![0, 1, 2], vec![2, 3, 4]],
        "two triangles sharing a vertex",
    );
    rep.check(detect_communities(&families::complete(4)) == vec![vec![0, 1, 2, 3]], "K4");
    rep.check(detect_communities(&Graph::empty(3)).is_empty(), "edgeless");

    let mut records = InteractionRecords::new();
    for (wall, user) in [
        ("A", "1"), ("A", "2"), ("A", "3"),
        ("B", "2"), ("B", "3"), ("B", "4"),
        ("C", "3"), ("C", "5"),
        ("D", "1"), ("D", "2"), ("D", "3"),
    ] {
        records.push(wall, user);
    }
    let wg = build_cooccurrence_graph(&records);
    // A=0 B=1 C=2 D=3
    let expected = [
        (0, 1, 2.0 / 4.0),
        (0, 2, 1.0 / 4.0),
        (0, 3, 1.0),
        (1, 2, 1.0 / 4.0),
        (1, 3, 2.0 / 4.0),
        (2, 3, 1.0 / 4.0),
    ];
    for (u, v, w) in expected {
        let got = wg.weight(u, v);
        rep.check(
            got.is_some_and(|x| (x - w).abs() <= 1e-12),
            format!("weight({u},{v}) = {got:?}, want {w}"),
        );
    }
    rep.check(wg.graph.m() == expected.len(), "unexpected co-occurrence edges");
}

type Criterion = fn(&mut Report);

fn main() {
    let require_data = std::env::var_os("MAXCLIQUE_REQUIRE_DATA").is_some_and(|v| v != "0");
    let criteria: [(&str, Criterion); 11] = [
        ("DIMACS exact sizes", c1),
        ("extended DIMACS regression", c2),
        ("oracle equivalence", c3),
        ("pruning-counter identities", c4),
        ("general counter law", c5),
        ("heuristic soundness and quality", c6),
        ("heuristic accuracy over the DIMACS suite", c7),
        ("R-MAT family behavior", c8),
        ("real-graph spot check", c9),
        ("parallel determinism", c10),
        ("community pipeline", c11),
    ];
    let mut failed = 0;
    for (i, (title, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut rep = Report::default();
        run(&mut rep);
        let (label, bad) = rep.verdict(require_data);
        failed += usize::from(bad);
        let mut line = format!("criterion {:>2} {label}: {title} [{:.1}s]", i + 1, start.elapsed().as_secs_f64());
        if !rep.notes.is_empty() {
            write!(line, " | {}", rep.notes).unwrap();
        }
        if !rep.missing.is_empty() {
            write!(line, " | input not present: {}", rep.missing.join(", ")).unwrap();
        }
        for f in rep.failures.iter().take(5) {
            write!(line, "\n      failed: {f}").unwrap();
        }
        println!("{line}");
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
