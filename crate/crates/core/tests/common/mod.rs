#![allow(dead_code)]

use std::path::{Path, PathBuf};

use maxclique::io::read_graph;
use maxclique::{families, Graph};

/// Root for benchmark files that cannot be constructed, such as the random
/// DIMACS instances. `MAXCLIQUE_DATA_DIR` overrides `<repo>/data`.
pub fn data_dir() -> PathBuf {
    std::env::var_os("MAXCLIQUE_DATA_DIR")
        .map(PathBuf::from)
        .unwrap_or_else(|| Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data"))
}

/// First existing `<data>/<sub>/<stem>.<ext>` for the given extensions.
pub fn find_data(sub: &str, stem: &str, exts: &[&str]) -> Option<PathBuf> {
    let dir = data_dir().join(sub);
    exts.iter()
        .map(|ext| dir.join(format!("{stem}.{ext}")))
        .find(|p| p.is_file())
}

/// A DIMACS benchmark: built in when constructible, else read from
/// `<data>/dimacs/<name>.clq`.
pub fn dimacs(name: &str) -> Option<Graph> {
    families::dimacs_instance(name).or_else(|| {
        let path = find_data("dimacs", name, &["clq", "col"])?;
        Some(read_graph(&path, None).unwrap_or_else(|e| panic!("{}: {e}", path.display())))
    })
}

/// Published DIMACS results: (name, n, m, clique number, heuristic size).
pub const DIMACS_TABLE: &[(&str, usize, usize, usize, usize)] = &[
    ("brock200_1", 200, 14834, 21, 18),
    ("brock200_2", 200, 9876, 12, 10),
    ("brock200_3", 200, 12048, 15, 12),
    ("brock200_4", 200, 13089, 17, 14),
    ("c-fat200-1", 200, 1534, 12, 12),
    ("c-fat200-2", 200, 3235, 24, 24),
    ("c-fat200-5", 200, 8473, 58, 58),
    ("c-fat500-1", 500, 4459, 14, 14),
    ("c-fat500-2", 500, 9139, 26, 26),
    ("c-fat500-5", 500, 23191, 64, 64),
    ("hamming6-2", 64, 1824, 32, 32),
    ("hamming6-4", 64, 704, 4, 4),
    ("hamming8-2", 256, 31616, 128, 128),
    ("hamming8-4", 256, 20864, 16, 16),
    ("hamming10-2", 1024, 518656, 512, 512),
    ("johnson8-2-4", 28, 210, 4, 4),
    ("johnson8-4-4", 70, 1855, 14, 14),
    ("johnson16-2-4", 120, 5460, 8, 8),
    ("keller4", 171, 9435, 11, 11),
    ("MANN_a9", 45, 918, 16, 16),
    ("MANN_a27", 378, 70551, 126, 125),
    ("p_hat300-1", 300, 10933, 8, 8),
    ("p_hat300-2", 300, 21928, 25, 24),
    ("p_hat500-1", 500, 31569, 9, 9),
    ("p_hat500-2", 500, 62946, 36, 34),
    ("p_hat700-1", 700, 60999, 11, 9),
    ("p_hat1000-1", 1000, 122253, 10, 10),
    ("san200_0.7_1", 200, 13930, 30, 16),
];

pub fn table_row(name: &str) -> (usize, usize, usize, usize) {
    let &(_, n, m, omega, heur) = DIMACS_TABLE
        .iter()
        .find(|r| r.0 == name)
        .unwrap_or_else(|| panic!("{name} not in table"));
    (n, m, omega, heur)
}
