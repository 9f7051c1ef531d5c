//! Heuristic run time over a doubling R-MAT series, as plot-ready CSV.
//!
//! cargo run --release --example heuristic_scaling -- 14 19 > scaling.csv

use maxclique::{generate_rmat, heuristic_scaling_probe, RmatFamily, ScalingSample};

fn main() -> maxclique::Result<()> {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<u32>().expect("scale"));
    let from = args.next().unwrap_or(12);
    let to = args.next().unwrap_or(17);
    println!("family,{}", ScalingSample::CSV_HEADER);
    for family in RmatFamily::ALL {
        for scale in from..=to {
            let g = generate_rmat(&family.params(scale, 1))?;
            println!("{},{}", family.name(), heuristic_scaling_probe(&g).csv_row());
        }
    }
    Ok(())
}
