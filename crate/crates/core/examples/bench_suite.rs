//! Algorithm throughput on an original and its scale-8 replica.

use recon::bench::{timed_suite, SuiteOptions};
use recon::graph::read_edge_list;
use recon::recon::replicate;

fn main() -> recon::Result<()> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/data/dolphins.txt").into());
    let g = read_edge_list(&path)?.graph;
    let r = replicate(&g, 8, 1)?.replica.graph;
    let opts = SuiteOptions { reps: 5, seed: 1 };
    let a = timed_suite(&g, "original", &opts)?;
    let b = timed_suite(&r, "replica", &opts)?;
    println!(
        "{:<22} {:>14} {:>14} {:>7}",
        "algorithm", "orig edges/s", "repl edges/s", "ratio"
    );
    for (x, y) in a.iter().zip(&b) {
        println!(
            "{:<22} {:>14.0} {:>14.0} {:>7.2}",
            x.algorithm,
            x.edges_per_second,
            y.edges_per_second,
            y.edges_per_second / x.edges_per_second
        );
    }
    Ok(())
}
