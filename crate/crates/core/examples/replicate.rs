//! Scaled ReCoN replicas of the dolphins network.
//!
//! ```text
//! cargo run --example replicate -- [edge-list] [scale] [seed]
//! ```

use recon::graph::{degree_sequence, read_edge_list, DiameterMode};
use recon::metrics::{compare, profile_with, ProfileOptions};
use recon::recon::replicate;

fn main() -> recon::Result<()> {
    let mut args = std::env::args().skip(1);
    let path = args
        .next()
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/data/dolphins.txt").into());
    let scale: usize = args.next().map_or(4, |s| s.parse().expect("scale"));
    let seed: u64 = args.next().map_or(42, |s| s.parse().expect("seed"));

    let g = read_edge_list(&path)?.graph;
    let run = replicate(&g, scale, seed)?;
    let r = &run.replica.graph;
    println!("original: n={} m={}  communities={}", g.n(), g.m(), run.model.k());
    println!(
        "replica:  n={} m={}  residual forbidden={}",
        r.n(),
        r.m(),
        run.replica.info.residual_forbidden
    );

    // each node of copy i keeps the degree of its original
    let original = degree_sequence(&g).0;
    let exact = degree_sequence(r)
        .0
        .iter()
        .enumerate()
        .all(|(v, &d)| d == original[v % g.n()]);
    println!("degrees preserved per copy: {exact}");

    let opts = ProfileOptions {
        diameter: DiameterMode::Exact,
        seed,
    };
    let report = compare(&profile_with(&g, &opts)?, &profile_with(r, &opts)?);
    for f in &report.features {
        println!(
            "{:>24}  {:>10.4} -> {:>10.4}  ({:?} {:.3})",
            f.feature, f.original, f.replica, f.kind, f.value
        );
    }
    Ok(())
}
