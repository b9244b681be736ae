//! Normalized centrality quantiles of an original graph and its replica.

use recon::graph::read_edge_list;
use recon::metrics::{compare_graphs, CompareOptions, QUANTILES};
use recon::recon::replicate;

fn main() -> recon::Result<()> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/data/dolphins.txt").into());
    let g = read_edge_list(&path)?.graph;
    let r = replicate(&g, 2, 3)?.replica.graph;
    let report = compare_graphs(&g, &r, &CompareOptions::default())?;
    println!("quantiles {QUANTILES:?}");
    for c in &report.centralities {
        println!("{:<12} original {:.3?}", c.measure, c.original);
        println!("{:<12} replica  {:.3?}", "", c.replica);
    }
    Ok(())
}
