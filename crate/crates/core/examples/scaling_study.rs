//! Feature evolution of ReCoN replicas for growing scale factors.

use recon::graph::read_edge_list;
use recon::metrics::profile;
use recon::recon::replicate;

fn main() -> recon::Result<()> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/data/dolphins.txt").into());
    let g = read_edge_list(&path)?.graph;
    println!("scale      n       m  maxdeg   gini  clust  diam  comm");
    for scale in [1, 2, 4, 8, 16, 32] {
        let r = replicate(&g, scale, 42)?.replica.graph;
        let f = profile(&r, 42)?;
        println!(
            "{scale:>5} {:>6} {:>7} {:>7} {:>6.3} {:>6.3} {:>5} {:>5}",
            f.n, f.m, f.max_degree, f.degree_gini, f.avg_clustering, f.diameter, f.communities
        );
    }
    Ok(())
}
