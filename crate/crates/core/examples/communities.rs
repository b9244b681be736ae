//! PLM on a planted two-block graph.

use rand::Rng;
use recon::community::{mixing_parameter, modularity, plm};
use recon::graph::Graph;
use recon::rng::rng_from_seed;

fn main() -> recon::Result<()> {
    let (n, p_in, p_out) = (100, 0.3, 0.01);
    let mut rng = rng_from_seed(1);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let p = if (u < n / 2) == (v < n / 2) { p_in } else { p_out };
            if rng.random::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    let g = Graph::from_simple_edges(n, edges);

    for seed in 0..5 {
        let p = plm(&g, seed);
        println!(
            "seed {seed}: k={} sizes={:?} Q={:.4} mu={:.4}",
            p.k,
            p.sizes,
            modularity(&g, &p)?,
            mixing_parameter(&g, &p)?
        );
    }
    Ok(())
}
