//! Power-law exponent fits for degrees and community sizes.

use recon::community::plm;
use recon::graph::{degree_sequence, read_edge_list};
use recon::models::{plfit, plfit_star, power_law_mean};

fn main() -> recon::Result<()> {
    let fit = plfit(&[1, 1, 1, 1, 1, 1, 3, 3, 1, 2])?;
    println!("mean 1.5 on [1,3]: gamma = {:.4}", fit.gamma);
    println!("check: E[d] = {:.6}", power_law_mean(fit.gamma, 1, 3));
    println!("mean 2.0 on [1,3]: {:?}", plfit(&[1, 2, 3])?);

    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/data/dolphins.txt").into());
    let g = read_edge_list(&path)?.graph;
    let degrees: Vec<usize> = degree_sequence(&g).0.into_iter().filter(|&d| d > 0).collect();
    println!("degrees: {:?}", plfit(&degrees)?);
    let sizes = plm(&g, 42).sizes;
    println!("community sizes {sizes:?}: {:?}", plfit_star(&sizes)?);
    Ok(())
}
