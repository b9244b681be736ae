//! Empirical distribution of the edge-switch chain over the three
//! realizations of the degree sequence (2, 2, 2, 2).

use std::collections::BTreeMap;

use recon::graph::Graph;
use recon::randomize::{default_swaps, edge_switch};

fn main() {
    let start = Graph::from_simple_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]);
    let runs = 30_000u64;
    let mut counts: BTreeMap<Vec<(usize, usize)>, u64> = BTreeMap::new();
    for seed in 0..runs {
        let g = edge_switch(&start, default_swaps(start.m()), seed);
        *counts.entry(g.edge_vec()).or_default() += 1;
    }
    for (edges, c) in &counts {
        println!("{edges:?}  {:.4}", *c as f64 / runs as f64);
    }
}
