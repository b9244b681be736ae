#![allow(dead_code)]

pub mod oracles;

use std::path::{Path, PathBuf};

use rand::Rng;
use recon::graph::{read_edge_list, Graph};
use recon::rng::rng_from_seed;

pub fn dolphins_path() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data/dolphins.txt")
}

pub fn dolphins() -> Graph {
    read_edge_list(dolphins_path()).expect("dolphins data").graph
}

/// `cliques` cliques of `size` nodes in a ring; consecutive cliques are
/// joined by two disjoint bridges.
pub fn caveman_ring(cliques: usize, size: usize) -> Graph {
    let mut edges = Vec::new();
    for c in 0..cliques {
        let base = c * size;
        for u in 0..size {
            for v in u + 1..size {
                edges.push((base + u, base + v));
            }
        }
        let next = ((c + 1) % cliques) * size;
        edges.push((base, next + 1));
        edges.push((base + 2, next + 3));
    }
    Graph::from_simple_edges(cliques * size, edges)
}

/// Two equal blocks with edge probability `p_in` inside and `p_out` across.
pub fn planted_two_block(n: usize, p_in: f64, p_out: f64, seed: u64) -> Graph {
    let mut rng = rng_from_seed(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let p = if (u < n / 2) == (v < n / 2) { p_in } else { p_out };
            if rng.random::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::from_simple_edges(n, edges)
}
