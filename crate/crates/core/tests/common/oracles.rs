//! Brute-force references for small graphs.
#![allow(clippy::needless_range_loop)]

use recon::graph::{Graph, NodeId};

pub fn triangles(g: &Graph) -> (usize, Vec<usize>) {
    let n = g.n();
    let mut per = vec![0; n];
    let mut total = 0;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c) {
                    total += 1;
                    per[a] += 1;
                    per[b] += 1;
                    per[c] += 1;
                }
            }
        }
    }
    (total, per)
}

/// Core number by repeated deletion of nodes with degree < k.
pub fn cores(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut core = vec![0; n];
    for k in 1..n {
        let mut alive = vec![true; n];
        loop {
            let victim = (0..n).find(|&v| alive[v] && g.neighbors(v).iter().filter(|&&u| alive[u]).count() < k);
            match victim {
                Some(v) => alive[v] = false,
                None => break,
            }
        }
        for v in 0..n {
            if alive[v] {
                core[v] = k;
            }
        }
    }
    core
}

/// Component count via Floyd–Warshall reachability.
pub fn components(g: &Graph) -> usize {
    let n = g.n();
    let mut reach = vec![vec![false; n]; n];
    for v in 0..n {
        reach[v][v] = true;
        for &u in g.neighbors(v) {
            reach[v][u] = true;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if reach[i][k] && reach[k][j] {
                    reach[i][j] = true;
                }
            }
        }
    }
    (0..n).filter(|&v| (0..v).all(|u| !reach[u][v])).count()
}

/// Betweenness by enumerating all shortest paths for every pair.
pub fn betweenness(g: &Graph) -> Vec<f64> {
    let n = g.n();
    let inf = usize::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for v in 0..n {
        d[v][v] = 0;
        for &u in g.neighbors(v) {
            d[v][u] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    // count shortest paths by dynamic programming over distance layers
    let mut count = vec![vec![0.0f64; n]; n];
    for s in 0..n {
        let mut by_dist: Vec<NodeId> = (0..n).filter(|&v| d[s][v] < inf).collect();
        by_dist.sort_by_key(|&v| d[s][v]);
        count[s][s] = 1.0;
        for &v in &by_dist {
            if v == s {
                continue;
            }
            count[s][v] = g
                .neighbors(v)
                .iter()
                .filter(|&&u| d[s][u] + 1 == d[s][v])
                .map(|&u| count[s][u])
                .sum();
        }
    }
    let mut bc = vec![0.0; n];
    for s in 0..n {
        for t in s + 1..n {
            if d[s][t] >= inf {
                continue;
            }
            for v in 0..n {
                if v != s && v != t && d[s][v] + d[v][t] == d[s][t] {
                    bc[v] += count[s][v] * count[v][t] / count[s][t];
                }
            }
        }
    }
    bc
}
