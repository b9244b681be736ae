//! Graph algorithm suite used to compare running-time behavior of originals
//! and replicas, plus the timing harness around it.

use std::time::{Duration, Instant};

use rand::seq::index::sample;
use serde::{Deserialize, Serialize};

use crate::community::plm;
use crate::error::{Error, Result};
use crate::graph::{connected_components, Graph, NodeId};
use crate::rng::{derive_seed, rng_from_seed, stream};

pub const DEFAULT_DAMPING: f64 = 0.85;
pub const DEFAULT_TOLERANCE: f64 = 1e-8;
const PAGERANK_MAX_ITERATIONS: usize = 10_000;

/// Power iteration on the random walk with uniform teleport. Isolated nodes
/// spread their mass uniformly. Stops when the L1 change is at most `tol`.
pub fn pagerank(g: &Graph, damping: f64, tol: f64) -> Result<Vec<f64>> {
    let n = g.n();
    if n == 0 {
        return Err(Error::UndefinedInput("pagerank of an empty graph"));
    }
    if !(damping > 0.0 && damping < 1.0) || tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidParams(format!(
            "pagerank damping {damping}, tolerance {tol}"
        )));
    }
    let uniform = 1.0 / n as f64;
    let mut rank = vec![uniform; n];
    let mut next = vec![0.0; n];
    for _ in 0..PAGERANK_MAX_ITERATIONS {
        let dangling: f64 = (0..n).filter(|&v| g.degree(v) == 0).map(|v| rank[v]).sum();
        let base = (1.0 - damping) * uniform + damping * dangling * uniform;
        for (v, slot) in next.iter_mut().enumerate() {
            let inflow: f64 = g.neighbors(v).iter().map(|&u| rank[u] / g.degree(u) as f64).sum();
            *slot = base + damping * inflow;
        }
        let change: f64 = rank.iter().zip(&next).map(|(a, b)| (a - b).abs()).sum();
        std::mem::swap(&mut rank, &mut next);
        if change <= tol {
            break;
        }
    }
    let total: f64 = rank.iter().sum();
    rank.iter_mut().for_each(|r| *r /= total);
    Ok(rank)
}

/// Default number of betweenness sources.
pub fn default_betweenness_samples(n: usize) -> usize {
    (n / 10).max(1)
}

/// Source-sampled Brandes betweenness on the undirected graph (each pair
/// counted once), scaled by `n / samples`. With `samples >= n` every node
/// is a source and the result is exact.
pub fn betweenness_approx(g: &Graph, samples: usize, seed: u64) -> Result<Vec<f64>> {
    if samples == 0 {
        return Err(Error::InvalidParams("betweenness needs at least one sample".into()));
    }
    let n = g.n();
    let sources: Vec<NodeId> = if samples >= n {
        (0..n).collect()
    } else {
        let mut rng = rng_from_seed(derive_seed(seed, stream::SAMPLING));
        sample(&mut rng, n, samples).into_vec()
    };
    let mut score = vec![0.0; n];
    let mut sigma = vec![0.0f64; n];
    let mut dist = vec![usize::MAX; n];
    let mut delta = vec![0.0; n];
    let mut order = Vec::with_capacity(n);
    let mut queue = std::collections::VecDeque::new();
    for &s in &sources {
        order.clear();
        sigma.iter_mut().for_each(|x| *x = 0.0);
        dist.iter_mut().for_each(|x| *x = usize::MAX);
        delta.iter_mut().for_each(|x| *x = 0.0);
        sigma[s] = 1.0;
        dist[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &v in g.neighbors(u) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
                if dist[v] == dist[u] + 1 {
                    sigma[v] += sigma[u];
                }
            }
        }
        for &w in order.iter().rev() {
            for &v in g.neighbors(w) {
                if dist[v] != usize::MAX && dist[v] + 1 == dist[w] {
                    delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
                }
            }
            if w != s {
                score[w] += delta[w];
            }
        }
    }
    let scale = n as f64 / sources.len().max(1) as f64 / 2.0;
    score.iter_mut().for_each(|x| *x *= scale);
    Ok(score)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreDecomposition {
    pub core: Vec<usize>,
    /// Nodes in the order they were peeled.
    pub order: Vec<NodeId>,
}

/// Bucket-peeling k-core decomposition.
pub fn core_decomposition(g: &Graph) -> CoreDecomposition {
    let n = g.n();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let max_deg = degree.iter().copied().max().unwrap_or(0);
    // nodes sorted by degree; bin[d] = first position of degree d
    let mut bin = vec![0usize; max_deg + 2];
    for &d in &degree {
        bin[d + 1] += 1;
    }
    for d in 1..bin.len() {
        bin[d] += bin[d - 1];
    }
    let mut pos = vec![0usize; n];
    let mut vert = vec![0usize; n];
    let mut next = bin.clone();
    for v in 0..n {
        pos[v] = next[degree[v]];
        vert[pos[v]] = v;
        next[degree[v]] += 1;
    }
    for i in 0..n {
        let v = vert[i];
        for &u in g.neighbors(v) {
            if degree[u] > degree[v] {
                let du = degree[u];
                let (pu, pw) = (pos[u], bin[du]);
                let w = vert[pw];
                if u != w {
                    vert.swap(pu, pw);
                    pos[u] = pw;
                    pos[w] = pu;
                }
                bin[du] += 1;
                degree[u] -= 1;
            }
        }
    }
    CoreDecomposition {
        core: degree,
        order: vert,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleCount {
    pub total: usize,
    pub per_node: Vec<usize>,
}

/// Forward algorithm: edges oriented from lower to higher (degree, id) rank,
/// triangles found by merging sorted forward lists.
pub fn triangle_count(g: &Graph) -> TriangleCount {
    let n = g.n();
    let rank_key = |v: NodeId| (g.degree(v), v);
    let forward: Vec<Vec<NodeId>> = (0..n)
        .map(|u| {
            g.neighbors(u)
                .iter()
                .copied()
                .filter(|&v| rank_key(v) > rank_key(u))
                .collect()
        })
        .collect();
    let mut per_node = vec![0usize; n];
    let mut total = 0;
    for u in 0..n {
        for &v in &forward[u] {
            let (a, b) = (&forward[u], &forward[v]);
            let (mut i, mut j) = (0, 0);
            while i < a.len() && j < b.len() {
                match a[i].cmp(&b[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => {
                        let w = a[i];
                        total += 1;
                        per_node[u] += 1;
                        per_node[v] += 1;
                        per_node[w] += 1;
                        i += 1;
                        j += 1;
                    }
                }
            }
        }
    }
    TriangleCount { total, per_node }
}

struct DisjointSets {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        true
    }
}

/// Kruskal without weights: keeps every edge that joins two trees.
pub fn spanning_forest(g: &Graph) -> Vec<(NodeId, NodeId)> {
    let mut sets = DisjointSets::new(g.n());
    g.edges().filter(|&(u, v)| sets.union(u, v)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Algorithm {
    ConnectedComponents,
    Pagerank,
    Betweenness,
    Plm,
    CoreDecomposition,
    TriangleCount,
    SpanningForest,
}

impl Algorithm {
    pub const ALL: [Algorithm; 7] = [
        Algorithm::ConnectedComponents,
        Algorithm::Pagerank,
        Algorithm::Betweenness,
        Algorithm::Plm,
        Algorithm::CoreDecomposition,
        Algorithm::TriangleCount,
        Algorithm::SpanningForest,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::ConnectedComponents => "connected_components",
            Algorithm::Pagerank => "pagerank",
            Algorithm::Betweenness => "betweenness",
            Algorithm::Plm => "plm",
            Algorithm::CoreDecomposition => "core_decomposition",
            Algorithm::TriangleCount => "triangle_count",
            Algorithm::SpanningForest => "spanning_forest",
        }
    }

    fn run(self, g: &Graph, seed: u64) {
        match self {
            Algorithm::ConnectedComponents => drop(std::hint::black_box(connected_components(g))),
            Algorithm::Pagerank => drop(std::hint::black_box(pagerank(g, DEFAULT_DAMPING, DEFAULT_TOLERANCE))),
            Algorithm::Betweenness => drop(std::hint::black_box(betweenness_approx(
                g,
                default_betweenness_samples(g.n()),
                seed,
            ))),
            Algorithm::Plm => drop(std::hint::black_box(plm(g, seed))),
            Algorithm::CoreDecomposition => drop(std::hint::black_box(core_decomposition(g))),
            Algorithm::TriangleCount => drop(std::hint::black_box(triangle_count(g))),
            Algorithm::SpanningForest => drop(std::hint::black_box(spanning_forest(g))),
        }
    }
}

/// One CSV row of benchmark output.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub graph: String,
    pub algorithm: String,
    pub ms: f64,
    pub edges_per_second: f64,
    pub seed: u64,
}

#[derive(Clone, Copy, Debug)]
pub struct SuiteOptions {
    pub reps: usize,
    pub seed: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            reps: 1,
            seed: crate::rng::DEFAULT_SEED,
        }
    }
}

/// Times every algorithm of the suite after one untimed warm-up run; with
/// `reps > 1` the mean is reported. Graphs without edges are rejected.
pub fn timed_suite(g: &Graph, label: &str, opts: &SuiteOptions) -> Result<Vec<BenchRecord>> {
    if g.m() == 0 {
        return Err(Error::UndefinedInput("benchmark suite skipped: graph has no edges"));
    }
    let reps = opts.reps.max(1);
    let mut records = Vec::with_capacity(Algorithm::ALL.len());
    for alg in Algorithm::ALL {
        alg.run(g, opts.seed);
        let mut elapsed = Duration::ZERO;
        for _ in 0..reps {
            let start = Instant::now();
            alg.run(g, opts.seed);
            elapsed += start.elapsed();
        }
        let secs = (elapsed.as_secs_f64() / reps as f64).max(1e-9);
        records.push(BenchRecord {
            graph: label.to_string(),
            algorithm: alg.name().to_string(),
            ms: secs * 1e3,
            edges_per_second: g.m() as f64 / secs,
            seed: opts.seed,
        });
    }
    Ok(records)
}

pub fn write_bench_csv<W: std::io::Write>(records: &[BenchRecord], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in records {
        w.serialize(r)?;
    }
    w.flush().map_err(|e| Error::Csv(e.into()))?;
    Ok(())
}
